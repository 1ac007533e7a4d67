// wulffbez: command-line front end for the exact mixed-volume library.
//
// Every verb prints one JSON document (or CSV for certify --csv). Exit codes:
// 0 success, 1 input error, 2 violated inequality under --expect-holds.

#include "wulffbez/corpus.hpp"
#include "wulffbez/decomposition.hpp"
#include "wulffbez/errors.hpp"
#include "wulffbez/inequality.hpp"
#include "wulffbez/json_io.hpp"
#include "wulffbez/mixed_volume.hpp"
#include "wulffbez/sphere_measure.hpp"
#include "wulffbez/wulff.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wulffbez;

namespace {

struct Options {
    std::string k, m, l, bodies, points, spec, f, u, t, side = "left", form, family = "segments", eps, output;
    int n = 0, r = 2, trials = 100, budget = 1000, chain_r = -1;
    std::uint64_t seed = 1;
    bool oracle = false, expect_holds = false, volume_form = false, polarization = false, no_center = false,
         csv = false;
};

/// "corpus:name" or a path to a polytope JSON file.
Polytope load_body(const std::string& arg, int n) {
    if (arg.rfind("corpus:", 0) == 0) return corpus(arg.substr(7), n);
    return read_polytope_file(arg);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

BodyTuple load_bodies(const std::string& list, int n) {
    BodyTuple out;
    for (const auto& item : split(list)) out.push_back(load_body(item, n));
    return out;
}

/// Dimension of the first non-segment body in the list, for segment names.
int context_dim(const std::string& list, int fallback) {
    if (fallback > 0) return fallback;
    for (const auto& item : split(list)) {
        if (item.rfind("corpus:seg-", 0) == 0) continue;
        return load_body(item, 0).ambient_dim();
    }
    return 0;
}

Direction parse_direction(const std::string& s) {
    VectorXq v;
    const auto parts = split(s);
    v.resize(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_rational(parts[i]);
    return Direction(v);
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw std::invalid_argument("side must be left or right, got '" + s + "'");
}

std::map<Direction, Rational> load_f(const std::string& path) {
    const SupportSpec spec = support_spec_from_json(read_json_file(path));
    return spec.entries;
}

void emit(const Options& opt, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot write '" + opt.output + "'");
    out << text;
}

void emit(const Options& opt, const json& j) { emit(opt, j.dump(2)); }

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw std::invalid_argument(std::string("missing required option ") + flag);
}

int run_hull(const Options& opt) {
    if (!opt.points.empty()) {
        emit(opt, polytope_details_to_json(read_polytope_file(opt.points)));
    } else {
        require(opt.k, "--K");
        emit(opt, polytope_details_to_json(load_body(opt.k, opt.n)));
    }
    return 0;
}

int run_volume(const Options& opt) {
    require(opt.k, "--K");
    const Polytope k = load_body(opt.k, opt.n);
    emit(opt, json{{"volume", rational_to_json(k.volume())}, {"pairing", rational_to_json(pairing_volume(k))}});
    return 0;
}

int run_mixedvol(const Options& opt) {
    require(opt.bodies, "--bodies");
    const BodyTuple bodies = load_bodies(opt.bodies, context_dim(opt.bodies, opt.n));
    json j{{"mixed_volume", rational_to_json(mixed_volume(bodies))}};
    if (opt.oracle) j["oracle"] = rational_to_json(mixed_volume_oracle(bodies));
    emit(opt, j);
    return 0;
}

int run_measure(const Options& opt) {
    DiscreteSphereMeasure mu(1);
    int n = opt.n;
    if (!opt.bodies.empty()) {
        n = context_dim(opt.bodies, opt.n);
        mu = mixed_area_measure(load_bodies(opt.bodies, n));
    } else {
        require(opt.k, "--K");
        const Polytope k = load_body(opt.k, opt.n);
        n = k.ambient_dim();
        mu = surface_area_measure(k);
    }
    json j = measure_to_json(mu);
    if (!opt.l.empty()) j["pairing"] = rational_to_json(pairing(load_body(opt.l, n), mu));
    emit(opt, j);
    return 0;
}

int run_wulff(const Options& opt) {
    require(opt.spec, "--spec");
    emit(opt, polytope_details_to_json(wulff_shape(support_spec_from_json(read_json_file(opt.spec)))));
    return 0;
}

PerturbationSpec load_perturbation(const Options& opt) {
    require(opt.k, "--K");
    require(opt.f, "--f");
    const Polytope k = load_body(opt.k, opt.n);
    auto f = load_f(opt.f);
    return opt.no_center ? make_perturbation(k, std::move(f)) : centered(k, std::move(f));
}

int run_perturb(const Options& opt) {
    require(opt.t, "--t");
    const PerturbationSpec spec = load_perturbation(opt);
    emit(opt, polytope_details_to_json(perturb(spec, parse_rational(opt.t))));
    return 0;
}

int run_derivative(const Options& opt) {
    const Side side = parse_side(opt.side);
    if (!opt.m.empty()) {
        require(opt.k, "--K");
        require(opt.f, "--f");
        const Polytope k = load_body(opt.k, opt.n);
        const ProbeReport rep = derivative_probe(k, load_body(opt.m, k.ambient_dim()), load_f(opt.f), side);
        emit(opt, probe_report_to_json(rep));
        return 0;
    }
    const PerturbationSpec spec = load_perturbation(opt);
    if (opt.volume_form) {
        emit(opt, derivative_report_to_json(volume_mixed_derivative(spec, side)));
        return 0;
    }
    require(opt.u, "--u");
    emit(opt, derivative_report_to_json(support_derivative(spec, parse_direction(opt.u), side)));
    return 0;
}

int run_check(const Options& opt) {
    require(opt.form, "--form");
    require(opt.k, "--K");
    require(opt.l, "--L");
    const Polytope k = load_body(opt.k, opt.n);
    const BodyTuple ls = load_bodies(opt.l, k.ambient_dim());
    const InequalityForm form = InequalityForm::parse(opt.form, opt.r);
    const InequalityReport rep = opt.polarization ? evaluate_by_polarization(form, ls, k) : evaluate(form, ls, k);
    emit(opt, report_to_json(rep));
    return opt.expect_holds && rep.verdict == Verdict::violated ? 2 : 0;
}

int run_certify(const Options& opt) {
    require(opt.k, "--K");
    const Polytope k = load_body(opt.k, opt.n);
    const CertifyReport rep = simplex_certify(k, opt.trials, opt.seed);
    if (opt.csv) emit(opt, certify_csv(rep));
    else emit(opt, certify_summary_to_json(rep));
    const bool violated = rep.b_full.violated + rep.main.violated > 0;
    return opt.expect_holds && violated ? 2 : 0;
}

int run_search(const Options& opt) {
    require(opt.k, "--K");
    const Polytope k = load_body(opt.k, opt.n);
    const SearchResult res = counterexample_search(k, parse_family(opt.family), opt.budget);
    json j{{"found", res.violation.has_value()}, {"evaluated", res.evaluated}};
    if (res.violation) j["report"] = report_to_json(*res.violation);
    emit(opt, j);
    return opt.expect_holds && res.violation ? 2 : 0;
}

int run_witness(const Options& opt) {
    require(opt.k, "--K");
    const Polytope k = load_body(opt.k, opt.n);
    if (opt.chain_r >= 0) {
        require(opt.m, "--M");
        emit(opt, chain_check_to_json(homothet_chain_check(k, load_body(opt.m, k.ambient_dim()), opt.chain_r)));
        return 0;
    }
    std::vector<Rational> eps;
    for (const auto& e : split(opt.eps)) eps.push_back(parse_rational(e));
    const auto w = weak_witness_search(k, eps);
    json j{{"found", w.has_value()}};
    if (w) j["witness"] = witness_to_json(*w);
    emit(opt, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mixed volumes, sphere measures, Wulff shapes and Bezout-type inequalities"};
    app.require_subcommand(1);
    Options opt;

    auto body = [&](CLI::App* sub) {
        sub->add_option("--K", opt.k, "Body: corpus:<name> or polytope JSON file");
        sub->add_option("--n", opt.n, "Ambient dimension for segment corpus names");
        sub->add_option("-o,--output", opt.output, "Write the report to a file");
    };

    auto* hull = app.add_subcommand("hull", "Vertices, facets and volume of a point set or body");
    body(hull);
    hull->add_option("--points", opt.points, "Polytope JSON file whose vertex list may be redundant");

    auto* volume = app.add_subcommand("volume", "Exact volume");
    body(volume);

    auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume V(K_1, ..., K_n)");
    body(mixedvol);
    mixedvol->add_option("--bodies", opt.bodies, "Comma-separated list of n bodies");
    mixedvol->add_flag("--oracle", opt.oracle, "Also evaluate by interpolation");

    auto* measure = app.add_subcommand("measure", "Surface area measure of K or mixed area measure of --bodies");
    body(measure);
    measure->add_option("--bodies", opt.bodies, "n-1 bodies for a mixed area measure");
    measure->add_option("--L", opt.l, "Also report the pairing (1/n) ∫ h_L dμ");

    auto* wulff = app.add_subcommand("wulff", "Wulff shape of a support spec");
    body(wulff);
    wulff->add_option("--spec", opt.spec, "SupportSpec JSON file");

    auto* perturb = app.add_subcommand("perturb", "Perturbed body K_t = W(h_K + t f)");
    body(perturb);
    perturb->add_option("--f", opt.f, "Perturbation as SupportSpec JSON file");
    perturb->add_option("--t", opt.t, "Parameter t as p/q");
    perturb->add_flag("--no-center", opt.no_center, "Use K as given (origin must be interior)");

    auto* derivative = app.add_subcommand("derivative", "One-sided derivatives at t = 0");
    body(derivative);
    derivative->add_option("--f", opt.f, "Perturbation as SupportSpec JSON file");
    derivative->add_option("--side", opt.side, "left or right");
    derivative->add_option("--u", opt.u, "Direction for the support derivative, e.g. 1,0");
    derivative->add_flag("--volume", opt.volume_form, "Derivative of V(K_t, K[n-1]) instead");
    derivative->add_option("--M", opt.m, "Derivative of F(t) with this M instead");
    derivative->add_flag("--no-center", opt.no_center, "Use K as given (origin must be interior)");

    auto* check = app.add_subcommand("check", "Evaluate one inequality instance");
    body(check);
    check->add_option("--form", opt.form, "b-full, main, bezout-r, iso-n, iso-main-n, iso-zonoid, iso-2");
    check->add_option("--r", opt.r, "r for bezout-r");
    check->add_option("--L", opt.l, "Comma-separated L bodies");
    check->add_flag("--polarization", opt.polarization, "Compute sides from mixed volumes directly");
    check->add_flag("--expect-holds", opt.expect_holds, "Exit 2 on a violated verdict");

    auto* certify = app.add_subcommand("certify", "Random b-full / main trials against K");
    body(certify);
    certify->add_option("--trials", opt.trials, "Number of random tuples");
    certify->add_option("--seed", opt.seed, "Generator seed");
    certify->add_flag("--csv", opt.csv, "Emit one CSV row per instance");
    certify->add_flag("--expect-holds", opt.expect_holds, "Exit 2 if any instance is violated");

    auto* search = app.add_subcommand("search", "Look for a violated bezout-r / main instance");
    body(search);
    search->add_option("--family", opt.family, "segments, faces, truncations, boxes or all");
    search->add_option("--budget", opt.budget, "Maximum number of evaluations");
    search->add_flag("--expect-holds", opt.expect_holds, "Exit 2 if a violation is found");

    auto* witness = app.add_subcommand("witness", "Weak decomposability witness by facet moves");
    body(witness);
    witness->add_option("--eps", opt.eps, "Comma-separated facet moves (default: fractions of the survival bound)");
    witness->add_option("--chain-r", opt.chain_r, "Instead compare S(M[r],K[n-1-r]) with λ^r S_K");
    witness->add_option("--M", opt.m, "Body M for --chain-r");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*hull) return run_hull(opt);
        if (*volume) return run_volume(opt);
        if (*mixedvol) return run_mixedvol(opt);
        if (*measure) return run_measure(opt);
        if (*wulff) return run_wulff(opt);
        if (*perturb) return run_perturb(opt);
        if (*derivative) return run_derivative(opt);
        if (*check) return run_check(opt);
        if (*certify) return run_certify(opt);
        if (*search) return run_search(opt);
        if (*witness) return run_witness(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const geometry_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
