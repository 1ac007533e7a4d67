#include "wulffbez/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wulffbez {

json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected a rational as \"p/q\" string, got " + j.dump());
}

json direction_to_json(const Direction& w) {
    json arr = json::array();
    for (int i = 0; i < w.dim(); ++i) {
        if (w[i] >= std::numeric_limits<long long>::min() && w[i] <= std::numeric_limits<long long>::max()) {
            arr.push_back(w[i].convert_to<long long>());
        } else {
            arr.push_back(w[i].str());
        }
    }
    return arr;
}

Direction direction_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("direction must be a nonempty array: " + j.dump());
    VectorXq v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = rational_from_json(j[i]);
    return Direction(v);
}

namespace {

int read_dim(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("expected an object with integer field \"n\"");
    }
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("\"n\" must be positive");
    return n;
}

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return j[name];
}

}  // namespace

json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) {
        json row = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(rational_to_json(v[i]));
        verts.push_back(std::move(row));
    }
    return json{{"n", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
    const int n = read_dim(j);
    const json& verts = field(j, "vertices");
    if (!verts.is_array() || verts.empty()) throw std::invalid_argument("\"vertices\" must be a nonempty array");
    PointList pts;
    for (const auto& row : verts) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("vertex " + row.dump() + " is not a point of R^" + std::to_string(n));
        }
        VectorXq p(n);
        for (int i = 0; i < n; ++i) p[i] = rational_from_json(row[i]);
        pts.push_back(std::move(p));
    }
    return convex_hull(std::move(pts), n);
}

json polytope_details_to_json(const Polytope& p) {
    json j = polytope_to_json(p);
    j["dim"] = p.dim();
    j["volume"] = rational_to_json(p.volume());
    json facets = json::array();
    for (const auto& f : p.facets()) {
        facets.push_back(json{{"normal", direction_to_json(f.normal)},
                              {"offset", rational_to_json(f.offset)},
                              {"coweight", rational_to_json(f.co_weight)}});
    }
    j["facets"] = std::move(facets);
    return j;
}

json measure_to_json(const DiscreteSphereMeasure& mu) {
    json atoms = json::array();
    for (const auto& [w, c] : mu.atoms()) {
        atoms.push_back(json{{"dir", direction_to_json(w)}, {"coweight", rational_to_json(c)}});
    }
    return json{{"n", mu.ambient_dim()}, {"atoms", std::move(atoms)}};
}

DiscreteSphereMeasure measure_from_json(const json& j) {
    const int n = read_dim(j);
    DiscreteSphereMeasure mu(n);
    for (const auto& atom : field(j, "atoms")) {
        const Rational c = rational_from_json(field(atom, "coweight"));
        if (c < 0) throw std::invalid_argument("negative atom " + atom.dump());
        mu.add(direction_from_json(field(atom, "dir")), c);
    }
    return mu;
}

json support_spec_to_json(const SupportSpec& spec) {
    json entries = json::array();
    for (const auto& [w, b] : spec.entries) {
        entries.push_back(json{{"dir", direction_to_json(w)}, {"value", rational_to_json(b)}});
    }
    return json{{"n", spec.n}, {"entries", std::move(entries)}};
}

SupportSpec support_spec_from_json(const json& j) {
    SupportSpec spec;
    spec.n = read_dim(j);
    for (const auto& e : field(j, "entries")) {
        const Direction w = direction_from_json(field(e, "dir"));
        if (w.dim() != spec.n) throw std::invalid_argument("entry direction " + e.dump() + " has wrong length");
        if (!spec.entries.emplace(w, rational_from_json(field(e, "value"))).second) {
            throw std::invalid_argument("duplicate direction " + w.str());
        }
    }
    return spec;
}

json report_to_json(const InequalityReport& report) {
    json bodies = json::array();
    for (const auto& l : report.ls) bodies.push_back(polytope_to_json(l));
    bodies.push_back(polytope_to_json(report.k));
    json j{{"form", report.form.name()}};
    if (report.form.id == FormId::bezout_r) j["r"] = report.form.r;
    j["lhs"] = rational_to_json(report.lhs);
    j["rhs"] = rational_to_json(report.rhs);
    j["ratio"] = report.ratio ? rational_to_json(*report.ratio) : json(nullptr);
    j["verdict"] = to_string(report.verdict);
    j["bodies"] = std::move(bodies);
    return j;
}

json derivative_report_to_json(const DerivativeReport& report) {
    json steps = json::array(), quotients = json::array();
    for (const auto& t : report.steps) steps.push_back(rational_to_json(t));
    for (const auto& q : report.quotients) quotients.push_back(rational_to_json(q));
    return json{{"side", to_string(report.side)},
                {"steps", std::move(steps)},
                {"quotients", std::move(quotients)},
                {"exact", report.exact},
                {"value", rational_to_json(report.value)},
                {"facet_support", report.facet_support}};
}

json probe_report_to_json(const ProbeReport& report) {
    return json{{"side", to_string(report.side)},
                {"value", rational_to_json(report.value)},
                {"mixed_rate", rational_to_json(report.mixed_rate)},
                {"volume_rate", rational_to_json(report.volume_rate)},
                {"exact", report.exact},
                {"certifies_violation", report.certifies_violation}};
}

json witness_to_json(const Witness& w) {
    return json{{"mover", polytope_to_json(w.mover)},
                {"moved_facet", direction_to_json(w.moved_facet)},
                {"epsilon", rational_to_json(w.epsilon)},
                {"absolutely_continuous", w.absolutely_continuous},
                {"homothetic", w.homothetic},
                {"sum_measure", measure_to_json(w.sum_measure)},
                {"base_measure", measure_to_json(w.base_measure)}};
}

json chain_check_to_json(const ChainCheck& check) {
    return json{{"lambda", rational_to_json(check.lambda)},
                {"equal", check.mixed == check.scaled},
                {"mixed", measure_to_json(check.mixed)},
                {"scaled", measure_to_json(check.scaled)}};
}

json certify_summary_to_json(const CertifyReport& report) {
    auto counts = [](const VerdictCounts& c) {
        return json{{"holds_strict", c.holds_strict},
                    {"equality", c.equality},
                    {"violated", c.violated},
                    {"indeterminate_zero", c.indeterminate}};
    };
    return json{{"trials", report.trials},
                {"seed", report.seed},
                {"b-full", counts(report.b_full)},
                {"main", counts(report.main)}};
}

std::string certify_csv(const CertifyReport& report) {
    std::ostringstream out;
    out << "trial,form,lhs,rhs,verdict\n";
    for (const auto& row : report.rows) {
        out << row.trial << ',' << InequalityForm{row.form}.name() << ',' << to_string(row.lhs) << ','
            << to_string(row.rhs) << ',' << to_string(row.verdict) << '\n';
    }
    return out.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Polytope read_polytope_file(const std::string& path) {
    try {
        return polytope_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
}

}  // namespace wulffbez
