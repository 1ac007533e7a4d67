#include "wulffbez/corpus.hpp"

#include "wulffbez/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace wulffbez {

namespace {

VectorXq origin(int n) { return VectorXq::Constant(n, Rational(0)); }

Polytope simplex(int n) {
    PointList pts{origin(n)};
    for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
    return convex_hull(std::move(pts), n);
}

/// [0,1]^k in the first k coordinates of R^n.
PointList cube_points(int k, int n) {
    PointList pts;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        VectorXq p = origin(n);
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) p[i] = 1;
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

Polytope octahedron(int n) {
    PointList pts;
    for (int i = 0; i < n; ++i) {
        pts.push_back(unit_vector(n, i));
        pts.push_back(-unit_vector(n, i));
    }
    return convex_hull(std::move(pts), n);
}

int parse_dim(const std::string& name, const std::string& prefix) {
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("unknown corpus name '" + name + "'");
    }
    const int n = std::stoi(rest);
    if (n < 1 || n > 8) throw std::invalid_argument("corpus dimension out of range in '" + name + "'");
    return n;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Polytope from_user_corpus(const std::string& name) {
    const char* dir = std::getenv("WULFFBEZ_CORPUS_DIR");
    if (dir != nullptr) {
        const auto path = std::filesystem::path(dir) / (name + ".json");
        if (std::filesystem::exists(path)) return read_polytope_file(path.string());
    }
    throw std::invalid_argument("unknown corpus name '" + name + "'");
}

}  // namespace

Polytope corpus(const std::string& name, int n) {
    if (name == "square") return convex_hull(cube_points(2, 2), 2);
    if (name == "octahedron") return octahedron(3);
    if (name == "hexagon") {
        return simplex(2) + convex_hull({origin(2), -unit_vector(2, 0), -unit_vector(2, 1)}, 2);
    }
    if (name == "prism") {
        PointList pts;
        for (int z = 0; z <= 1; ++z) {
            for (const auto& p : {origin(3), unit_vector(3, 0), unit_vector(3, 1)}) {
                VectorXq q = p;
                q[2] = z;
                pts.push_back(std::move(q));
            }
        }
        return convex_hull(std::move(pts), 3);
    }
    if (name == "cylinder-3") return segment(unit_vector(3, 2)) + convex_hull(cube_points(2, 3), 3);
    if (name == "truncated-simplex-3") return truncate(simplex(3), Direction{-1, -1, -1}, Rational(1, 2));
    if (starts_with(name, "seg-")) {
        const std::string axis = name.substr(4);
        const int dim = n == 0 ? 2 : n;
        int i = -1;
        if (axis == "x") i = 0;
        else if (axis == "y") i = 1;
        else if (axis == "z") i = 2;
        else i = parse_dim(name, "seg-") - 1;
        if (i >= dim) throw std::invalid_argument("corpus '" + name + "' needs dimension > " + std::to_string(dim));
        return segment(unit_vector(dim, i));
    }
    if (starts_with(name, "centered-simplex-")) {
        const Polytope s = simplex(parse_dim(name, "centered-simplex-"));
        return translate(s, -vertex_centroid(s));
    }
    if (starts_with(name, "simplex-")) return simplex(parse_dim(name, "simplex-"));
    if (starts_with(name, "cube-")) {
        const int d = parse_dim(name, "cube-");
        return convex_hull(cube_points(d, d), d);
    }
    if (starts_with(name, "octahedron-")) return octahedron(parse_dim(name, "octahedron-"));
    if (starts_with(name, "pyramid-")) {
        const int d = parse_dim(name, "pyramid-");
        if (d < 2) throw std::invalid_argument("pyramid needs dimension >= 2");
        PointList pts = cube_points(d - 1, d);
        pts.push_back(unit_vector(d, d - 1));
        return convex_hull(std::move(pts), d);
    }
    return from_user_corpus(name);
}

std::vector<std::string> corpus_names() {
    return {"simplex-2", "simplex-3", "simplex-4",  "centered-simplex-2", "square",     "cube-3",
            "cube-4",    "octahedron", "prism",     "pyramid-3",          "cylinder-3", "truncated-simplex-3",
            "hexagon"};
}

}  // namespace wulffbez
