#include "arcs/json_io.hpp"

#include <fstream>

namespace arcs {

json fe_to_json(const Field& F, Fe a) { return json(F.coeffs(a)); }

Fe fe_from_json(const Field& F, const json& j) {
    if (j.is_number_integer()) return F.from_int(j.get<int64_t>());
    if (!j.is_array() || j.size() != F.h())
        fail(errc::io_error, "field element must be an array of h coefficients");
    std::vector<uint32_t> c;
    for (const auto& v : j) {
        int64_t x = v.get<int64_t>();
        c.push_back((uint32_t)(((x % F.p()) + F.p()) % F.p()));
    }
    return F.from_coeffs(c);
}

json point_to_json(const Field& F, const Point& x) {
    return json::array({fe_to_json(F, x.c[0]), fe_to_json(F, x.c[1]), fe_to_json(F, x.c[2])});
}

Point point_from_json(const Field& F, const json& j) {
    if (!j.is_array() || j.size() != 3) fail(errc::io_error, "point must have 3 coordinates");
    return normalize_point(F, {fe_from_json(F, j[0]), fe_from_json(F, j[1]), fe_from_json(F, j[2])});
}

json points_payload(const Field& F, const std::vector<Point>& pts) {
    json out;
    out["p"] = F.p();
    out["h"] = F.h();
    out["modulus"] = F.modulus();
    json arr = json::array();
    for (const Point& x : pts) arr.push_back(point_to_json(F, x));
    out["points"] = std::move(arr);
    return out;
}

json arc_to_json(const Arc& A) { return points_payload(A.field(), A.points()); }

std::shared_ptr<Field> field_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("h")) fail(errc::io_error, "missing field header p/h");
    uint32_t p = j["p"].get<uint32_t>();
    uint32_t h = j["h"].get<uint32_t>();
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        auto mod = j["modulus"].get<std::vector<uint32_t>>();
        return std::make_shared<Field>(Field::make(p, h, mod));
    }
    return std::make_shared<Field>(Field::make(p, h));
}

std::vector<Point> points_from_json(const Field& F, const json& j) {
    if (!j.contains("points") || !j["points"].is_array())
        fail(errc::io_error, "missing points array");
    std::vector<Point> pts;
    for (const auto& pj : j["points"]) pts.push_back(point_from_json(F, pj));
    return pts;
}

json hompoly_to_json(const HomPoly& f) {
    json out;
    out["degree"] = f.degree();
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json t;
        t["e"] = json::array({m[0], m[1], m[2]});
        t["c"] = fe_to_json(f.field(), c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

HomPoly hompoly_from_json(const Field& F, const json& j) {
    int degree = j.at("degree").get<int>();
    HomPoly f(F, degree);
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("e");
        Mono m{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        if (m[0] + m[1] + m[2] != degree)
            fail(errc::io_error, "term degree does not match polynomial degree");
        f.set_coeff(m, F.add(f.coeff(m), fe_from_json(F, t.at("c"))));
    }
    return f;
}

json ttform_to_json(const BiPoly& F) {
    json out;
    out["t"] = F.deg_x();
    json terms = json::array();
    for (const auto& [m, c] : F.terms()) {
        json t;
        t["ex"] = json::array({m.first[0], m.first[1], m.first[2]});
        t["ey"] = json::array({m.second[0], m.second[1], m.second[2]});
        t["c"] = fe_to_json(F.field(), c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

BiPoly ttform_from_json(const Field& F, const json& j) {
    int t = j.at("t").get<int>();
    BiPoly f(F, t, t);
    for (const auto& term : j.at("terms")) {
        const auto& ex = term.at("ex");
        const auto& ey = term.at("ey");
        BiMono m{{ex[0].get<int>(), ex[1].get<int>(), ex[2].get<int>()},
                 {ey[0].get<int>(), ey[1].get<int>(), ey[2].get<int>()}};
        f.set_coeff(m, F.add(f.coeff(m), fe_from_json(F, term.at("c"))));
    }
    return f;
}

json certificate_to_json(const Arc& A, const CurveCertificate& cert) {
    json out;
    out["arc"] = arc_to_json(A);
    out["curves"] = json::array({hompoly_to_json(cert.curves[0]), hompoly_to_json(cert.curves[1])});
    out["d"] = cert.d;
    out["gcd_degree"] = 0;
    out["checked"] = cert.vanish_on_arc && cert.coprime;
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::io_error, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace arcs
