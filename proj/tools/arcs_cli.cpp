// Command-line front end: file-based, deterministic JSON in and out.
// Exit codes: 0 success, 1 mathematical failure (violation, failed check),
// 2 input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "arcs/curvefinder.hpp"
#include "arcs/dualcurve.hpp"
#include "arcs/json_io.hpp"
#include "arcs/search.hpp"
#include "arcs/socle.hpp"
#include "arcs/tangents.hpp"
#include "arcs/ttform.hpp"

using namespace arcs;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
    std::string input;
    std::string output;
    bool meta = false;
    int jobs = 1; // accepted for interface stability; results never depend on it
};

void emit(const Options& opt, json j) {
    if (opt.meta) {
        json m;
        m["tool"] = "arcs";
        m["version"] = kVersion;
        j["meta"] = std::move(m);
    }
    if (opt.output.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(opt.output, j);
}

void emit_lines(const Options& opt, const std::vector<json>& lines) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) fail(errc::io_error, "cannot open " + opt.output + " for writing");
        out = &file;
    }
    for (const auto& j : lines) *out << j.dump() << '\n';
}

struct LoadedArc {
    std::shared_ptr<Field> field;
    Arc arc;
};

LoadedArc load_arc(const std::string& path) {
    json j = read_json_file(path);
    auto F = field_from_json(j);
    auto pts = points_from_json(*F, j);
    auto v = Arc::validate(*F, pts);
    if (std::holds_alternative<ArcViolation>(v)) {
        const auto& viol = std::get<ArcViolation>(v);
        if (std::holds_alternative<DuplicateWitness>(viol))
            fail(errc::coincident_points, "input points contain a duplicate");
        fail(errc::bad_params, "input points contain a collinear triple");
    }
    return LoadedArc{F, std::get<Arc>(std::move(v))};
}

json form_json(const Field& F, const LinearForm& l) {
    return json::array({fe_to_json(F, l.c[0]), fe_to_json(F, l.c[1]), fe_to_json(F, l.c[2])});
}

// q must be a prime power p^h.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
    for (uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p != 0) continue;
        uint32_t h = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++h;
        }
        if (r != 1) fail(errc::non_prime, "q is not a prime power");
        return {p, h};
    }
    fail(errc::non_prime, "q is not a prime power");
}

int cmd_validate(const Options& opt) {
    json j = read_json_file(opt.input);
    auto F = field_from_json(j);
    auto pts = points_from_json(*F, j);
    auto v = Arc::validate(*F, pts);
    json out;
    if (std::holds_alternative<Arc>(v)) {
        const Arc& A = std::get<Arc>(v);
        out["valid"] = true;
        out["size"] = A.size();
        out["t"] = A.t();
        out["complete"] = is_complete(A);
        emit(opt, out);
        return 0;
    }
    out["valid"] = false;
    const auto& viol = std::get<ArcViolation>(v);
    json w;
    if (const auto* d = std::get_if<DuplicateWitness>(&viol)) {
        w["kind"] = "duplicate";
        w["indices"] = json::array({d->i, d->j});
    } else {
        const auto& c = std::get<CollinearWitness>(viol);
        w["kind"] = "collinear";
        w["indices"] = json::array({c.i, c.j, c.k});
    }
    out["violation"] = std::move(w);
    emit(opt, out);
    return 1;
}

int cmd_tangents(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto sys = build_tangent_system(A);
    json out;
    out["base"] = point_to_json(*F, sys.base());
    out["t"] = A.t();
    json entries = json::array();
    for (const Point& a : A.sorted_points()) {
        json e;
        e["point"] = point_to_json(*F, a);
        json lines = json::array();
        for (const LinearForm& l : sys.factors_at(a)) lines.push_back(form_json(*F, l));
        e["tangent_lines"] = std::move(lines);
        e["form"] = hompoly_to_json(sys.form_at(a));
        entries.push_back(std::move(e));
    }
    out["forms"] = std::move(entries);
    emit(opt, out);
    return 0;
}

int cmd_lemma_check(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto sys = build_tangent_system(A);
    auto rep = check_lemma_of_tangents(sys);
    json out;
    out["pass"] = rep.pass;
    if (!rep.pass) {
        out["x"] = point_to_json(*F, rep.x);
        out["y"] = point_to_json(*F, rep.y);
    }
    emit(opt, out);
    return rep.pass ? 0 : 1;
}

int cmd_dual(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto sys = build_tangent_system(A);
    auto D = build_dual_curve(sys);
    auto rep = verify_dual(sys, D);
    json out;
    out["m"] = D.m;
    json phi = hompoly_to_json(D.phi);
    phi["variables"] = "dual";
    out["phi"] = std::move(phi);
    out["verified"] = rep.pass;
    if (rep.bad_point) out["bad_point"] = point_to_json(*F, *rep.bad_point);
    if (rep.bad_tangent) out["bad_tangent"] = form_json(*F, *rep.bad_tangent);
    emit(opt, out);
    return rep.pass ? 0 : 1;
}

int cmd_socle(const Options& opt, int degree) {
    auto [F, A] = load_arc(opt.input);
    auto V = vanishing_space(*F, A.sorted_points(), degree);
    auto S = socle(*F, A.sorted_points(), degree);
    json out;
    out["degree"] = degree;
    out["vanishing_dim"] = V.dim();
    out["socle_size"] = S.size();
    json pts = json::array();
    for (const Point& x : S) pts.push_back(point_to_json(*F, x));
    out["socle"] = std::move(pts);
    emit(opt, out);
    return 0;
}

int cmd_ttform(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto sys = build_tangent_system(A);
    BiPoly Ft = build_F(A, sys);
    auto rep = verify_F(A, sys, Ft);
    json out = ttform_to_json(Ft);
    out["verified"] = rep.pass;
    if (!rep.pass) out["witness"] = rep.witness;
    emit(opt, out);
    return rep.pass ? 0 : 1;
}

int cmd_rho(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto sys = build_tangent_system(A);
    BiPoly Ft = build_F(A, sys);
    auto B = compute_bounds(F->q(), F->p(), A.t());
    auto R = rho_system(Ft, B);
    bool all_vanish = true;
    json rhos = json::array();
    for (const Mono& w : R.W) {
        const HomPoly& rho = R.rhos.at(w);
        bool vanish = true;
        for (const Point& a : A.sorted_points())
            if (!F->is_zero(rho.eval(a))) vanish = false;
        all_vanish = all_vanish && vanish;
        json e;
        e["w"] = json::array({w[0], w[1], w[2]});
        e["poly"] = hompoly_to_json(rho);
        e["vanishes_on_arc"] = vanish;
        rhos.push_back(std::move(e));
    }
    json out;
    out["t"] = A.t();
    out["pe"] = B.pe;
    out["rhos"] = std::move(rhos);
    out["all_vanish"] = all_vanish;
    emit(opt, out);
    return all_vanish ? 0 : 1;
}

int cmd_curves(const Options& opt) {
    auto [F, A] = load_arc(opt.input);
    auto res = coprime_certificate(A);
    if (const auto* conic = std::get_if<ConicContainment>(&res)) {
        json out;
        out["contained_in_conic"] = true;
        out["conic"] = hompoly_to_json(conic->conic);
        emit(opt, out);
        return 0;
    }
    const auto& cert = std::get<CurveCertificate>(res);
    emit(opt, certificate_to_json(A, cert));
    return (cert.vanish_on_arc && cert.coprime) ? 0 : 1;
}

int cmd_classify(const Options& opt, uint32_t q, std::size_t size, bool complete,
                 bool allow_large) {
    auto [p, h] = factor_prime_power(q);
    Field F = Field::make(p, h);
    auto res = classify(F, size, complete, allow_large);
    json head;
    head["q"] = res.q;
    head["size"] = res.size;
    head["complete_only"] = res.complete_only;
    head["count"] = res.count;
    std::vector<json> lines{std::move(head)};
    for (const auto& rep : res.representatives) lines.push_back(points_payload(F, rep));
    emit_lines(opt, lines);
    return 0;
}

int cmd_kestenband(const Options& opt, uint32_t q) {
    auto [p, h] = factor_prime_power(q);
    Field F = Field::make(p, h);
    auto K = kestenband(F);
    json out;
    out["arc"] = arc_to_json(K.arc);
    json H = json::array();
    for (int i = 0; i < 3; ++i)
        H.push_back(json::array({fe_to_json(F, K.spec.H[i][0]), fe_to_json(F, K.spec.H[i][1]),
                                 fe_to_json(F, K.spec.H[i][2])}));
    out["H"] = std::move(H);
    out["hermitian1"] = hompoly_to_json(K.hermitian1);
    out["hermitian2"] = hompoly_to_json(K.hermitian2);
    out["complete"] = is_complete(K.arc);
    emit(opt, out);
    return 0;
}

int cmd_bounds(const Options& opt, uint32_t q, uint32_t p, uint32_t t,
               std::optional<uint32_t> dprime) {
    Bounds B = compute_bounds(q, p, t, dprime);
    json out;
    out["q"] = B.q;
    out["p"] = B.p;
    out["t"] = B.t;
    out["eps"] = B.eps;
    out["pe"] = B.pe;
    out["d"] = B.d;
    out["cond_ok"] = B.cond_ok;
    if (B.boundeddeg_value) {
        out["bound_num"] = B.boundeddeg_value->num;
        out["bound_den"] = B.boundeddeg_value->den;
        out["max_arc"] = *B.boundeddeg_max_arc;
    }
    emit(opt, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar arc toolkit: tangent systems, dual curves, (t,t)-forms, "
                 "coprime curve certificates, and arc classification over GF(q)"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--meta", opt.meta, "attach tool provenance to the output");
    app.add_option("--jobs", opt.jobs, "worker count hint (results are identical for any value)");

    auto add_io = [&](CLI::App* c, bool needs_input) {
        if (needs_input)
            c->add_option("input", opt.input, "arc JSON file")->required();
        c->add_option("-o,--output", opt.output, "output path (default: stdout)");
    };

    auto* arc = app.add_subcommand("arc", "operations on a planar arc");
    arc->require_subcommand(1);

    auto* validate = arc->add_subcommand("validate", "check the no-three-collinear property");
    add_io(validate, true);
    auto* tangents = arc->add_subcommand("tangents", "scaled tangent forms at every arc point");
    add_io(tangents, true);
    auto* lemma = arc->add_subcommand("lemma-check", "verify f_x(y) = (-1)^(t+1) f_y(x)");
    add_io(lemma, true);
    auto* dual = arc->add_subcommand("dual", "dual-plane curve through all tangents");
    add_io(dual, true);
    auto* socle_cmd = arc->add_subcommand("socle", "socle and vanishing-space dimension");
    add_io(socle_cmd, true);
    int socle_degree = 0;
    socle_cmd->add_option("--degree", socle_degree, "polynomial degree r")->required();
    auto* ttform = arc->add_subcommand("ttform", "the symmetric (t,t)-form interpolating the tangent forms");
    add_io(ttform, true);
    auto* rho = arc->add_subcommand("rho", "difference coefficients of F(X+Y,Y) - F(X,Y)");
    add_io(rho, true);
    auto* curves = arc->add_subcommand("curves", "coprime low-degree curve certificate");
    add_io(curves, true);

    auto* classify_cmd = arc->add_subcommand("classify", "equivalence classes of arcs of a given size");
    add_io(classify_cmd, false);
    uint32_t cls_q = 0;
    std::size_t cls_size = 0;
    bool cls_complete = false, cls_large = false;
    classify_cmd->add_option("--q", cls_q, "field order")->required();
    classify_cmd->add_option("--size", cls_size, "arc size")->required();
    classify_cmd->add_flag("--complete", cls_complete, "keep complete arcs only");
    classify_cmd->add_flag("--allow-large", cls_large, "permit q > 13 (long-running)");

    auto* kest = arc->add_subcommand("kestenband", "complete arc from two Hermitian curves");
    add_io(kest, false);
    uint32_t kest_q = 0;
    kest->add_option("--q", kest_q, "field order (odd square)")->required();

    auto* bounds = app.add_subcommand("bounds", "degree budgets and arc-size bounds");
    bounds->add_option("-o,--output", opt.output, "output path (default: stdout)");
    uint32_t b_q = 0, b_p = 0, b_t = 0;
    std::optional<uint32_t> b_d;
    bounds->add_option("--q", b_q, "field order")->required();
    bounds->add_option("--p", b_p, "characteristic")->required();
    bounds->add_option("--t", b_t, "deficiency")->required();
    uint32_t b_d_raw = 0;
    auto* dopt = bounds->add_option("--curve-degree", b_d_raw, "query the max arc size on a curve of this degree");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(opt);
        if (*tangents) return cmd_tangents(opt);
        if (*lemma) return cmd_lemma_check(opt);
        if (*dual) return cmd_dual(opt);
        if (*socle_cmd) return cmd_socle(opt, socle_degree);
        if (*ttform) return cmd_ttform(opt);
        if (*rho) return cmd_rho(opt);
        if (*curves) return cmd_curves(opt);
        if (*classify_cmd) return cmd_classify(opt, cls_q, cls_size, cls_complete, cls_large);
        if (*kest) return cmd_kestenband(opt, kest_q);
        if (*bounds) {
            if (dopt->count() > 0) b_d = b_d_raw;
            return cmd_bounds(opt, b_q, b_p, b_t, b_d);
        }
    } catch (const error& e) {
        json err;
        err["error"]["code"] = errc_name(e.code());
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"]["code"] = "internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << '\n';
        return 2;
    }
    return 2;
}
