#include "arcs/plane.hpp"

#include <algorithm>

namespace arcs {

Point normalize_point(const Field& F, std::array<Fe, 3> raw) {
    for (int i = 0; i < 3; ++i) {
        if (!F.is_zero(raw[i])) {
            Fe s = F.inv(raw[i]);
            Point p;
            for (int j = 0; j < 3; ++j) p.c[j] = F.mul(raw[j], s);
            return p;
        }
    }
    fail(errc::zero_vector, "cannot normalize the zero vector");
}

LinearForm normalize_form(const Field& F, std::array<Fe, 3> raw) {
    Point p = normalize_point(F, raw);
    return LinearForm{p.c};
}

Fe det3(const Field& F, const Point& a, const Point& b, const Point& c) {
    auto m2 = [&](Fe x1, Fe y1, Fe x2, Fe y2) {
        return F.sub(F.mul(x1, y2), F.mul(y1, x2));
    };
    Fe d = F.mul(a.c[0], m2(b.c[1], b.c[2], c.c[1], c.c[2]));
    d = F.sub(d, F.mul(a.c[1], m2(b.c[0], b.c[2], c.c[0], c.c[2])));
    d = F.add(d, F.mul(a.c[2], m2(b.c[0], b.c[1], c.c[0], c.c[1])));
    return d;
}

LinearForm line_through(const Field& F, const Point& a, const Point& b) {
    if (a == b) fail(errc::coincident_points, "no unique line through coincident points");
    std::array<Fe, 3> cr;
    cr[0] = F.sub(F.mul(a.c[1], b.c[2]), F.mul(a.c[2], b.c[1]));
    cr[1] = F.sub(F.mul(a.c[2], b.c[0]), F.mul(a.c[0], b.c[2]));
    cr[2] = F.sub(F.mul(a.c[0], b.c[1]), F.mul(a.c[1], b.c[0]));
    return normalize_form(F, cr);
}

std::vector<Point> points_on_line(const Field& F, const LinearForm& l) {
    std::vector<Point> out;
    out.reserve(F.q() + 1);
    for (const Point& x : all_points(F))
        if (incident(F, l, x)) out.push_back(x);
    return out;
}

std::vector<Point> all_points(const Field& F) {
    std::vector<Point> out;
    out.reserve((size_t)F.q() * F.q() + F.q() + 1);
    // (0,0,1), (0,1,*), (1,*,*): every point exactly once, already
    // normalized; generate in encoding-lex order.
    out.push_back(Point{{F.zero(), F.zero(), F.one()}});
    for (uint32_t z = 0; z < F.q(); ++z)
        out.push_back(Point{{F.zero(), F.one(), Fe{z}}});
    for (uint32_t y = 0; y < F.q(); ++y)
        for (uint32_t z = 0; z < F.q(); ++z)
            out.push_back(Point{{F.one(), Fe{y}, Fe{z}}});
    std::sort(out.begin(), out.end());
    return out;
}

std::variant<Arc, ArcViolation> Arc::validate(const Field& F, std::vector<Point> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return ArcViolation{DuplicateWitness{i, j}};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (F.is_zero(det3(F, pts[i], pts[j], pts[k])))
                    return ArcViolation{CollinearWitness{i, j, k}};
    return Arc(F, std::move(pts));
}

Arc::Arc(const Field& F, std::vector<Point> pts)
    : field_(&F), points_(std::move(pts)), sorted_(points_) {
    std::sort(sorted_.begin(), sorted_.end());
}

bool Arc::contains(const Point& x) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), x);
}

Arc make_arc(const Field& F, std::vector<Point> pts) {
    auto r = Arc::validate(F, std::move(pts));
    if (auto* a = std::get_if<Arc>(&r)) return std::move(*a);
    fail(errc::bad_params, "point set is not an arc");
}

std::vector<LinearForm> tangent_lines(const Arc& A, const Point& a) {
    const Field& F = A.field();
    if (!A.contains(a)) fail(errc::point_not_in_arc, "tangent_lines: point not in arc");
    // The pencil through a: one line per other point of the plane class.
    // Enumerate lines through a as joins with one representative per line.
    std::vector<LinearForm> pencil;
    pencil.reserve(F.q() + 1);
    for (const Point& x : all_points(F)) {
        if (x == a) continue;
        LinearForm l = line_through(F, a, x);
        if (std::find(pencil.begin(), pencil.end(), l) == pencil.end())
            pencil.push_back(l);
        if (pencil.size() == F.q() + 1) break;
    }
    std::vector<LinearForm> tangents;
    for (const LinearForm& l : pencil) {
        bool only_a = true;
        for (const Point& b : A.points())
            if (b != a && incident(F, l, b)) { only_a = false; break; }
        if (only_a) tangents.push_back(l);
    }
    std::sort(tangents.begin(), tangents.end());
    return tangents;
}

Arc conic_arc(const Field& F) {
    std::vector<Point> pts;
    for (uint32_t s = 0; s < F.q(); ++s)
        pts.push_back(Point{{F.one(), Fe{s}, F.mul(Fe{s}, Fe{s})}});
    pts.push_back(Point{{F.zero(), F.zero(), F.one()}});
    return make_arc(F, std::move(pts));
}

} // namespace arcs
