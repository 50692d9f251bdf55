#include "arcs/bipoly.hpp"

namespace arcs {

BiPoly BiPoly::from_x_poly(const HomPoly& p) {
    BiPoly r(p.field(), p.degree(), 0);
    for (const auto& [m, c] : p.terms()) r.terms_[{m, Mono{0, 0, 0}}] = c;
    return r;
}

BiPoly BiPoly::from_y_poly(const HomPoly& p) {
    BiPoly r(p.field(), 0, p.degree());
    for (const auto& [m, c] : p.terms()) r.terms_[{Mono{0, 0, 0}, m}] = c;
    return r;
}

Fe BiPoly::coeff(const BiMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Fe{0} : it->second;
}

void BiPoly::set_coeff(const BiMono& m, Fe c) {
    if (field_->is_zero(c))
        terms_.erase(m);
    else
        terms_[m] = c;
}

BiPoly BiPoly::add(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, field_->add(r.coeff(m), c));
    return r;
}

BiPoly BiPoly::sub(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, field_->sub(r.coeff(m), c));
    return r;
}

BiPoly BiPoly::scaled(Fe s) const {
    BiPoly r(*field_, deg_x_, deg_y_);
    if (field_->is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = field_->mul(c, s);
    return r;
}

BiPoly BiPoly::mul(const BiPoly& o) const {
    BiPoly r(*field_, deg_x_ + o.deg_x_, deg_y_ + o.deg_y_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            BiMono m{{m1.first[0] + m2.first[0], m1.first[1] + m2.first[1],
                      m1.first[2] + m2.first[2]},
                     {m1.second[0] + m2.second[0], m1.second[1] + m2.second[1],
                      m1.second[2] + m2.second[2]}};
            r.set_coeff(m, field_->add(r.coeff(m), field_->mul(c1, c2)));
        }
    return r;
}

HomPoly BiPoly::eval_y(const Point& a) const {
    const Field& F = *field_;
    HomPoly r(F, deg_x_);
    for (const auto& [m, c] : terms_) {
        Fe v = c;
        for (int i = 0; i < 3; ++i)
            if (m.second[i]) v = F.mul(v, F.pow(a.c[i], m.second[i]));
        r.set_coeff(m.first, F.add(r.coeff(m.first), v));
    }
    return r;
}

HomPoly BiPoly::eval_x(const Point& a) const {
    const Field& F = *field_;
    HomPoly r(F, deg_y_);
    for (const auto& [m, c] : terms_) {
        Fe v = c;
        for (int i = 0; i < 3; ++i)
            if (m.first[i]) v = F.mul(v, F.pow(a.c[i], m.first[i]));
        r.set_coeff(m.second, F.add(r.coeff(m.second), v));
    }
    return r;
}

Fe BiPoly::eval(const Point& x, const Point& y) const {
    return eval_y(y).eval(x);
}

BiPoly BiPoly::swapped() const {
    BiPoly r(*field_, deg_y_, deg_x_);
    for (const auto& [m, c] : terms_) r.terms_[{m.second, m.first}] = c;
    return r;
}

std::map<Mono, HomPoly, MonoLess> BiPoly::shift_x_by_y() const {
    const Field& F = *field_;
    std::map<Mono, HomPoly, MonoLess> out;
    for (const auto& [m, c] : terms_) {
        const Mono& a = m.first;  // X-exponents
        const Mono& b = m.second; // Y-exponents
        // (X1+Y1)^a1 (X2+Y2)^a2 (X3+Y3)^a3 * c * Y^b
        for (int i1 = 0; i1 <= a[0]; ++i1)
            for (int i2 = 0; i2 <= a[1]; ++i2)
                for (int i3 = 0; i3 <= a[2]; ++i3) {
                    Fe coef = F.mul(c, F.mul(binom_fe(F, a[0], i1),
                                             F.mul(binom_fe(F, a[1], i2),
                                                   binom_fe(F, a[2], i3))));
                    if (F.is_zero(coef)) continue;
                    Mono xm{i1, i2, i3};
                    Mono ym{b[0] + a[0] - i1, b[1] + a[1] - i2, b[2] + a[2] - i3};
                    auto it = out.find(xm);
                    if (it == out.end())
                        it = out.emplace(xm, HomPoly(F, deg_x_ + deg_y_ - i1 - i2 - i3)).first;
                    it->second.set_coeff(ym, F.add(it->second.coeff(ym), coef));
                }
    }
    // Drop X-monomials whose coefficient cancelled to zero.
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace arcs
