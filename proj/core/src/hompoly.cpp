#include "arcs/hompoly.hpp"

#include <sstream>

namespace arcs {

std::vector<Mono> monomials_of_degree(int r) {
    std::vector<Mono> out;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= r - a; ++b)
            out.push_back(Mono{a, b, r - a - b});
    std::sort(out.begin(), out.end(), MonoLess{});
    return out;
}

HomPoly HomPoly::from_form(const Field& F, const LinearForm& l) {
    HomPoly p(F, 1);
    p.set_coeff({1, 0, 0}, l.c[0]);
    p.set_coeff({0, 1, 0}, l.c[1]);
    p.set_coeff({0, 0, 1}, l.c[2]);
    return p;
}

HomPoly HomPoly::monomial(const Field& F, Mono m, Fe c) {
    HomPoly p(F, m[0] + m[1] + m[2]);
    p.set_coeff(m, c);
    return p;
}

Fe HomPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Fe{0} : it->second;
}

void HomPoly::set_coeff(const Mono& m, Fe c) {
    if (field_->is_zero(c))
        terms_.erase(m);
    else
        terms_[m] = c;
}

HomPoly HomPoly::add(const HomPoly& o) const {
    HomPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, field_->add(r.coeff(m), c));
    return r;
}

HomPoly HomPoly::sub(const HomPoly& o) const {
    HomPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, field_->sub(r.coeff(m), c));
    return r;
}

HomPoly HomPoly::scaled(Fe s) const {
    HomPoly r(*field_, degree_);
    if (field_->is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = field_->mul(c, s);
    return r;
}

HomPoly HomPoly::mul(const HomPoly& o) const {
    HomPoly r(*field_, degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
            r.set_coeff(m, field_->add(r.coeff(m), field_->mul(c1, c2)));
        }
    return r;
}

HomPoly HomPoly::pow(int n) const {
    HomPoly r = HomPoly::monomial(*field_, {0, 0, 0}, field_->one());
    for (int i = 0; i < n; ++i) r = r.mul(*this);
    return r;
}

Fe HomPoly::eval(const std::array<Fe, 3>& x) const {
    const Field& F = *field_;
    Fe acc = F.zero();
    for (const auto& [m, c] : terms_) {
        Fe v = c;
        for (int i = 0; i < 3; ++i)
            if (m[i]) v = F.mul(v, F.pow(x[i], m[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

Fe HomPoly::eval(const Point& x) const { return eval(x.c); }

HomPoly HomPoly::normalized() const {
    if (terms_.empty()) return *this;
    Fe lead = terms_.begin()->second;
    return scaled(field_->inv(lead));
}

std::vector<Fe> HomPoly::restrict_to_line(const Point& x, const Point& y) const {
    const Field& F = *field_;
    int n = degree_;
    std::vector<Fe> out(n + 1, F.zero());
    for (const auto& [m, c] : terms_) {
        // Expand prod_i (s x_i + u y_i)^{m_i} and collect by power of s.
        std::vector<Fe> acc{c}; // acc[k] = coefficient of s^k so far
        for (int i = 0; i < 3; ++i) {
            if (m[i] == 0) continue;
            std::vector<Fe> factor(m[i] + 1);
            for (int k = 0; k <= m[i]; ++k)
                factor[k] = F.mul(binom_fe(F, m[i], k),
                                  F.mul(F.pow(x.c[i], k), F.pow(y.c[i], m[i] - k)));
            std::vector<Fe> next(acc.size() + m[i], F.zero());
            for (std::size_t a = 0; a < acc.size(); ++a)
                for (int k = 0; k <= m[i]; ++k)
                    next[a + k] = F.add(next[a + k], F.mul(acc[a], factor[k]));
            acc = std::move(next);
        }
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = F.add(out[k], acc[k]);
    }
    return out;
}

int HomPoly::degree_in(int i) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << field_->to_string(it->second);
        static const char* vars[3] = {"x1", "x2", "x3"};
        for (int i = 0; i < 3; ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << vars[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

Fe binom_fe(const Field& F, int n, int k) {
    if (k < 0 || k > n) return F.zero();
    // n stays small (degrees <= ~16); exact in 64 bits.
    uint64_t num = 1;
    for (int i = 0; i < k; ++i) num = num * (uint64_t)(n - i) / (uint64_t)(i + 1);
    return F.from_int((int64_t)(num % F.p()));
}

} // namespace arcs
