#include "arcs/gf.hpp"

#include <algorithm>
#include <sstream>

namespace arcs {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_vector: return "ZeroVector";
        case errc::coincident_points: return "CoincidentPoints";
        case errc::point_not_in_arc: return "PointNotInArc";
        case errc::deficiency_zero: return "DeficiencyZero";
        case errc::arc_too_small: return "ArcTooSmall";
        case errc::seed_dependent: return "SeedDependent";
        case errc::bad_params: return "BadParams";
        case errc::both_zero: return "BothZero";
        case errc::all_generators_zero: return "AllGeneratorsZero";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::not_coprime: return "NotCoprime";
        case errc::no_lambda: return "NoLambda";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::too_few_points: return "TooFewPoints";
        case errc::not_found: return "NotFound";
        case errc::not_odd_square: return "NotOddSquare";
        case errc::no_valid_h: return "NoValidH";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::no_solution: return "NoSolution";
        case errc::scaling_degenerate: return "ScalingDegenerate";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Divides polynomials over Z_p (dense, constant term first, may carry
// trailing zeros). Returns the remainder of a by b (b nonzero).
std::vector<uint32_t> poly_mod(uint32_t p, std::vector<uint32_t> a,
                               const std::vector<uint32_t>& b) {
    auto deg = [](const std::vector<uint32_t>& f) -> int {
        for (int i = (int)f.size() - 1; i >= 0; --i)
            if (f[i] != 0) return i;
        return -1;
    };
    int db = deg(b);
    uint32_t lead_inv = 1;
    for (uint32_t x = 1; x < p; ++x)
        if (x * b[db] % p == 1) { lead_inv = x; break; }
    int da = deg(a);
    while (da >= db) {
        uint32_t c = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            uint32_t sub = c * b[i] % p;
            a[da - db + i] = (a[da - db + i] + p - sub) % p;
        }
        da = deg(a);
    }
    a.resize(db > 0 ? db : 1, 0);
    return a;
}

} // namespace

bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
    int deg = -1;
    for (int i = (int)poly.size() - 1; i >= 0; --i)
        if (poly[i] != 0) { deg = i; break; }
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Root search covers linear factors.
    for (uint32_t x = 0; x < p; ++x) {
        uint64_t val = 0, xp = 1;
        for (int i = 0; i <= deg; ++i) {
            val = (val + poly[i] * xp) % p;
            xp = xp * x % p;
        }
        if (val == 0) return false;
    }
    // Factor search up to degree floor(deg/2).
    for (int d = 2; d <= deg / 2; ++d) {
        // All monic polynomials of degree d.
        std::vector<uint32_t> f(d + 1, 0);
        f[d] = 1;
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t n = 0; n < count; ++n) {
            uint64_t m = n;
            for (int i = 0; i < d; ++i) { f[i] = m % p; m /= p; }
            auto r = poly_mod(p, poly, f);
            if (std::all_of(r.begin(), r.end(), [](uint32_t c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

Field Field::make(uint32_t p, uint32_t h) {
    if (!is_prime(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
    if (h < 1) fail(errc::bad_params, "extension degree must be >= 1");
    if (h == 1) return Field(p, 1, {0, 1});
    // Lexicographically smallest monic irreducible: scan coefficient vectors
    // with the constant term varying fastest, comparing high degree first.
    std::vector<uint32_t> mod(h + 1, 0);
    mod[h] = 1;
    uint64_t count = 1;
    for (uint32_t i = 0; i < h; ++i) count *= p;
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t m = n;
        // n's most significant digit drives the highest coefficient.
        for (int i = (int)h - 1; i >= 0; --i) {
            uint64_t pw = 1;
            for (int j = 0; j < i; ++j) pw *= p;
            mod[i] = (uint32_t)(m / pw);
            m %= pw;
        }
        if (is_irreducible(p, mod)) return Field(p, h, mod);
    }
    fail(errc::no_valid_h, "no irreducible modulus found"); // unreachable
}

Field Field::make(uint32_t p, uint32_t h, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
    if (h < 1) fail(errc::bad_params, "extension degree must be >= 1");
    if (modulus.size() != h + 1)
        fail(errc::degree_mismatch, "modulus must have exactly h+1 coefficients");
    std::vector<uint32_t> mod = modulus;
    for (auto& c : mod) c %= p;
    if (mod[h] != 1) fail(errc::degree_mismatch, "modulus must be monic");
    if (!is_irreducible(p, mod))
        fail(errc::reducible_modulus, "modulus is reducible over Z_p");
    return Field(p, h, mod);
}

Field::Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus)
    : p_(p), h_(h), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < h; ++i) q *= p;
    if (q > (1u << 20)) fail(errc::bad_params, "field too large for table arithmetic");
    q_ = (uint32_t)q;
    build_tables();
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    // Polynomial multiplication of the encodings, reduced by the modulus.
    std::vector<uint32_t> ca(h_), cb(h_), prod(2 * h_ - 1, 0);
    for (uint32_t i = 0; i < h_; ++i) { ca[i] = a % p_; a /= p_; }
    for (uint32_t i = 0; i < h_; ++i) { cb[i] = b % p_; b /= p_; }
    for (uint32_t i = 0; i < h_; ++i)
        for (uint32_t j = 0; j < h_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    for (int d = (int)prod.size() - 1; d >= (int)h_; --d) {
        uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < h_; ++i)
            prod[d - h_ + i] = (prod[d - h_ + i] + c * (p_ - modulus_[i])) % p_;
    }
    uint32_t enc = 0, pw = 1;
    for (uint32_t i = 0; i < h_; ++i) { enc += prod[i] * pw; pw *= p_; }
    return enc;
}

void Field::build_tables() {
    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
        for (uint32_t b = a; b < q_; ++b) {
            uint32_t s = 0, pw = 1, x = a, y = b;
            for (uint32_t i = 0; i < h_; ++i) {
                s += (x % p_ + y % p_) % p_ * pw;
                x /= p_; y /= p_; pw *= p_;
            }
            add_[(size_t)a * q_ + b] = s;
            add_[(size_t)b * q_ + a] = s;
            uint32_t m = mul_slow(a, b);
            mul_[(size_t)a * q_ + b] = m;
            mul_[(size_t)b * q_ + a] = m;
            if (m == 1) { inv_[a] = b; inv_[b] = a; }
        }
        uint32_t n = 0, pw = 1, x = a;
        for (uint32_t i = 0; i < h_; ++i) {
            n += (p_ - x % p_) % p_ * pw;
            x /= p_; pw *= p_;
        }
        neg_[a] = n;
    }
}

Fe Field::from_int(int64_t n) const {
    int64_t r = n % (int64_t)p_;
    if (r < 0) r += p_;
    return Fe{(uint32_t)r};
}

std::vector<uint32_t> Field::coeffs(Fe a) const {
    std::vector<uint32_t> c(h_);
    uint32_t v = a.v;
    for (uint32_t i = 0; i < h_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

Fe Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != h_) fail(errc::degree_mismatch, "element needs exactly h coefficients");
    uint32_t enc = 0, pw = 1;
    for (uint32_t i = 0; i < h_; ++i) { enc += c[i] % p_ * pw; pw *= p_; }
    return Fe{enc};
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) fail(errc::division_by_zero, "inverse of zero");
    return Fe{inv_[a.v]};
}

Fe Field::pow(Fe a, uint64_t n) const {
    Fe r = one(), base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::string Field::to_string(Fe a) const {
    if (h_ == 1) return std::to_string(a.v);
    std::ostringstream os;
    auto c = coeffs(a);
    os << '[';
    for (uint32_t i = 0; i < h_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

} // namespace arcs
