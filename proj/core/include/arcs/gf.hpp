#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arcs/error.hpp"

namespace arcs {

/// Element of GF(p^h), stored as the integer encoding sum c_i p^i of its
/// polynomial representative (constant term first). The encoding is a
/// bijection onto {0, ..., q-1}.
struct Fe {
    uint32_t v = 0;

    friend auto operator<=>(const Fe&, const Fe&) = default;
};

/// GF(p^h) with a fixed monic irreducible modulus. Arithmetic is exact and
/// table-driven; values are immutable after construction.
class Field {
  public:
    /// If modulus is omitted, the lexicographically smallest monic
    /// irreducible polynomial of degree h over Z_p is selected (coefficients
    /// compared from the highest degree down, so the constant term varies
    /// fastest).
    static Field make(uint32_t p, uint32_t h);
    static Field make(uint32_t p, uint32_t h, const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t h() const { return h_; }
    uint32_t q() const { return q_; }
    /// Monic modulus, constant term first, length h+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    /// Element from an integer residue (reduced mod p, embedded in the prime
    /// subfield).
    Fe from_int(int64_t n) const;

    /// Coefficients of the polynomial representative, constant term first,
    /// length h.
    std::vector<uint32_t> coeffs(Fe a) const;
    Fe from_coeffs(const std::vector<uint32_t>& c) const;

    Fe add(Fe a, Fe b) const { return Fe{add_[a.v * q_ + b.v]}; }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe neg(Fe a) const { return Fe{neg_[a.v]}; }
    Fe mul(Fe a, Fe b) const { return Fe{mul_[a.v * q_ + b.v]}; }
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, uint64_t n) const;

    bool is_zero(Fe a) const { return a.v == 0; }
    /// (-1)^n as a field element.
    Fe sign_pow(uint64_t n) const { return (n % 2 == 0) ? one() : neg(one()); }

    std::string to_string(Fe a) const;

    bool same_as(const Field& other) const { return this == &other || (p_ == other.p_ && modulus_ == other.modulus_); }

  private:
    Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus);
    void build_tables();
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, h_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> add_, mul_, neg_, inv_;
};

bool is_prime(uint32_t n);

/// Exhaustive irreducibility test over Z_p: root search plus factor search up
/// to degree floor(deg/2). Adequate for the desk-scale degrees in scope.
bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly);

} // namespace arcs
