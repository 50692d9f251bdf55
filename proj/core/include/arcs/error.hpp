#pragma once

#include <stdexcept>
#include <string>

namespace arcs {

enum class errc {
    non_prime,
    reducible_modulus,
    degree_mismatch,
    division_by_zero,
    zero_vector,
    coincident_points,
    point_not_in_arc,
    deficiency_zero,
    arc_too_small,
    seed_dependent,
    bad_params,
    both_zero,
    all_generators_zero,
    even_characteristic,
    not_coprime,
    no_lambda,
    zero_polynomial,
    too_few_points,
    not_found,
    not_odd_square,
    no_valid_h,
    budget_exceeded,
    no_solution,
    scaling_degenerate,
    io_error,
};

const char* errc_name(errc c);

/// Exception carrying a machine-readable error code.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

} // namespace arcs
