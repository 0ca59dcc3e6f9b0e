#pragma once

#include <stdexcept>
#include <string>

namespace posetfr {

// Every library failure mode has a stable code so callers (and tests) can
// distinguish usage errors from mathematical preconditions.
enum class Errc {
    duplicate_name,
    unknown_name,
    cycle_detected,
    too_large,
    empty_set_sigma,
    carrier_mismatch,
    block_mismatch,
    not_a_subgroup,
    not_an_ideal,
    not_a_dual_ideal,
    not_up_closed,
    not_subset,
    not_proper_subset,
    precondition,
    shift_required,       // eta_i == tau_i - 1 needed
    positivity_required,  // tau_i > 0, eta_i > -1, eta_i != 0 needed
    not_a_field,
    zero_parameter,
    not_hierarchical,
    is_hierarchical,
    empty_upset,
    size_one_present,
    sizes_not_uniform,
    non_integer_coefficient,
    ground_mismatch,
    bad_instance,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace posetfr
