#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posetfr/partition.hpp"

namespace posetfr {

// Dense univariate polynomial with exact big-integer coefficients,
// lowest degree first, no trailing zeros.
struct IntPoly {
    std::vector<BigInt> c;

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    const BigInt& leading() const { return c.back(); }
    BigInt coeff(std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
    BigInt eval_at_one() const;
    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

// F(alpha) summed word by word: coefficient of x^l is the exact cyclotomic sum
// of alpha over the weight-l words, which must project to an integer.
IntPoly f_poly_bruteforce(const AmbientSpace& space, std::uint64_t alpha,
                          std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// F(alpha) through the ideal-sum closed form driven by D = <supp alpha>_Pbar.
IntPoly f_poly_closed(const AmbientSpace& space, std::uint64_t alpha);

// Closed-form value of sum_{<supp beta>_P = I} alpha(beta) for an ideal I.
BigInt block_sum(const AmbientSpace& space, std::uint64_t alpha, const ElementSet& ideal);

// Degree and signed leading coefficient of F for a given up-set D, from the
// formulas alone (requires every h_i >= 2).
std::pair<int, BigInt> f_degree_leading(const AmbientSpace& space, const ElementSet& dual_ideal);

// Characters grouped by exact equality of their closed-form F polynomials;
// must coincide bit for bit with dual_partition(weight_partition(H, P)).
Partition lambda_via_f(const AmbientSpace& space, ExecMode mode = ExecMode::parallel,
                       std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

struct DegreeDualWeightReport {
    bool degree_determined = false;  // equal dual weight forces equal degree
    bool hierarchical = false;
    bool consistent() const { return degree_determined == hierarchical; }
};

// Checks whether deg F(alpha) is a function of the dual weight of alpha,
// which characterizes hierarchical posets when every h_i >= 2.
DegreeDualWeightReport degree_determined_by_dual_weight(
    const AmbientSpace& space, std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// For hierarchical posets: alpha and gamma share a Lambda block exactly when
// the multisets of coordinate orders over their dual support closures match.
bool hier_same_block_criterion(const AmbientSpace& space, std::uint64_t alpha,
                               std::uint64_t gamma);

struct LeadingAbsReport {
    bool size_condition = false;  // |X|-|max X| and |D| agree across the pair
    bool abs_leading_equal = false;
    bool consistent() const { return size_condition == abs_leading_equal; }
};

// Uniform group size a >= 3: compares |lead F(alpha)| with the combinatorial
// condition that characterizes it.
LeadingAbsReport leading_abs_criterion(const AmbientSpace& space, std::uint64_t alpha,
                                       std::uint64_t gamma);

}  // namespace posetfr
