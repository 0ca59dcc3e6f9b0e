#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "posetfr/cyclotomic.hpp"
#include "posetfr/poset.hpp"

namespace posetfr {

// One residue per cyclic factor, flattened over all coordinates.
struct Codeword {
    std::vector<std::uint32_t> digits;
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

// The product H of per-coordinate finite abelian groups (each given as a list
// of cyclic orders), indexed by the elements of a poset. Characters are
// indexed by codewords of the same shape; the pairing
//   alpha(beta) = prod over factors of zeta_m ^ (a * b),  zeta_m = zeta_N^(N/m),
// is evaluated exactly in the N-th cyclotomic ring, N the group exponent.
// Codewords are identified with indices in [0, |H|) in lexicographic
// (first-coordinate-most-significant) mixed-radix order; index 0 is 1_H.
class AmbientSpace {
  public:
    static constexpr std::uint64_t kDefaultEnumCap = 1ull << 20;
    static constexpr std::uint64_t kDefaultSubgroupCap = 4096;

    AmbientSpace(Poset poset, std::vector<std::vector<std::uint32_t>> factors);

    const Poset& poset() const noexcept { return poset_; }
    int n() const noexcept { return poset_.size(); }
    const std::vector<std::vector<std::uint32_t>>& factors() const noexcept { return factors_; }
    std::uint64_t coordinate_order(int i) const { return coord_order_[static_cast<std::size_t>(i)]; }
    bool all_coordinates_at_least(std::uint64_t h) const;
    std::uint32_t exponent() const noexcept { return exponent_; }
    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }

    // |H| when it fits in 64 bits; use checked_size for capped access.
    bool size_known() const noexcept { return !overflow_; }
    std::uint64_t size() const;
    std::uint64_t checked_size(std::uint64_t cap) const;  // throws too_large past the cap

    std::vector<Codeword> enumerate(std::uint64_t cap = kDefaultEnumCap) const;
    Codeword word(std::uint64_t index) const;
    std::uint64_t index_of(const Codeword& w) const;

    ElementSet support(std::uint64_t index) const;
    ElementSet support(const Codeword& w) const;
    int pweight(std::uint64_t index) const;       // |<supp>_P|
    int dual_pweight(std::uint64_t index) const;  // |<supp>_Pbar|
    std::vector<std::uint8_t> weight_table(std::uint64_t cap = kDefaultEnumCap) const;
    std::vector<std::uint8_t> dual_weight_table(std::uint64_t cap = kDefaultEnumCap) const;

    // Exponent e with alpha(beta) = zeta_N^e.
    std::uint32_t pair_exponent(std::uint64_t alpha, std::uint64_t beta) const;
    Cyclotomic char_eval(std::uint64_t alpha, std::uint64_t beta) const;
    Cyclotomic char_eval(const Codeword& alpha, const Codeword& beta) const;

    std::uint64_t op(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inverse(std::uint64_t a) const;
    Codeword op(const Codeword& a, const Codeword& b) const;
    Codeword inverse(const Codeword& a) const;

    bool is_subgroup(std::span<const std::uint32_t> elems) const;
    // Subgroup generated by `gens` (sorted indices).
    std::vector<std::uint32_t> span_of(std::span<const std::uint32_t> gens,
                                       std::uint64_t cap = kDefaultSubgroupCap) const;
    // Every subgroup of H, deduplicated, sorted by (size, lexicographic members).
    std::vector<std::vector<std::uint32_t>> subgroups(
        std::uint64_t cap = kDefaultSubgroupCap) const;
    // Characters trivial on the given subgroup; |D| * |dual| = |H| always holds.
    std::vector<std::uint32_t> dual_code(std::span<const std::uint32_t> code,
                                         std::uint64_t cap = kDefaultSubgroupCap) const;

  private:
    struct Slot {
        int elem;
        std::uint32_t order;
        std::uint64_t stride;
        std::uint32_t zeta_weight;  // N / order
    };

    std::uint32_t digit(std::uint64_t index, const Slot& s) const {
        return static_cast<std::uint32_t>((index / s.stride) % s.order);
    }

    Poset poset_;
    std::vector<std::vector<std::uint32_t>> factors_;
    std::vector<Slot> slots_;
    std::vector<std::uint64_t> coord_order_;
    std::uint64_t size_ = 1;
    bool overflow_ = false;
    std::uint32_t exponent_ = 1;
    std::shared_ptr<const CyclotomicField> field_;
};

}  // namespace posetfr
