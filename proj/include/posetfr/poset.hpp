#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetfr/errors.hpp"

namespace posetfr {

// Subset of the ground set of one specific poset, kept as a 64-bit mask.
// `ground` is a fingerprint of the owning ground set; poset operations reject
// sets built against a different ground set.
struct ElementSet {
    std::uint64_t bits = 0;
    std::uint32_t universe = 0;
    std::uint64_t ground = 0;

    int size() const noexcept { return std::popcount(bits); }
    bool empty() const noexcept { return bits == 0; }
    bool contains(int i) const noexcept { return (bits >> i) & 1u; }
    bool subset_of(const ElementSet& o) const noexcept { return (bits & ~o.bits) == 0; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

// Calls fn(i) for every set bit, lowest index first.
template <class Fn>
void for_each_element(std::uint64_t bits, Fn&& fn) {
    while (bits) {
        fn(std::countr_zero(bits));
        bits &= bits - 1;
    }
}

// Finite poset on a named ground set of at most 64 elements. Elements are
// sorted by name at construction; the relation is stored as per-element
// principal-filter / principal-ideal masks. Immutable after construction.
class Poset {
  public:
    // `relations` are (lower, upper) pairs; the reflexive-transitive closure is
    // taken and a cycle (antisymmetry violation) is rejected.
    Poset(std::vector<std::string> element_names,
          const std::vector<std::pair<std::string, std::string>>& relations);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    int index_of(const std::string& name) const;  // throws unknown_name
    std::uint64_t ground_id() const noexcept { return ground_id_; }

    bool leq(int lo, int hi) const { return (above_[static_cast<std::size_t>(lo)] >> hi) & 1u; }
    std::uint64_t principal_ideal(int i) const { return below_[static_cast<std::size_t>(i)]; }
    std::uint64_t principal_filter(int i) const { return above_[static_cast<std::size_t>(i)]; }

    Poset dual() const;

    ElementSet empty_set() const { return make(0); }
    ElementSet full_set() const { return make(size() == 64 ? ~0ull : (1ull << size()) - 1); }
    ElementSet set_of(std::span<const std::string> element_names) const;
    ElementSet set_from_mask(std::uint64_t mask) const;
    std::vector<std::string> names_of(const ElementSet& s) const;

    // {a : exists b in B with a <= b}; a closure operator, result is an ideal.
    ElementSet down_closure(const ElementSet& b) const;
    // {a : exists b in B with b <= a}; an ideal of the dual poset.
    ElementSet up_closure(const ElementSet& b) const;
    ElementSet maximal(const ElementSet& b) const;
    ElementSet minimal(const ElementSet& b) const;

    bool is_ideal(const ElementSet& s) const;
    bool is_up_set(const ElementSet& s) const;
    // Down-/up-closedness inside the subposet induced on y.
    bool is_ideal_in(const ElementSet& y, const ElementSet& s) const;
    bool is_up_closed_in(const ElementSet& y, const ElementSet& s) const;
    // Ideal generated by a inside the subposet induced on y (a must lie in y).
    ElementSet closure_in(const ElementSet& y, const ElementSet& a) const;

    // All ideals of the subposet induced on y, sorted by (size, mask).
    std::vector<ElementSet> ideals(const ElementSet& y) const;
    std::vector<ElementSet> ideals() const { return ideals(full_set()); }
    // Ideals of the dual poset (up-sets), same ordering.
    std::vector<ElementSet> up_sets() const;

    // len(y): largest cardinality of a chain with y as greatest element.
    int len_of(int i) const { return len_[static_cast<std::size_t>(i)]; }
    // Level decomposition: chain_bound() = m, level(j) = W_{j+1} for j in [0, m).
    int chain_bound() const noexcept { return static_cast<int>(levels_.size()); }
    ElementSet level(int j) const { return make(levels_[static_cast<std::size_t>(j)]); }
    // Unique r in [1, m] with D inside the union of levels >= r, maximal such r.
    int sigma(const ElementSet& d) const;

    bool is_hierarchical() const;
    // The five equivalent hierarchy criteria, each evaluated independently by
    // brute force (the subset-quantified ones cost 2^n; capped at n <= 20).
    std::array<bool, 5> hierarchical_equivalents() const;

    // Chain of ideals 0 = I_0 < I_1 < ... < I_n = Omega with |I_j| = j.
    std::vector<ElementSet> ideal_chain() const;
    std::vector<ElementSet> ideal_chain_through(const ElementSet& ideal) const;

    void check(const ElementSet& s) const {
        require(s.ground == ground_id_ && s.universe == static_cast<std::uint32_t>(size()),
                Errc::ground_mismatch, "element set belongs to a different ground set");
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.above_ == b.above_;
    }

  private:
    Poset() = default;

    ElementSet make(std::uint64_t mask) const {
        return ElementSet{mask, static_cast<std::uint32_t>(size()), ground_id_};
    }
    void finish();  // derives below_, len_, levels_, ground_id_ from above_

    std::vector<std::string> names_;
    std::vector<std::uint64_t> above_;   // above_[i] = {j : i <= j}
    std::vector<std::uint64_t> below_;   // below_[i] = {j : j <= i}
    std::vector<int> len_;
    std::vector<std::uint64_t> levels_;  // levels_[j] = {i : len(i) == j+1}
    std::uint64_t ground_id_ = 0;
};

}  // namespace posetfr
