#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "posetfr/group_space.hpp"
#include "posetfr/parallel.hpp"

namespace posetfr {

// Partition of an enumerated carrier (all of H, or all of its characters).
// Blocks are ordered by smallest member index and each block is sorted, so
// equal partitions compare equal structurally.
struct Partition {
    enum class Carrier { words, characters };

    Carrier kind = Carrier::words;
    std::vector<std::int32_t> block_of;
    std::vector<std::vector<std::uint32_t>> blocks;

    std::uint64_t carrier_size() const noexcept { return block_of.size(); }
    std::size_t block_count() const noexcept { return blocks.size(); }

    // Builds the canonical form from an arbitrary carrier -> label map.
    static Partition from_labels(Carrier kind, std::span<const std::int64_t> labels);

    friend bool operator==(const Partition&, const Partition&) = default;
};

// Fibers of the P-weight over all of H.
Partition weight_partition(const AmbientSpace& space,
                           std::uint64_t cap = AmbientSpace::kDefaultEnumCap);
// Fibers of the dual P-weight over all characters.
Partition dual_weight_partition(const AmbientSpace& space,
                                std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// The dual partition: characters grouped by their exact vector of block sums
// sum_{b in B} chi(b), evaluated in the cyclotomic ring. This is the
// reference path for the dual of a weight partition.
Partition dual_partition(const AmbientSpace& space, const Partition& gamma,
                         ExecMode mode = ExecMode::parallel,
                         std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// Dual of the dual, pulled back to H through the canonical identification.
Partition bidual_partition(const AmbientSpace& space, const Partition& gamma,
                           ExecMode mode = ExecMode::parallel,
                           std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// True when every block of `fine` lies inside a block of `coarse`.
bool is_finer(const Partition& fine, const Partition& coarse);

struct ReflexivityReport {
    std::size_t card = 0;       // |Gamma|
    std::size_t card_dual = 0;  // |dual of Gamma|
    bool card_leq = false;      // |Gamma| <= |dual|
    bool equal_counts = false;  // |Gamma| == |dual|
    bool bidual_finer = false;
    bool bidual_equal = false;
    bool reflexive() const { return bidual_equal; }
    // The count criterion and the direct bidual comparison must agree.
    bool consistent() const { return equal_counts == bidual_equal; }
};

ReflexivityReport is_reflexive(const AmbientSpace& space, const Partition& gamma,
                               ExecMode mode = ExecMode::parallel,
                               std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// Generalized Krawtchouk coefficient K_(A,B): the block sum of the canonical
// (lowest-index) character of dual block A over block B. With verify_all the
// sum is recomputed for every character of A and equality asserted.
Cyclotomic krawtchouk(const AmbientSpace& space, const Partition& gamma,
                      const Partition& gamma_dual, std::size_t dual_block, std::size_t block,
                      bool verify_all = false);

struct MacWilliamsRow {
    std::size_t block = 0;
    BigInt lhs;  // |dual D| * |D cap B|
    BigInt rhs;  // sum over A of |dual D cap A| * K_(A,B)
    bool holds = false;
};

struct MacWilliamsReport {
    std::vector<MacWilliamsRow> rows;
    bool verdict = true;
};

// Exact two-sided evaluation of the partition MacWilliams identity for one
// additive code D.
MacWilliamsReport macwilliams_check(const AmbientSpace& space, const Partition& gamma,
                                    std::span<const std::uint32_t> code,
                                    ExecMode mode = ExecMode::parallel,
                                    std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

}  // namespace posetfr
