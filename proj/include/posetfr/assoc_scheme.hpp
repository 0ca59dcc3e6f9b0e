#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "posetfr/partition.hpp"

namespace posetfr {

// Partition of H x H into relation classes, row-major class id per ordered
// pair.
struct RelationPartition {
    std::uint32_t carrier = 0;
    std::uint32_t classes = 0;
    std::vector<std::int32_t> class_of;  // size carrier * carrier

    std::int32_t at(std::uint32_t x, std::uint32_t y) const {
        return class_of[static_cast<std::size_t>(x) * carrier + y];
    }
};

// Pairs classed by the Gamma-block of x^{-1} y; one class per block.
RelationPartition translation_scheme(const AmbientSpace& space, const Partition& gamma,
                                     std::uint64_t cap = 2048);

struct SchemeReport {
    // partition / identity class / inverse closure / regular counts / commuting counts
    std::array<bool, 5> axioms{};
    bool scheme() const {
        return axioms[0] && axioms[1] && axioms[2] && axioms[3] && axioms[4];
    }
};

// Each axiom checked by brute force; the counting axioms walk all of H^3, so
// the carrier is capped (default 512) with an explicit override.
SchemeReport is_association_scheme(const RelationPartition& theta, std::uint64_t cap = 512,
                                   ExecMode mode = ExecMode::parallel);

struct GroupCriteria {
    bool identity_block = false;   // {1_H} is a block
    bool inverse_closed = false;   // every block is closed under inversion
    bool regular_counts = false;   // convolution counts constant on blocks
    bool all() const { return identity_block && inverse_closed && regular_counts; }
};

// The three group-level reflexivity criteria for a partition of H.
GroupCriteria reflexivity_group_criteria(const AmbientSpace& space, const Partition& gamma,
                                         std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

// Certificate that the weight partition of a non-hierarchical poset breaks
// the regular-count criterion: two same-weight words whose convolution counts
// against the weight-(|Omega - B| + 1) and weight-(w - 1) blocks differ.
struct NonHierarchicalWitness {
    ElementSet b;  // dominating set violating the minimal-layer condition
    int u = -1;    // witness pair in B with u not below v
    int v = -1;
    Codeword beta;
    Codeword theta;
    int weight = 0;          // common weight of beta and theta
    std::uint64_t count_beta = 0;
    std::uint64_t count_theta = 0;
};

NonHierarchicalWitness nonhierarchical_witness(const AmbientSpace& space,
                                               std::uint64_t cap = AmbientSpace::kDefaultEnumCap);

}  // namespace posetfr
