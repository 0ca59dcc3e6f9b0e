#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posetfr/partition.hpp"

namespace posetfr {

// Every labeled poset on n named elements ("a", "b", ...), in a fixed
// deterministic order. Orientations of the element pairs are enumerated
// (none / up / down per pair) and non-transitive candidates dropped; counts
// are 1, 1, 3, 19, 219, 4231 for n = 0..5.
std::vector<Poset> all_posets(int n);

// All |sizes|^n per-element order assignments, lexicographic.
std::vector<std::vector<std::uint32_t>> all_size_assignments(
    int n, const std::vector<std::uint32_t>& sizes);

// Space with one cyclic group of the given order per element.
AmbientSpace cyclic_space(const Poset& poset, const std::vector<std::uint32_t>& orders);

// Uniform random block labels over a random block count in [1, carrier];
// empty blocks vanish in the canonical form.
Partition random_partition(std::mt19937_64& rng, std::uint64_t carrier,
                           Partition::Carrier kind = Partition::Carrier::words);

struct SurveyRow {
    std::string poset_key;   // relation pairs, e.g. "a<b,a<c"
    std::string sizes_key;   // "2,2,3"
    int n = 0;
    std::uint64_t space_size = 0;
    bool evaluated = false;  // consistency columns need every h_i >= 2
    bool hierarchical = false;
    bool level_sizes_uniform = false;
    bool reflexive = false;
    std::size_t lambda_blocks = 0;
    std::size_t theta_size = 0;
    bool duality_consistent = false;  // reflexive <=> Lambda = dual-weight partition
                                      //           <=> hierarchical + uniform levels
    bool theta_consistent = false;    // |Theta| >= n+1 with equality exactly then
};

struct SurveyConfig {
    int min_n = 1;
    int max_n = 3;
    std::vector<std::uint32_t> sizes{2};
    std::uint64_t enum_cap = AmbientSpace::kDefaultEnumCap;
    int budget_max_n = 5;  // poset enumeration grows super-exponentially
};

std::vector<SurveyRow> run_survey(const SurveyConfig& config, ExecMode mode = ExecMode::parallel);

std::string poset_key(const Poset& poset);

}  // namespace posetfr
