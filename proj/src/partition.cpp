#include "posetfr/partition.hpp"

#include <algorithm>
#include <map>

namespace posetfr {

Partition Partition::from_labels(Carrier kind, std::span<const std::int64_t> labels) {
    Partition p;
    p.kind = kind;
    p.block_of.assign(labels.size(), -1);
    std::map<std::int64_t, std::int32_t> ids;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = ids.emplace(labels[i], static_cast<std::int32_t>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_of[i] = it->second;
        p.blocks[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(i));
    }
    return p;
}

Partition weight_partition(const AmbientSpace& space, std::uint64_t cap) {
    const auto wt = space.weight_table(cap);
    std::vector<std::int64_t> labels(wt.begin(), wt.end());
    return Partition::from_labels(Partition::Carrier::words, labels);
}

Partition dual_weight_partition(const AmbientSpace& space, std::uint64_t cap) {
    const auto wt = space.dual_weight_table(cap);
    std::vector<std::int64_t> labels(wt.begin(), wt.end());
    return Partition::from_labels(Partition::Carrier::characters, labels);
}

namespace {

// Signature of carrier element c against gamma: the concatenated canonical
// coefficient vectors of its block sums. Two characters are dual-equivalent
// exactly when their signatures coincide.
std::vector<BigInt> block_sum_signature(const AmbientSpace& space, const Partition& gamma,
                                        std::uint64_t c) {
    const auto& field = *space.field();
    const std::uint32_t n = space.exponent();
    const auto deg = static_cast<std::size_t>(field.degree());
    std::vector<BigInt> sig;
    sig.reserve(gamma.block_count() * deg);
    std::vector<std::int64_t> counts(n);
    for (const auto& block : gamma.blocks) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint32_t b : block) ++counts[space.pair_exponent(c, b)];
        const Cyclotomic v = field.from_counts(counts);
        sig.insert(sig.end(), v.coeffs().begin(), v.coeffs().end());
    }
    return sig;
}

Partition group_by_signature(Partition::Carrier kind,
                             const std::vector<std::vector<BigInt>>& sigs) {
    Partition p;
    p.kind = kind;
    p.block_of.assign(sigs.size(), -1);
    std::map<std::vector<BigInt>, std::int32_t> ids;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        auto [it, fresh] = ids.emplace(sigs[i], static_cast<std::int32_t>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_of[i] = it->second;
        p.blocks[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(i));
    }
    return p;
}

}  // namespace

Partition dual_partition(const AmbientSpace& space, const Partition& gamma, ExecMode mode,
                         std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    require(gamma.carrier_size() == total, Errc::carrier_mismatch,
            "partition does not cover the whole space");
    std::vector<std::vector<BigInt>> sigs(total);
    parallel_for(mode, static_cast<std::int64_t>(total), [&](std::int64_t c) {
        sigs[static_cast<std::size_t>(c)] =
            block_sum_signature(space, gamma, static_cast<std::uint64_t>(c));
    });
    const auto kind = gamma.kind == Partition::Carrier::words ? Partition::Carrier::characters
                                                              : Partition::Carrier::words;
    return group_by_signature(kind, sigs);
}

Partition bidual_partition(const AmbientSpace& space, const Partition& gamma, ExecMode mode,
                           std::uint64_t cap) {
    return dual_partition(space, dual_partition(space, gamma, mode, cap), mode, cap);
}

bool is_finer(const Partition& fine, const Partition& coarse) {
    require(fine.carrier_size() == coarse.carrier_size() && fine.kind == coarse.kind,
            Errc::carrier_mismatch, "partitions live on different carriers");
    for (const auto& block : fine.blocks) {
        const std::int32_t home = coarse.block_of[block.front()];
        for (std::uint32_t x : block)
            if (coarse.block_of[x] != home) return false;
    }
    return true;
}

ReflexivityReport is_reflexive(const AmbientSpace& space, const Partition& gamma, ExecMode mode,
                               std::uint64_t cap) {
    const Partition dual = dual_partition(space, gamma, mode, cap);
    const Partition bidual = dual_partition(space, dual, mode, cap);
    ReflexivityReport r;
    r.card = gamma.block_count();
    r.card_dual = dual.block_count();
    r.card_leq = r.card <= r.card_dual;
    r.equal_counts = r.card == r.card_dual;
    r.bidual_finer = is_finer(bidual, gamma);
    r.bidual_equal = bidual == gamma;
    return r;
}

Cyclotomic krawtchouk(const AmbientSpace& space, const Partition& gamma,
                      const Partition& gamma_dual, std::size_t dual_block, std::size_t block,
                      bool verify_all) {
    require(gamma.kind != gamma_dual.kind && gamma.carrier_size() == gamma_dual.carrier_size(),
            Errc::carrier_mismatch, "expected a partition and its dual");
    require(dual_block < gamma_dual.block_count() && block < gamma.block_count(),
            Errc::block_mismatch, "block index out of range");
    const auto& field = *space.field();
    const auto& members = gamma_dual.blocks[dual_block];
    auto sum_for = [&](std::uint32_t chi) {
        std::vector<std::int64_t> counts(space.exponent());
        for (std::uint32_t b : gamma.blocks[block]) ++counts[space.pair_exponent(chi, b)];
        return field.from_counts(counts);
    };
    Cyclotomic value = sum_for(members.front());
    if (verify_all)
        for (std::size_t i = 1; i < members.size(); ++i)
            require(sum_for(members[i]) == value, Errc::block_mismatch,
                    "block sum is not constant on the dual block; the partitions are not dual");
    return value;
}

MacWilliamsReport macwilliams_check(const AmbientSpace& space, const Partition& gamma,
                                    std::span<const std::uint32_t> code, ExecMode mode,
                                    std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    require(gamma.carrier_size() == total && gamma.kind == Partition::Carrier::words,
            Errc::carrier_mismatch, "expected a partition of the whole space");
    const auto dual_d = space.dual_code(code, cap);
    const Partition dual = dual_partition(space, gamma, mode, cap);
    const auto& field = *space.field();

    std::vector<BigInt> dual_d_in_block(dual.block_count(), 0);
    for (std::uint32_t chi : dual_d) ++dual_d_in_block[static_cast<std::size_t>(dual.block_of[chi])];
    std::vector<BigInt> code_in_block(gamma.block_count(), 0);
    for (std::uint32_t d : code) ++code_in_block[static_cast<std::size_t>(gamma.block_of[d])];

    MacWilliamsReport report;
    for (std::size_t b = 0; b < gamma.block_count(); ++b) {
        MacWilliamsRow row;
        row.block = b;
        row.lhs = BigInt(dual_d.size()) * code_in_block[b];
        Cyclotomic rhs = field.zero();
        for (std::size_t a = 0; a < dual.block_count(); ++a) {
            if (dual_d_in_block[a] == 0) continue;
            rhs += field.integer(dual_d_in_block[a]) * krawtchouk(space, gamma, dual, a, b);
        }
        row.holds = rhs == field.integer(row.lhs);
        row.rhs = rhs.is_integer() ? rhs.as_integer() : BigInt(0);
        report.verdict = report.verdict && row.holds;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace posetfr
