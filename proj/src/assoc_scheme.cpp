#include "posetfr/assoc_scheme.hpp"

#include <algorithm>
#include <atomic>

namespace posetfr {

RelationPartition translation_scheme(const AmbientSpace& space, const Partition& gamma,
                                     std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    require(gamma.carrier_size() == total && gamma.kind == Partition::Carrier::words,
            Errc::carrier_mismatch, "expected a partition of the whole space");
    RelationPartition theta;
    theta.carrier = static_cast<std::uint32_t>(total);
    theta.classes = static_cast<std::uint32_t>(gamma.block_count());
    theta.class_of.resize(total * total);
    for (std::uint64_t x = 0; x < total; ++x) {
        const std::uint64_t xinv = space.inverse(x);
        for (std::uint64_t y = 0; y < total; ++y)
            theta.class_of[x * total + y] = gamma.block_of[space.op(xinv, y)];
    }
    return theta;
}

SchemeReport is_association_scheme(const RelationPartition& theta, std::uint64_t cap,
                                   ExecMode mode) {
    const std::uint32_t h = theta.carrier;
    require(h <= cap, Errc::too_large,
            "association-scheme axioms walk |H|^3 pairs; carrier exceeds the cap");
    const std::uint32_t k = theta.classes;
    SchemeReport r;

    // (1) nonempty classes with ids covering [0, k)
    std::vector<std::uint64_t> class_sizes(k, 0);
    bool in_range = true;
    for (std::int32_t c : theta.class_of)
        if (c < 0 || static_cast<std::uint32_t>(c) >= k)
            in_range = false;
        else
            ++class_sizes[static_cast<std::uint32_t>(c)];
    r.axioms[0] = in_range && std::all_of(class_sizes.begin(), class_sizes.end(),
                                          [](std::uint64_t s) { return s > 0; });
    if (!r.axioms[0]) return r;

    // (2) the diagonal is one whole class
    {
        const std::int32_t c0 = theta.at(0, 0);
        bool diag_same = true;
        for (std::uint32_t x = 0; x < h; ++x) diag_same = diag_same && theta.at(x, x) == c0;
        r.axioms[1] =
            diag_same && class_sizes[static_cast<std::uint32_t>(c0)] == h;
    }

    // (3) transposing maps classes onto classes
    {
        std::vector<std::int32_t> transpose_class(k, -1);
        bool ok = true;
        for (std::uint32_t x = 0; x < h && ok; ++x)
            for (std::uint32_t y = 0; y < h; ++y) {
                const auto c = static_cast<std::uint32_t>(theta.at(x, y));
                const std::int32_t t = theta.at(y, x);
                if (transpose_class[c] == -1)
                    transpose_class[c] = t;
                else if (transpose_class[c] != t) {
                    ok = false;
                    break;
                }
            }
        r.axioms[2] = ok;
    }

    // (4)/(5): per pair (u,v), the k x k table M[R][S] = |{z : (u,z) in R,
    // (z,v) in S}| must be constant on the class of (u,v), and symmetric.
    std::vector<std::vector<std::uint32_t>> reference(k);
    std::vector<std::int64_t> rep_of(k, -1);
    for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(h) * h; ++p) {
        const auto c = static_cast<std::uint32_t>(theta.class_of[p]);
        if (rep_of[c] == -1) rep_of[c] = static_cast<std::int64_t>(p);
    }
    auto count_table = [&](std::uint32_t u, std::uint32_t v) {
        std::vector<std::uint32_t> m(static_cast<std::size_t>(k) * k, 0);
        const std::int32_t* row_u = &theta.class_of[static_cast<std::size_t>(u) * h];
        for (std::uint32_t z = 0; z < h; ++z)
            ++m[static_cast<std::size_t>(row_u[z]) * k + static_cast<std::size_t>(theta.at(z, v))];
        return m;
    };
    for (std::uint32_t c = 0; c < k; ++c)
        reference[c] = count_table(static_cast<std::uint32_t>(rep_of[c] / h),
                                   static_cast<std::uint32_t>(rep_of[c] % h));

    std::atomic<bool> regular{true}, commuting{true};
    for (std::uint32_t c = 0; c < k; ++c) {
        const auto& m = reference[c];
        for (std::uint32_t a = 0; a < k && commuting.load(); ++a)
            for (std::uint32_t b = a + 1; b < k; ++b)
                if (m[static_cast<std::size_t>(a) * k + b] !=
                    m[static_cast<std::size_t>(b) * k + a]) {
                    commuting = false;
                    break;
                }
    }
    parallel_for(mode, h, [&](std::int64_t ui) {
        if (!regular.load(std::memory_order_relaxed)) return;
        const auto u = static_cast<std::uint32_t>(ui);
        for (std::uint32_t v = 0; v < h; ++v) {
            const auto c = static_cast<std::uint32_t>(theta.at(u, v));
            if (static_cast<std::int64_t>(u) * h + v == rep_of[c]) continue;
            if (count_table(u, v) != reference[c]) {
                regular = false;
                return;
            }
        }
    });
    r.axioms[3] = regular.load();
    // commuting counts must hold for every pair, not just representatives
    if (r.axioms[3]) {
        r.axioms[4] = commuting.load();
    } else {
        std::atomic<bool> comm_all{commuting.load()};
        parallel_for(mode, h, [&](std::int64_t ui) {
            if (!comm_all.load(std::memory_order_relaxed)) return;
            const auto u = static_cast<std::uint32_t>(ui);
            for (std::uint32_t v = 0; v < h; ++v) {
                const auto m = count_table(u, v);
                for (std::uint32_t a = 0; a < k; ++a)
                    for (std::uint32_t b = a + 1; b < k; ++b)
                        if (m[static_cast<std::size_t>(a) * k + b] !=
                            m[static_cast<std::size_t>(b) * k + a]) {
                            comm_all = false;
                            return;
                        }
            }
        });
        r.axioms[4] = comm_all.load();
    }
    return r;
}

GroupCriteria reflexivity_group_criteria(const AmbientSpace& space, const Partition& gamma,
                                         std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    require(gamma.carrier_size() == total && gamma.kind == Partition::Carrier::words,
            Errc::carrier_mismatch, "expected a partition of the whole space");
    GroupCriteria r;
    r.identity_block = gamma.blocks[static_cast<std::size_t>(gamma.block_of[0])].size() == 1;

    r.inverse_closed = true;
    for (const auto& block : gamma.blocks) {
        const std::int32_t target = gamma.block_of[space.inverse(block.front())];
        for (std::uint32_t x : block)
            if (gamma.block_of[space.inverse(x)] != target) r.inverse_closed = false;
    }

    // counts[w][U][V] = |{(u,v) in U x V : u v = w}|, then constancy per block
    const std::size_t k = gamma.block_count();
    std::vector<std::uint32_t> counts(total * k * k, 0);
    for (std::uint64_t u = 0; u < total; ++u) {
        const auto bu = static_cast<std::size_t>(gamma.block_of[u]);
        for (std::uint64_t v = 0; v < total; ++v) {
            const auto bv = static_cast<std::size_t>(gamma.block_of[v]);
            counts[(space.op(u, v) * k + bu) * k + bv] += 1;
        }
    }
    r.regular_counts = true;
    for (const auto& block : gamma.blocks) {
        const std::uint32_t w0 = block.front();
        for (std::uint32_t w : block)
            if (!std::equal(counts.begin() + static_cast<std::ptrdiff_t>(w * k * k),
                            counts.begin() + static_cast<std::ptrdiff_t>((w + 1) * k * k),
                            counts.begin() + static_cast<std::ptrdiff_t>(w0 * k * k)))
                r.regular_counts = false;
    }
    return r;
}

NonHierarchicalWitness nonhierarchical_witness(const AmbientSpace& space, std::uint64_t cap) {
    const Poset& poset = space.poset();
    require(!poset.is_hierarchical(), Errc::is_hierarchical,
            "witness construction needs a non-hierarchical poset");
    require(space.all_coordinates_at_least(2), Errc::size_one_present,
            "witness construction requires every h_i >= 2");
    const std::uint64_t total = space.checked_size(cap);
    const std::uint64_t full = poset.full_set().bits;

    // First (by size, then mask) dominating set B whose minimal layer fails to
    // sit below the rest of B, then the first offending pair (u, v).
    NonHierarchicalWitness w;
    bool found = false;
    for (const ElementSet& cand : poset.dual().ideals()) {
        const std::uint64_t b = cand.bits;
        if (b == 0) continue;
        bool dominating = true;
        for_each_element(full & ~b, [&](int a) {
            if ((poset.principal_filter(a) & b) != b) dominating = false;
        });
        if (!dominating) continue;
        const std::uint64_t mn = poset.minimal(poset.set_from_mask(b)).bits;
        const std::uint64_t rest = b & ~mn;
        if (rest == 0) continue;
        const std::uint64_t rest_min = poset.minimal(poset.set_from_mask(rest)).bits;
        for_each_element(mn, [&](int u) {
            for_each_element(rest_min, [&](int v) {
                if (!found && !poset.leq(u, v)) {
                    found = true;
                    w.u = u;
                    w.v = v;
                    w.b = poset.set_from_mask(b);
                }
            });
        });
        if (found) break;
    }
    require(found, Errc::internal, "no witness found for a non-hierarchical poset");

    // Dominating sets are up-sets, so only up-sets were scanned above. beta is
    // supported on v alone; theta on the first k minimal elements of B, where
    // wt(beta) = |Omega - B| + k.
    auto first_nonzero_word = [&](std::uint64_t supp_mask) {
        Codeword cw = space.word(0);
        std::size_t slot = 0;
        for (int i = 0; i < space.n(); ++i) {
            const auto& fl = space.factors()[static_cast<std::size_t>(i)];
            for (std::size_t f = 0; f < fl.size(); ++f, ++slot)
                if (((supp_mask >> i) & 1u) && f == 0) cw.digits[slot] = 1;
        }
        return cw;
    };
    w.beta = first_nonzero_word(1ull << w.v);
    const std::uint64_t beta_idx = space.index_of(w.beta);
    const int outside = std::popcount(full & ~w.b.bits);
    w.weight = space.pweight(beta_idx);
    const int k = w.weight - outside;
    std::uint64_t m_mask = 0;
    int taken = 0;
    for_each_element(poset.minimal(w.b).bits, [&](int i) {
        if (taken < k) {
            m_mask |= 1ull << i;
            ++taken;
        }
    });
    w.theta = first_nonzero_word(m_mask);
    const std::uint64_t theta_idx = space.index_of(w.theta);
    require(space.pweight(theta_idx) == w.weight, Errc::internal,
            "witness weights disagree with the construction");

    const auto wt = space.weight_table(cap);
    auto convolution_count = [&](std::uint64_t target) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 0; a < total; ++a)
            if (wt[a] == outside + 1 &&
                wt[space.op(space.inverse(a), target)] == w.weight - 1)
                ++count;
        return count;
    };
    w.count_beta = convolution_count(beta_idx);
    w.count_theta = convolution_count(theta_idx);
    return w;
}

}  // namespace posetfr
