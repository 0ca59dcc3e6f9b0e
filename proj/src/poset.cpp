#include "posetfr/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace posetfr {

namespace {

std::uint64_t fnv1a(const std::vector<std::string>& names) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& s : names) {
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        h ^= 0xff;  // separator so {"ab"} and {"a","b"} differ
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

Poset::Poset(std::vector<std::string> element_names,
             const std::vector<std::pair<std::string, std::string>>& relations) {
    require(element_names.size() <= 64, Errc::too_large, "ground set exceeds 64 elements");
    std::sort(element_names.begin(), element_names.end());
    for (std::size_t i = 1; i < element_names.size(); ++i)
        require(element_names[i - 1] != element_names[i], Errc::duplicate_name,
                "duplicate element name: " + element_names[i]);
    names_ = std::move(element_names);

    const int n = size();
    above_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) above_[static_cast<std::size_t>(i)] = 1ull << i;
    for (const auto& [lo, hi] : relations) {
        above_[static_cast<std::size_t>(index_of(lo))] |= 1ull << index_of(hi);
    }
    // Warshall closure on filter masks.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((above_[static_cast<std::size_t>(i)] >> k) & 1u)
                above_[static_cast<std::size_t>(i)] |= above_[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(!(leq(i, j) && leq(j, i)), Errc::cycle_detected,
                    "relation closure violates antisymmetry at " + name(i) + "," + name(j));
    finish();
}

void Poset::finish() {
    const int n = size();
    ground_id_ = fnv1a(names_);
    below_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) below_[static_cast<std::size_t>(j)] |= 1ull << i;

    // len via DP over a topological order (|principal ideal| is a topological key).
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = std::popcount(below_[static_cast<std::size_t>(a)]);
        const int pb = std::popcount(below_[static_cast<std::size_t>(b)]);
        return pa != pb ? pa < pb : a < b;
    });
    len_.assign(static_cast<std::size_t>(n), 1);
    int m = 0;
    for (int i : order) {
        int best = 0;
        for_each_element(below_[static_cast<std::size_t>(i)] & ~(1ull << i),
                         [&](int j) { best = std::max(best, len_[static_cast<std::size_t>(j)]); });
        len_[static_cast<std::size_t>(i)] = best + 1;
        m = std::max(m, best + 1);
    }
    levels_.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i)
        levels_[static_cast<std::size_t>(len_[static_cast<std::size_t>(i)] - 1)] |= 1ull << i;
}

int Poset::index_of(const std::string& nm) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), nm);
    require(it != names_.end() && *it == nm, Errc::unknown_name, "unknown element name: " + nm);
    return static_cast<int>(it - names_.begin());
}

Poset Poset::dual() const {
    Poset d;
    d.names_ = names_;
    d.above_ = below_;
    d.finish();
    return d;
}

ElementSet Poset::set_of(std::span<const std::string> element_names) const {
    std::uint64_t mask = 0;
    for (const auto& nm : element_names) mask |= 1ull << index_of(nm);
    return make(mask);
}

ElementSet Poset::set_from_mask(std::uint64_t mask) const {
    require(size() == 64 || (mask >> size()) == 0, Errc::ground_mismatch,
            "mask has bits outside the ground set");
    return make(mask);
}

std::vector<std::string> Poset::names_of(const ElementSet& s) const {
    check(s);
    std::vector<std::string> out;
    for_each_element(s.bits, [&](int i) { out.push_back(name(i)); });
    return out;
}

ElementSet Poset::down_closure(const ElementSet& b) const {
    check(b);
    std::uint64_t mask = 0;
    for_each_element(b.bits, [&](int i) { mask |= below_[static_cast<std::size_t>(i)]; });
    return make(mask);
}

ElementSet Poset::up_closure(const ElementSet& b) const {
    check(b);
    std::uint64_t mask = 0;
    for_each_element(b.bits, [&](int i) { mask |= above_[static_cast<std::size_t>(i)]; });
    return make(mask);
}

ElementSet Poset::maximal(const ElementSet& b) const {
    check(b);
    std::uint64_t mask = 0;
    for_each_element(b.bits, [&](int i) {
        if ((above_[static_cast<std::size_t>(i)] & b.bits) == (1ull << i)) mask |= 1ull << i;
    });
    return make(mask);
}

ElementSet Poset::minimal(const ElementSet& b) const {
    check(b);
    std::uint64_t mask = 0;
    for_each_element(b.bits, [&](int i) {
        if ((below_[static_cast<std::size_t>(i)] & b.bits) == (1ull << i)) mask |= 1ull << i;
    });
    return make(mask);
}

bool Poset::is_ideal(const ElementSet& s) const { return down_closure(s).bits == s.bits; }

bool Poset::is_up_set(const ElementSet& s) const { return up_closure(s).bits == s.bits; }

bool Poset::is_ideal_in(const ElementSet& y, const ElementSet& s) const {
    check(y);
    check(s);
    require(s.subset_of(y), Errc::not_subset, "set is not contained in the induced carrier");
    bool ok = true;
    for_each_element(s.bits, [&](int i) {
        if ((below_[static_cast<std::size_t>(i)] & y.bits & ~s.bits) != 0) ok = false;
    });
    return ok;
}

bool Poset::is_up_closed_in(const ElementSet& y, const ElementSet& s) const {
    check(y);
    check(s);
    require(s.subset_of(y), Errc::not_subset, "set is not contained in the induced carrier");
    bool ok = true;
    for_each_element(s.bits, [&](int i) {
        if ((above_[static_cast<std::size_t>(i)] & y.bits & ~s.bits) != 0) ok = false;
    });
    return ok;
}

ElementSet Poset::closure_in(const ElementSet& y, const ElementSet& a) const {
    check(y);
    check(a);
    require(a.subset_of(y), Errc::not_subset, "set is not contained in the induced carrier");
    std::uint64_t mask = 0;
    for_each_element(a.bits, [&](int i) { mask |= below_[static_cast<std::size_t>(i)]; });
    return make(mask & y.bits);
}

std::vector<ElementSet> Poset::ideals(const ElementSet& y) const {
    check(y);
    // Recursive split on a maximal element e of y: ideals avoiding e are the
    // ideals of y-{e}; ideals containing e are <{e}>_y joined with an ideal of
    // y - <{e}>_y. The two classes are disjoint, so no dedup is needed.
    std::vector<std::uint64_t> out;
    auto rec = [&](auto&& self, std::uint64_t yy) -> std::vector<std::uint64_t> {
        if (yy == 0) return {0};
        const std::uint64_t maxmask = maximal(make(yy)).bits;
        const int e = std::countr_zero(maxmask);
        const std::uint64_t pe = below_[static_cast<std::size_t>(e)] & yy;
        auto without = self(self, yy & ~(1ull << e));
        auto rest = self(self, yy & ~pe);
        std::vector<std::uint64_t> all = std::move(without);
        all.reserve(all.size() + rest.size());
        for (std::uint64_t r : rest) all.push_back(r | pe);
        return all;
    };
    out = rec(rec, y.bits);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<ElementSet> res;
    res.reserve(out.size());
    for (std::uint64_t m : out) res.push_back(make(m));
    return res;
}

std::vector<ElementSet> Poset::up_sets() const {
    auto ids = ideals();
    const std::uint64_t full = full_set().bits;
    std::vector<std::uint64_t> out;
    out.reserve(ids.size());
    for (const auto& i : ids) out.push_back(full & ~i.bits);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<ElementSet> res;
    res.reserve(out.size());
    for (std::uint64_t m : out) res.push_back(make(m));
    return res;
}

int Poset::sigma(const ElementSet& d) const {
    check(d);
    require(!d.empty(), Errc::empty_set_sigma, "sigma is undefined for the empty set");
    int r = chain_bound();
    for_each_element(d.bits, [&](int i) { r = std::min(r, len_of(i)); });
    return r;
}

bool Poset::is_hierarchical() const {
    const int n = size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (len_of(u) < len_of(v) && !leq(u, v)) return false;
    return true;
}

std::array<bool, 5> Poset::hierarchical_equivalents() const {
    const int n = size();
    require(n <= 20, Errc::too_large, "criteria (3)/(5) enumerate all subsets; n > 20 refused");
    std::array<bool, 5> r;
    r[0] = is_hierarchical();

    // (2): equal-size up-sets have equally many minimal elements.
    r[1] = true;
    {
        auto ups = up_sets();
        std::map<int, int> mins_by_size;
        for (const auto& d : ups) {
            const int mn = minimal(d).size();
            auto [it, fresh] = mins_by_size.emplace(d.size(), mn);
            if (!fresh && it->second != mn) r[1] = false;
        }
    }

    // (4): equal-size ideals have equally many maximal elements.
    r[3] = true;
    {
        auto ids = ideals();
        std::map<int, int> maxs_by_size;
        for (const auto& i : ids) {
            const int mx = maximal(i).size();
            auto [it, fresh] = maxs_by_size.emplace(i.size(), mx);
            if (!fresh && it->second != mx) r[3] = false;
        }
    }

    // (3): A dominated by its complement from above => A - max(A) below max(A).
    // (5): mirror statement with B dominating its complement.
    r[2] = true;
    r[4] = true;
    const std::uint64_t full = full_set().bits;
    for (std::uint64_t a = 0;; ++a) {
        const ElementSet A = make(a);
        bool premise3 = true;  // every x in A is below every y outside A
        for_each_element(a, [&](int x) {
            if ((above_[static_cast<std::size_t>(x)] | a) != full) premise3 = false;
        });
        if (premise3) {
            const std::uint64_t mx = maximal(A).bits;
            for_each_element(a & ~mx, [&](int c) {
                if ((above_[static_cast<std::size_t>(c)] & mx) != mx) r[2] = false;
            });
        }
        bool premise5 = true;  // every x outside A is below every y in A
        for_each_element(full & ~a, [&](int x) {
            if ((above_[static_cast<std::size_t>(x)] & a) != a) premise5 = false;
        });
        if (premise5) {
            const std::uint64_t mn = minimal(A).bits;
            for_each_element(mn, [&](int c) {
                if ((above_[static_cast<std::size_t>(c)] & (a & ~mn)) != (a & ~mn)) r[4] = false;
            });
        }
        if (a == full) break;
    }
    return r;
}

std::vector<ElementSet> Poset::ideal_chain() const { return ideal_chain_through(empty_set()); }

std::vector<ElementSet> Poset::ideal_chain_through(const ElementSet& ideal) const {
    check(ideal);
    require(is_ideal(ideal), Errc::not_an_ideal, "chain anchor is not an ideal");
    std::vector<std::uint64_t> down;  // ideal, ideal minus one maximal element, ..., 0
    for (std::uint64_t cur = ideal.bits;;) {
        down.push_back(cur);
        if (cur == 0) break;
        cur &= ~(1ull << std::countr_zero(maximal(make(cur)).bits));
    }
    std::vector<ElementSet> chain;
    chain.reserve(static_cast<std::size_t>(size()) + 1);
    for (auto it = down.rbegin(); it != down.rend(); ++it) chain.push_back(make(*it));
    const std::uint64_t full = full_set().bits;
    for (std::uint64_t cur = ideal.bits; cur != full;) {
        cur |= 1ull << std::countr_zero(minimal(make(full & ~cur)).bits);
        chain.push_back(make(cur));
    }
    return chain;
}

}  // namespace posetfr
