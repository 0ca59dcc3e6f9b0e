#include "posetfr/weight_enum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace posetfr {

BigInt IntPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& v : c) s += v;
    return s;
}

std::string IntPoly::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << " + ";
        os << c[i].str();
        if (i) os << "*x^" << i;
    }
    return os.str();
}

IntPoly f_poly_bruteforce(const AmbientSpace& space, std::uint64_t alpha, std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    const auto& field = *space.field();
    const int n = space.n();
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(n) + 1,
                                                  std::vector<std::int64_t>(space.exponent(), 0));
    for (std::uint64_t beta = 0; beta < total; ++beta)
        ++counts[static_cast<std::size_t>(space.pweight(beta))][space.pair_exponent(alpha, beta)];
    IntPoly f;
    f.c.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t l = 0; l <= static_cast<std::size_t>(n); ++l)
        f.c[l] = field.from_counts(counts[l]).as_integer();
    f.normalize();
    return f;
}

namespace {

BigInt product_of_orders(const AmbientSpace& space, std::uint64_t mask, bool minus_one) {
    BigInt p = 1;
    for_each_element(mask, [&](int i) {
        p *= BigInt(space.coordinate_order(i)) - (minus_one ? 1 : 0);
    });
    return p;
}

}  // namespace

BigInt block_sum(const AmbientSpace& space, std::uint64_t alpha, const ElementSet& ideal) {
    const Poset& poset = space.poset();
    poset.check(ideal);
    require(poset.is_ideal(ideal), Errc::not_an_ideal, "block_sum requires an ideal of P");
    const ElementSet d = poset.up_closure(space.support(alpha));
    const ElementSet mx = poset.maximal(ideal);
    const std::uint64_t meet = ideal.bits & d.bits;
    if ((meet & ~mx.bits) != 0) return 0;  // I cap D not inside max(I)
    BigInt v = product_of_orders(space, ideal.bits & ~mx.bits, false) *
               product_of_orders(space, mx.bits & ~d.bits, true);
    return (std::popcount(meet) % 2 == 0) ? v : -v;
}

IntPoly f_poly_closed(const AmbientSpace& space, std::uint64_t alpha) {
    const Poset& poset = space.poset();
    const ElementSet d = poset.up_closure(space.support(alpha));
    const ElementSet mind = poset.minimal(d);
    const ElementSet x = poset.set_from_mask((poset.full_set().bits & ~d.bits) | mind.bits);
    IntPoly f;
    f.c.assign(static_cast<std::size_t>(x.size()) + 1, 0);
    for (const ElementSet& ideal : poset.ideals(x)) {
        const ElementSet mx = poset.maximal(ideal);
        BigInt term = product_of_orders(space, ideal.bits & ~mx.bits, false) *
                      product_of_orders(space, mx.bits & ~mind.bits, true);
        if (std::popcount(ideal.bits & d.bits) % 2 != 0) term = -term;
        f.c[static_cast<std::size_t>(ideal.size())] += term;
    }
    f.normalize();
    return f;
}

std::pair<int, BigInt> f_degree_leading(const AmbientSpace& space, const ElementSet& dual_ideal) {
    const Poset& poset = space.poset();
    poset.check(dual_ideal);
    require(space.all_coordinates_at_least(2), Errc::size_one_present,
            "degree formula requires every h_i >= 2");
    require(poset.is_up_set(dual_ideal), Errc::not_a_dual_ideal,
            "D must be an ideal of the dual poset");
    const ElementSet mind = poset.minimal(dual_ideal);
    const ElementSet x =
        poset.set_from_mask((poset.full_set().bits & ~dual_ideal.bits) | mind.bits);
    const ElementSet mx = poset.maximal(x);
    const int degree = poset.size() - dual_ideal.size() + mind.size();
    BigInt lead = product_of_orders(space, x.bits & ~mx.bits, false) *
                  product_of_orders(space, mx.bits & ~mind.bits, true);
    if (mind.size() % 2 != 0) lead = -lead;
    return {degree, lead};
}

Partition lambda_via_f(const AmbientSpace& space, ExecMode mode, std::uint64_t cap) {
    const std::uint64_t total = space.checked_size(cap);
    std::vector<IntPoly> polys(total);
    parallel_for(mode, static_cast<std::int64_t>(total), [&](std::int64_t a) {
        polys[static_cast<std::size_t>(a)] = f_poly_closed(space, static_cast<std::uint64_t>(a));
    });
    Partition p;
    p.kind = Partition::Carrier::characters;
    p.block_of.assign(total, -1);
    std::map<std::vector<BigInt>, std::int32_t> ids;
    for (std::size_t a = 0; a < total; ++a) {
        auto [it, fresh] = ids.emplace(polys[a].c, static_cast<std::int32_t>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_of[a] = it->second;
        p.blocks[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(a));
    }
    return p;
}

DegreeDualWeightReport degree_determined_by_dual_weight(const AmbientSpace& space,
                                                        std::uint64_t cap) {
    require(space.all_coordinates_at_least(2), Errc::size_one_present,
            "criterion requires every h_i >= 2");
    const std::uint64_t total = space.checked_size(cap);
    DegreeDualWeightReport r;
    r.hierarchical = space.poset().is_hierarchical();
    r.degree_determined = true;
    std::map<int, int> degree_by_weight;
    for (std::uint64_t a = 0; a < total; ++a) {
        const int w = space.dual_pweight(a);
        const int deg = f_poly_closed(space, a).degree();
        auto [it, fresh] = degree_by_weight.emplace(w, deg);
        if (!fresh && it->second != deg) r.degree_determined = false;
    }
    return r;
}

bool hier_same_block_criterion(const AmbientSpace& space, std::uint64_t alpha,
                               std::uint64_t gamma) {
    const Poset& poset = space.poset();
    require(poset.is_hierarchical(), Errc::not_hierarchical,
            "criterion is stated for hierarchical posets");
    auto order_multiset = [&](std::uint64_t w) {
        std::vector<std::uint64_t> hs;
        for_each_element(poset.up_closure(space.support(w)).bits,
                         [&](int i) { hs.push_back(space.coordinate_order(i)); });
        std::sort(hs.begin(), hs.end());
        return hs;
    };
    return order_multiset(alpha) == order_multiset(gamma);
}

LeadingAbsReport leading_abs_criterion(const AmbientSpace& space, std::uint64_t alpha,
                                       std::uint64_t gamma) {
    const Poset& poset = space.poset();
    bool uniform = poset.size() > 0 && space.coordinate_order(0) >= 3;
    for (int i = 0; uniform && i < poset.size(); ++i)
        uniform = space.coordinate_order(i) == space.coordinate_order(0);
    require(uniform, Errc::sizes_not_uniform,
            "criterion requires uniform coordinate orders of size >= 3");

    const ElementSet d = poset.up_closure(space.support(alpha));
    const ElementSet b = poset.up_closure(space.support(gamma));
    auto x_of = [&](const ElementSet& up) {
        return poset.set_from_mask((poset.full_set().bits & ~up.bits) | poset.minimal(up).bits);
    };
    const ElementSet x = x_of(d), v = x_of(b);
    LeadingAbsReport r;
    r.size_condition = (x.size() - poset.maximal(x).size() == v.size() - poset.maximal(v).size()) &&
                       d.size() == b.size();
    BigInt la = f_degree_leading(space, d).second;
    BigInt lb = f_degree_leading(space, b).second;
    r.abs_leading_equal = abs(la) == abs(lb);
    return r;
}

}  // namespace posetfr
