#include <doctest.h>

#include <random>

#include "posetfr/pi_poly.hpp"
#include "posetfr/weight_enum.hpp"
#include "test_util.hpp"

using namespace posetfr;
using namespace posetfr::testutil;

namespace {

// readable constructors for expected symbolic polynomials
MultiPoly t(const SymbolicRing& r, const Poset& p, const char* name) {
    return r.variable(2 * static_cast<std::size_t>(p.index_of(name)));
}
MultiPoly e(const SymbolicRing& r, const Poset& p, const char* name) {
    return r.variable(2 * static_cast<std::size_t>(p.index_of(name)) + 1);
}

template <class R>
RingPoly<R> make_poly(const R& ring, std::vector<typename R::Elem> cs) {
    RingPoly<R> p;
    p.c = std::move(cs);
    poly_normalize(ring, p);
    return p;
}

PiParams<RationalRing> rational_draw(const RationalRing& ring, int n, std::mt19937_64& rng) {
    // positive tau, eta > -1 and nonzero
    std::vector<BigRat> tau, eta;
    for (int i = 0; i < n; ++i) {
        tau.push_back(ring.from_fraction(1 + static_cast<long>(rng() % 12),
                                         1 + static_cast<long>(rng() % 7)));
        long num = 1 + static_cast<long>(rng() % 9);
        if (rng() % 2) num = -num;
        long den = num < 0 ? 10 + static_cast<long>(rng() % 13) : 1 + static_cast<long>(rng() % 5);
        eta.push_back(ring.from_fraction(num, den));  // > -1 since |num| < den when negative
    }
    return make_pi_params(ring, std::move(tau), std::move(eta));
}

}  // namespace

TEST_CASE("phi case split") {
    const Poset c2 = chain(2);
    const SymbolicRing ring = symbolic_ring_for(c2);
    const auto params = symbolic_params(ring);
    CHECK(ring.eq(phi(c2, ring, params, c2.empty_set(), c2.empty_set()), ring.one()));
    const auto d_b = c2.set_of(std::vector<std::string>{"b"});
    CHECK(ring.eq(phi(c2, ring, params, d_b, c2.full_set()), ring.neg(t(ring, c2, "a"))));
    CHECK(ring.is_zero(phi(c2, ring, params, c2.full_set(), c2.full_set())));
}

TEST_CASE("pi over one and two elements") {
    const Poset one = antichain(1);
    const SymbolicRing r1 = symbolic_ring_for(one);
    const auto p1 = symbolic_params(r1);
    CHECK(poly_eq(r1, pi_direct(one, r1, p1, one.full_set(), one.empty_set()),
                  make_poly(r1, {r1.one(), e(r1, one, "a")})));
    CHECK(poly_eq(r1, pi_direct(one, r1, p1, one.full_set(), one.full_set()),
                  make_poly(r1, {r1.one(), r1.neg(r1.one())})));

    const Poset c2 = chain(2);
    const SymbolicRing r2 = symbolic_ring_for(c2);
    const auto p2 = symbolic_params(r2);
    const auto d_b = c2.set_of(std::vector<std::string>{"b"});
    CHECK(poly_eq(r2, pi_direct(c2, r2, p2, c2.full_set(), d_b),
                  make_poly(r2, {r2.one(), e(r2, c2, "a"), r2.neg(t(r2, c2, "a"))})));

    CHECK_THROWS_AS(pi_direct(c2, r2, p2, d_b, c2.full_set()), Error);
}

TEST_CASE("carrier reduction") {
    const Poset c3 = chain(3);
    const SymbolicRing ring = symbolic_ring_for(c3);
    const auto params = symbolic_params(ring);
    const auto d = c3.set_of(std::vector<std::string>{"b", "c"});
    const auto reduced = pi_reduced(c3, ring, params, c3.full_set(), d);
    CHECK(poly_eq(ring, reduced,
                  make_poly(ring, {ring.one(), e(ring, c3, "a"), ring.neg(t(ring, c3, "a"))})));
    CHECK(poly_eq(ring, reduced, pi_direct(c3, ring, params, c3.full_set(), d)));

    CHECK(poly_eq(ring,
                  pi_reduced(c3, ring, params, c3.full_set(), c3.empty_set()),
                  pi_direct(c3, ring, params, c3.full_set(), c3.empty_set())));

    const Poset v = v3();
    const SymbolicRing rv = symbolic_ring_for(v);
    const auto pv = symbolic_params(rv);
    const auto dc = v.set_of(std::vector<std::string>{"c"});
    // (1 + e_a x)(1 + e_b x) - t_a t_b x^3
    const auto ea = e(rv, v, "a"), eb = e(rv, v, "b");
    const auto expected = make_poly(
        rv, {rv.one(), rv.add(ea, eb), rv.mul(ea, eb),
             rv.neg(rv.mul(t(rv, v, "a"), t(rv, v, "b")))});
    CHECK(poly_eq(rv, pi_reduced(v, rv, pv, v.full_set(), dc), expected));

    CHECK_THROWS_AS(pi_reduced(v, rv, pv, v.full_set(),
                               v.set_of(std::vector<std::string>{"a"})),
                    Error);

    // reduction equals the direct sum for every up-closed D in every carrier
    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params(rq);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t x = 0;; ++x) {
                const ElementSet xs = q.set_from_mask(x);
                for (std::uint64_t d_bits = x;; d_bits = (d_bits - 1) & x) {
                    const ElementSet ds = q.set_from_mask(d_bits);
                    if (q.is_up_closed_in(xs, ds))
                        CHECK(poly_eq(rq, pi_reduced(q, rq, pq, xs, ds),
                                      pi_direct(q, rq, pq, xs, ds)));
                    if (d_bits == 0) break;
                }
                if (x == full) break;
            }
        }
}

TEST_CASE("peel identity in all three cases") {
    const Poset c3 = chain(3);
    const SymbolicRing ring = symbolic_ring_for(c3);
    const auto params = symbolic_params(ring);
    const int c_idx = c3.index_of("c");
    CHECK(check_peel_identity(c3, ring, params, c3.full_set(),
                              c3.set_of(std::vector<std::string>{"c"}), c_idx));
    CHECK(check_peel_identity(c3, ring, params, c3.full_set(),
                              c3.set_of(std::vector<std::string>{"b", "c"}), c_idx));
    const Poset v = v3();
    const SymbolicRing rv = symbolic_ring_for(v);
    CHECK(check_peel_identity(v, rv, symbolic_params(rv), v.full_set(), v.empty_set(),
                              v.index_of("c")));

    CHECK_THROWS_AS(check_peel_identity(c3, ring, params, c3.full_set(),
                                        c3.set_of(std::vector<std::string>{"c"}),
                                        c3.index_of("a")),
                    Error);

    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params(rq);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t y = 0;; ++y) {
                const ElementSet ys = q.set_from_mask(y);
                for (std::uint64_t d_bits = y;; d_bits = (d_bits - 1) & y) {
                    const ElementSet ds = q.set_from_mask(d_bits);
                    if (q.is_up_closed_in(ys, ds))
                        for_each_element(q.maximal(ys).bits, [&](int el) {
                            CHECK(check_peel_identity(q, rq, pq, ys, ds, el));
                        });
                    if (d_bits == 0) break;
                }
                if (y == full) break;
            }
        }
}

TEST_CASE("augment identity") {
    const Poset one = antichain(1);
    const SymbolicRing r1 = symbolic_ring_for(one);
    CHECK(check_augment_identity(one, r1, symbolic_params(r1), one.full_set(), one.empty_set(),
                                 0));
    const Poset c2 = chain(2);
    const SymbolicRing r2 = symbolic_ring_for(c2);
    CHECK(check_augment_identity(c2, r2, symbolic_params(r2), c2.full_set(), c2.empty_set(),
                                 c2.index_of("b")));

    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params(rq);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t y = 0;; ++y) {
                const ElementSet ys = q.set_from_mask(y);
                for (std::uint64_t l_bits = y;; l_bits = (l_bits - 1) & y) {
                    const ElementSet ls = q.set_from_mask(l_bits);
                    if (q.is_up_closed_in(ys, ls))
                        for_each_element(q.maximal(ys).bits & ~l_bits, [&](int el) {
                            CHECK(check_augment_identity(q, rq, pq, ys, ls, el));
                        });
                    if (l_bits == 0) break;
                }
                if (y == full) break;
            }
        }
}

TEST_CASE("inclusion-exclusion identities under the shift") {
    const Poset a2 = antichain(2);
    const SymbolicRing ring = symbolic_ring_for(a2);
    const auto shifted = symbolic_params_shifted(ring);
    const auto both = check_inclusion_exclusion(a2, ring, shifted, a2.full_set(), a2.full_set());
    CHECK(both.first);
    CHECK(both.second);

    // trivially true with D empty
    const auto none = check_inclusion_exclusion(a2, ring, shifted, a2.full_set(), a2.empty_set());
    CHECK(none.first);
    CHECK(none.second);

    const Poset v = v3();
    const SymbolicRing rv = symbolic_ring_for(v);
    const auto sv = symbolic_params_shifted(rv);
    const auto vres = check_inclusion_exclusion(v, rv, sv, v.full_set(),
                                                v.set_of(std::vector<std::string>{"c"}));
    CHECK(vres.first);
    CHECK(vres.second);

    // generic (unshifted) parameters must be rejected
    CHECK_THROWS_AS(check_inclusion_exclusion(a2, ring, symbolic_params(ring), a2.full_set(),
                                              a2.full_set()),
                    Error);

    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params_shifted(rq);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t y = 0;; ++y) {
                const ElementSet ys = q.set_from_mask(y);
                const std::uint64_t mx = q.maximal(ys).bits;
                for (std::uint64_t d_bits = mx;; d_bits = (d_bits - 1) & mx) {
                    const auto r = check_inclusion_exclusion(q, rq, pq, ys,
                                                             q.set_from_mask(d_bits));
                    CHECK(r.first);
                    CHECK(r.second);
                    if (d_bits == 0) break;
                }
                if (y == full) break;
            }
        }
}

TEST_CASE("reduced inclusion-exclusion") {
    const Poset c3 = chain(3);
    const SymbolicRing ring = symbolic_ring_for(c3);
    const auto params = symbolic_params_shifted(ring);
    CHECK(check_reduced_inclusion_exclusion(c3, ring, params, c3.full_set(),
                                            c3.set_of(std::vector<std::string>{"b", "c"})));
    CHECK(check_reduced_inclusion_exclusion(c3, ring, params, c3.full_set(), c3.empty_set()));
    const Poset v = v3();
    const SymbolicRing rv = symbolic_ring_for(v);
    CHECK(check_reduced_inclusion_exclusion(v, rv, symbolic_params_shifted(rv), v.full_set(),
                                            v.full_set()));

    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params_shifted(rq);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t x = 0;; ++x) {
                const ElementSet xs = q.set_from_mask(x);
                for (std::uint64_t d_bits = x;; d_bits = (d_bits - 1) & x) {
                    const ElementSet ds = q.set_from_mask(d_bits);
                    if (q.is_up_closed_in(xs, ds))
                        CHECK(check_reduced_inclusion_exclusion(q, rq, pq, xs, ds));
                    if (d_bits == 0) break;
                }
                if (x == full) break;
            }
        }
}

TEST_CASE("degree and leading coefficient over fields") {
    const Poset c2 = chain(2);
    RationalRing ring;
    const auto params = make_pi_params(
        ring, {BigRat(2), BigRat(5, 3)}, {BigRat(7, 2), BigRat(-1, 3)});
    const auto d_b = c2.set_of(std::vector<std::string>{"b"});
    const auto [deg, lead] = degree_leading(c2, ring, params, c2.full_set(), d_b);
    CHECK(deg == 2);
    CHECK(lead == BigRat(-2));  // -tau_a

    const Poset a2 = antichain(2);
    const auto pa = make_pi_params(ring, {BigRat(3), BigRat(4)}, {BigRat(1, 2), BigRat(5)});
    const auto [dega, leada] = degree_leading(a2, ring, pa, a2.full_set(), a2.empty_set());
    CHECK(dega == 2);
    CHECK(leada == BigRat(5, 2));  // eta_a * eta_b

    const Poset zero = Poset({}, {});
    const auto pz = make_pi_params(ring, {}, {});
    CHECK(degree_leading(zero, ring, pz, zero.full_set(), zero.empty_set()) ==
          std::pair<int, BigRat>{0, BigRat(1)});

    IntRing zring;
    const auto zp = params_from_orders(zring, cyclic_space(c2, {2, 2}));
    CHECK_THROWS_AS(degree_leading(c2, zring, zp, c2.full_set(), d_b), Error);
    const auto zeroed = make_pi_params(ring, {BigRat(0), BigRat(1)}, {BigRat(1), BigRat(1)});
    CHECK_THROWS_AS(degree_leading(c2, ring, zeroed, c2.full_set(), d_b), Error);

    // random nonzero rational draws across all posets n <= 4
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 4; ++n)
        for (const Poset& q : all_posets(n)) {
            const auto pq = rational_draw(ring, n, rng);
            for (const auto& d : q.up_sets())
                CHECK_NOTHROW(degree_leading(q, ring, pq, q.full_set(), d));
        }
}

TEST_CASE("hierarchical closed form") {
    const Poset v = v3();
    const SymbolicRing rv = symbolic_ring_for(v);
    const auto pv = symbolic_params(rv);
    const auto dc = v.set_of(std::vector<std::string>{"c"});
    CHECK(poly_eq(rv, hierarchical_closed_form(v, rv, pv, dc),
                  pi_direct(v, rv, pv, v.full_set(), dc)));

    const Poset c2 = chain(2);
    const SymbolicRing r2 = symbolic_ring_for(c2);
    const auto p2 = symbolic_params(r2);
    const auto d_b = c2.set_of(std::vector<std::string>{"b"});
    CHECK(poly_eq(r2, hierarchical_closed_form(c2, r2, p2, d_b),
                  make_poly(r2, {r2.one(), e(r2, c2, "a"), r2.neg(t(r2, c2, "a"))})));

    const Poset c3 = chain(3);
    const SymbolicRing r3 = symbolic_ring_for(c3);
    const auto p3 = symbolic_params(r3);
    const auto d_c = c3.set_of(std::vector<std::string>{"c"});
    CHECK(poly_eq(r3, hierarchical_closed_form(c3, r3, p3, d_c),
                  pi_direct(c3, r3, p3, c3.full_set(), d_c)));

    CHECK_THROWS_AS(hierarchical_closed_form(l3(), symbolic_ring_for(l3()),
                                             symbolic_params(symbolic_ring_for(l3())),
                                             l3().set_of(std::vector<std::string>{"c"})),
                    Error);
    CHECK_THROWS_AS(hierarchical_closed_form(v, rv, pv, v.empty_set()), Error);
    CHECK_THROWS_AS(hierarchical_closed_form(v, rv, pv,
                                             v.set_of(std::vector<std::string>{"a"})),
                    Error);

    for (int n = 1; n <= 4; ++n)
        for (const Poset& q : all_posets(n)) {
            if (!q.is_hierarchical()) continue;
            const SymbolicRing rq = symbolic_ring_for(q);
            const auto pq = symbolic_params(rq);
            for (const auto& d : q.up_sets()) {
                if (d.empty()) continue;
                CHECK(poly_eq(rq, hierarchical_closed_form(q, rq, pq, d),
                              pi_direct(q, rq, pq, q.full_set(), d)));
            }
        }
}

TEST_CASE("polynomial order") {
    RationalRing ring;
    const auto f = make_poly(ring, {BigRat(1), BigRat(-2), BigRat(1)});   // (1-x)^2
    const auto g = make_poly(ring, {BigRat(1), BigRat(1), BigRat(-2)});   // (1-x)(1+2x)
    CHECK(poly_order_leq(ring, f, f));
    CHECK(poly_order_leq(ring, f, g));
    CHECK_FALSE(poly_order_leq(ring, g, f));
    const auto low = make_poly(ring, {BigRat(5), BigRat(1)});
    CHECK(poly_order_leq(ring, low, f));
    CHECK_FALSE(poly_order_leq(ring, f, low));

    // total order on theta sets: antisymmetric, transitive, total
    std::mt19937_64 rng(5);
    for (const Poset& q : all_posets(3)) {
        const auto params = rational_draw(ring, 3, rng);
        const auto th = upset_polynomials(q, ring, params);
        for (const auto& a : th.distinct)
            for (const auto& b : th.distinct) {
                CHECK((poly_order_leq(ring, a, b) || poly_order_leq(ring, b, a)));
                if (poly_order_leq(ring, a, b) && poly_order_leq(ring, b, a))
                    CHECK(poly_eq(ring, a, b));
                for (const auto& c : th.distinct)
                    if (poly_order_leq(ring, a, b) && poly_order_leq(ring, b, c))
                        CHECK(poly_order_leq(ring, a, c));
            }
    }
}

TEST_CASE("strict containment order") {
    RationalRing ring;
    const Poset a2 = antichain(2);
    const auto p22 = make_pi_params(ring, {BigRat(2), BigRat(2)}, {BigRat(1), BigRat(1)});
    CHECK(check_strict_order(a2, ring, p22, a2.full_set(),
                             a2.set_of(std::vector<std::string>{"a"}), a2.full_set()));
    const Poset c2 = chain(2);
    const auto pc = make_pi_params(ring, {BigRat(2), BigRat(2)}, {BigRat(1), BigRat(1)});
    CHECK(check_strict_order(c2, ring, pc, c2.full_set(), c2.empty_set(),
                             c2.set_of(std::vector<std::string>{"b"})));
    CHECK_THROWS_AS(check_strict_order(a2, ring, p22, a2.full_set(), a2.full_set(),
                                       a2.full_set()),
                    Error);
    const auto bad = make_pi_params(ring, {BigRat(2), BigRat(2)}, {BigRat(0), BigRat(1)});
    CHECK_THROWS_AS(check_strict_order(a2, ring, bad, a2.full_set(),
                                       a2.set_of(std::vector<std::string>{"a"}),
                                       a2.full_set()),
                    Error);

    // single-step growth of an up-set inside max(Y) strictly lowers the poly
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const auto params = rational_draw(ring, n, rng);
            const std::uint64_t full = q.full_set().bits;
            for (std::uint64_t y = 0;; ++y) {
                const ElementSet ys = q.set_from_mask(y);
                const std::uint64_t mx = q.maximal(ys).bits;
                for (std::uint64_t a_bits = mx;; a_bits = (a_bits - 1) & mx) {
                    if (a_bits != mx) {
                        for_each_element(mx & ~a_bits, [&](int el) {
                            const auto fa = pi_direct(q, ring, params, ys,
                                                      q.set_from_mask(a_bits));
                            const auto fae = pi_direct(q, ring, params, ys,
                                                       q.set_from_mask(a_bits | (1ull << el)));
                            CHECK_FALSE(poly_eq(ring, fa, fae));
                            CHECK(poly_order_leq(ring, fae, fa));
                        });
                    }
                    if (a_bits == 0) break;
                }
                if (y == full) break;
            }
        }
}

TEST_CASE("up-set polynomial sets") {
    IntRing ring;
    const auto p21 = make_pi_params(ring, {BigInt(2), BigInt(2), BigInt(2)},
                                    {BigInt(1), BigInt(1), BigInt(1)});
    CHECK(upset_polynomials(chain(3), ring, p21).count() == 4);
    CHECK(upset_polynomials(l3(), ring, p21).count() >= 5);
    const auto p2 = make_pi_params(ring, {BigInt(2), BigInt(2)}, {BigInt(1), BigInt(1)});
    CHECK(upset_polynomials(antichain(2), ring, p2).count() == 3);

    const auto zero_eta = make_pi_params(ring, {BigInt(2), BigInt(2)}, {BigInt(0), BigInt(1)});
    CHECK_THROWS_AS(upset_polynomials(antichain(2), ring, zero_eta), Error);
}

TEST_CASE("uniformity classification") {
    RationalRing ring;
    const Poset c3 = chain(3);
    const auto pc = make_pi_params(ring, {BigRat(2), BigRat(3), BigRat(2)},
                                   {BigRat(5), BigRat(7), BigRat(11)});
    // a chain has one element per level, so eta is trivially level-uniform
    const auto rc = uniformity_classification(c3, ring, pc);
    CHECK(rc.hierarchical);
    CHECK(rc.size_forces_equal);
    CHECK(rc.equal_iff_size);
    CHECK(rc.level_eta_uniform);
    CHECK(rc.conditions_agree());

    const Poset v = v3();
    const auto pv_bad = make_pi_params(ring, {BigRat(2), BigRat(2), BigRat(2)},
                                       {BigRat(1), BigRat(2), BigRat(1)});
    const auto rv = uniformity_classification(v, ring, pv_bad);
    CHECK_FALSE(rv.level_eta_uniform);
    CHECK_FALSE(rv.size_forces_equal);
    CHECK_FALSE(rv.equal_iff_size);
    CHECK(rv.conditions_agree());

    const auto pl = make_pi_params(ring, {BigRat(2), BigRat(2), BigRat(2)},
                                   {BigRat(1), BigRat(1), BigRat(1)});
    const auto rl = uniformity_classification(l3(), ring, pl);
    CHECK_FALSE(rl.level_eta_uniform);
    CHECK(rl.conditions_agree());
    CHECK(rl.degree_evaluated);
    CHECK(rl.degree_by_size == rl.hierarchical);

    // the three conditions stay equivalent across posets and parameter styles
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n)) {
            const auto uniform = make_pi_params(
                ring, std::vector<BigRat>(size_t(n), BigRat(3)),
                std::vector<BigRat>(size_t(n), BigRat(2)));
            const auto ru = uniformity_classification(q, ring, uniform);
            CHECK(ru.conditions_agree());
            if (ru.degree_evaluated) CHECK(ru.degree_by_size == ru.hierarchical);
            if (ru.eta_multiset_evaluated) CHECK(ru.equal_iff_eta_multiset);

            const auto random = rational_draw(ring, n, rng);
            const auto rr = uniformity_classification(q, ring, random);
            CHECK(rr.conditions_agree());
            if (rr.eta_multiset_evaluated) CHECK(rr.equal_iff_eta_multiset);
        }
}

TEST_CASE("pi generalizes the weight enumerator") {
    IntRing ring;
    for (int n = 1; n <= 3; ++n)
        for (const Poset& q : all_posets(n))
            for (const auto& sizes : all_size_assignments(n, {2, 3})) {
                const AmbientSpace s = cyclic_space(q, sizes);
                const auto params = params_from_orders(ring, s);
                for (std::uint64_t alpha = 0; alpha < s.size(); ++alpha) {
                    const ElementSet d = q.up_closure(s.support(alpha));
                    const auto pi = pi_direct(q, ring, params, q.full_set(), d);
                    const IntPoly f = f_poly_closed(s, alpha);
                    REQUIRE(pi.c.size() == f.c.size());
                    for (std::size_t i = 0; i < f.c.size(); ++i) CHECK(pi.c[i] == f.c[i]);
                }
            }
}

TEST_CASE("order-one coordinates outside the stated count hypotheses") {
    // With an h_i = 1 coordinate the eta_i = 0 parameter falls outside the
    // positivity hypotheses, so the |Theta| machinery refuses it; the raw
    // polynomial set and |Lambda| are still computable and are recorded here
    // without asserting any relation between them.
    IntRing ring;
    const AmbientSpace s = cyclic_space(v3(), {1, 2, 2});
    const auto params = params_from_orders(ring, s);
    CHECK_FALSE(params.positive_side);
    CHECK_THROWS_AS(upset_polynomials(s.poset(), ring, params), Error);

    std::vector<RingPoly<IntRing>> distinct;
    for (const auto& m : s.poset().up_sets()) {
        const auto p = pi_direct(s.poset(), ring, params, s.poset().full_set(), m);
        bool seen = false;
        for (const auto& q : distinct) seen = seen || poly_eq(ring, p, q);
        if (!seen) distinct.push_back(p);
    }
    const auto lambda = dual_partition(s, weight_partition(s), ExecMode::serial);
    MESSAGE("h=(1,2,2) on the join poset: |Lambda| = ", lambda.block_count(),
            ", raw distinct pi count = ", distinct.size());
    CHECK(distinct.size() >= 1);
    CHECK(lambda.block_count() >= 1);
}

TEST_CASE("mod-p ring exercises the field hypotheses") {
    ModRing ring(10007);
    const Poset c2 = chain(2);
    const auto params = make_pi_params(ring, {ring.from_int(2), ring.from_int(3)},
                                       {ring.from_int(1), ring.from_int(2)});
    CHECK(params.tau_all_nonzero);
    const auto [deg, lead] = degree_leading(c2, ring, params, c2.full_set(),
                                            c2.set_of(std::vector<std::string>{"b"}));
    CHECK(deg == 2);
    CHECK(lead == ring.from_int(-2));
    const auto rep = uniformity_classification(c2, ring, params);
    CHECK(rep.conditions_agree());
}
