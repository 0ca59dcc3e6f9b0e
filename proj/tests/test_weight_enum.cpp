#include <doctest.h>

#include "posetfr/weight_enum.hpp"
#include "test_util.hpp"

using namespace posetfr;
using namespace posetfr::testutil;

namespace {

IntPoly poly(std::initializer_list<long> v) {
    IntPoly p;
    p.c.assign(v.begin(), v.end());
    p.normalize();
    return p;
}

// Oracle for block sums: the raw cyclotomic sum over words whose support
// closure is exactly the given ideal.
BigInt block_sum_oracle(const AmbientSpace& s, std::uint64_t alpha, const ElementSet& ideal) {
    Cyclotomic sum = s.field()->zero();
    for (std::uint64_t beta = 0; beta < s.size(); ++beta)
        if (s.poset().down_closure(s.support(beta)) == ideal) sum += s.char_eval(alpha, beta);
    return sum.as_integer();
}

std::vector<AmbientSpace> sweep_spaces(int max_n) {
    std::vector<AmbientSpace> out;
    for (int n = 1; n <= max_n; ++n)
        for (const Poset& p : all_posets(n))
            for (const auto& sizes : all_size_assignments(n, {2, 3}))
                out.push_back(cyclic_space(p, sizes));
    return out;
}

}  // namespace

TEST_CASE("brute-force weight enumerator polynomials") {
    const AmbientSpace c2 = cyclic_space(chain(2), {2, 2});
    const std::uint64_t chi10 = c2.index_of(Codeword{{1, 0}});
    const std::uint64_t chi01 = c2.index_of(Codeword{{0, 1}});
    CHECK(f_poly_bruteforce(c2, chi10) == poly({1, -1}));
    CHECK(f_poly_bruteforce(c2, chi01) == poly({1, 1, -2}));

    const AmbientSpace a2 = cyclic_space(antichain(2), {2, 2});
    CHECK(f_poly_bruteforce(a2, 0) == poly({1, 2, 1}));
}

TEST_CASE("closed form equals brute force") {
    const AmbientSpace c2 = cyclic_space(chain(2), {2, 2});
    CHECK(f_poly_closed(c2, c2.index_of(Codeword{{1, 0}})) == poly({1, -1}));
    const AmbientSpace a2 = cyclic_space(antichain(2), {2, 2});
    CHECK(f_poly_closed(a2, 0) == poly({1, 2, 1}));  // prod (1 + (h_i - 1) x)
    const AmbientSpace v = cyclic_space(v3(), {2, 2, 2});
    CHECK(f_poly_closed(v, 0) == f_poly_bruteforce(v, 0));

    for (const AmbientSpace& s : sweep_spaces(3))
        for (std::uint64_t alpha = 0; alpha < s.size(); ++alpha)
            CHECK(f_poly_closed(s, alpha) == f_poly_bruteforce(s, alpha));

    // mixed cyclic factors at a coordinate exercise nontrivial roots of unity
    const AmbientSpace mixed = AmbientSpace(chain(2), {{2, 2}, {4}});
    for (std::uint64_t alpha = 0; alpha < mixed.size(); ++alpha)
        CHECK(f_poly_closed(mixed, alpha) == f_poly_bruteforce(mixed, alpha));
    const AmbientSpace mixed2 = AmbientSpace(l3(), {{2}, {2, 2}, {4}});
    for (std::uint64_t alpha = 0; alpha < mixed2.size(); ++alpha)
        CHECK(f_poly_closed(mixed2, alpha) == f_poly_bruteforce(mixed2, alpha));
}

TEST_CASE("order-one coordinates stay consistent") {
    const AmbientSpace s = cyclic_space(l3(), {1, 2, 2});
    for (std::uint64_t alpha = 0; alpha < s.size(); ++alpha)
        CHECK(f_poly_closed(s, alpha) == f_poly_bruteforce(s, alpha));
}

TEST_CASE("ideal block sums") {
    const AmbientSpace c2 = cyclic_space(chain(2), {2, 2});
    const Poset& p = c2.poset();
    const std::uint64_t chi01 = c2.index_of(Codeword{{0, 1}});
    const std::uint64_t chi10 = c2.index_of(Codeword{{1, 0}});
    CHECK(block_sum(c2, chi01, p.full_set()) == -2);
    CHECK(block_sum(c2, chi01, p.empty_set()) == 1);
    CHECK(block_sum(c2, chi10, p.full_set()) == 0);  // I cap D reaches below max(I)
    CHECK_THROWS_AS(block_sum(c2, chi01, p.set_of(std::vector<std::string>{"b"})), Error);

    for (const AmbientSpace& s : sweep_spaces(2))
        for (std::uint64_t alpha = 0; alpha < s.size(); ++alpha) {
            IntPoly assembled;
            assembled.c.assign(static_cast<std::size_t>(s.n()) + 1, 0);
            for (const auto& ideal : s.poset().ideals()) {
                const BigInt v = block_sum(s, alpha, ideal);
                CHECK(v == block_sum_oracle(s, alpha, ideal));
                assembled.c[static_cast<std::size_t>(ideal.size())] += v;
            }
            assembled.normalize();
            CHECK(assembled == f_poly_bruteforce(s, alpha));
        }
}

TEST_CASE("mass conservation") {
    for (const AmbientSpace& s : sweep_spaces(2))
        CHECK(f_poly_bruteforce(s, 0).eval_at_one() == BigInt(s.size()));
}

TEST_CASE("degree and leading coefficient formulas") {
    const AmbientSpace c2 = cyclic_space(chain(2), {2, 2});
    const Poset& p = c2.poset();
    CHECK(f_degree_leading(c2, p.full_set()) == std::pair<int, BigInt>{1, -1});
    CHECK(f_degree_leading(c2, p.set_of(std::vector<std::string>{"b"})) ==
          std::pair<int, BigInt>{2, -2});
    const AmbientSpace a2 = cyclic_space(antichain(2), {2, 2});
    CHECK(f_degree_leading(a2, a2.poset().empty_set()) == std::pair<int, BigInt>{2, 1});

    CHECK_THROWS_AS(f_degree_leading(c2, p.set_of(std::vector<std::string>{"a"})), Error);
    const AmbientSpace ones = cyclic_space(chain(2), {1, 2});
    CHECK_THROWS_AS(f_degree_leading(ones, ones.poset().full_set()), Error);

    // formulas match the actual polynomial whenever every h_i >= 2
    for (const AmbientSpace& s : sweep_spaces(3))
        for (const auto& d : s.poset().up_sets()) {
            // pick any character with that dual support closure
            for (std::uint64_t alpha = 0; alpha < s.size(); ++alpha) {
                if (s.poset().up_closure(s.support(alpha)) != d) continue;
                const auto [deg, lead] = f_degree_leading(s, d);
                const IntPoly f = f_poly_closed(s, alpha);
                CHECK(f.degree() == deg);
                CHECK(f.leading() == lead);
                break;
            }
        }
}

TEST_CASE("lambda via polynomials equals the cyclotomic dual") {
    const AmbientSpace c2 = cyclic_space(chain(2), {2, 2});
    const Partition via_f = lambda_via_f(c2, ExecMode::serial);
    CHECK(via_f.block_count() == 3);
    CHECK(via_f == dual_partition(c2, weight_partition(c2), ExecMode::serial));

    const AmbientSpace empty = cyclic_space(Poset({}, {}), {});
    CHECK(lambda_via_f(empty, ExecMode::serial).block_count() == 1);

    const AmbientSpace l = cyclic_space(l3(), {2, 2, 2});
    CHECK(lambda_via_f(l, ExecMode::serial).block_count() >= 5);

    for (const AmbientSpace& s : sweep_spaces(3))
        CHECK(lambda_via_f(s, ExecMode::serial) ==
              dual_partition(s, weight_partition(s), ExecMode::serial));
}

TEST_CASE("degree is a function of dual weight exactly for hierarchical posets") {
    CHECK(degree_determined_by_dual_weight(cyclic_space(chain(3), {2, 2, 2})).consistent());
    const auto rl = degree_determined_by_dual_weight(cyclic_space(l3(), {2, 2, 2}));
    CHECK_FALSE(rl.degree_determined);
    CHECK_FALSE(rl.hierarchical);
    const auto rn = degree_determined_by_dual_weight(cyclic_space(n4(), {2, 2, 2, 2}));
    CHECK_FALSE(rn.degree_determined);

    for (const AmbientSpace& s : sweep_spaces(3))
        CHECK(degree_determined_by_dual_weight(s).consistent());
}

TEST_CASE("hierarchical same-block criterion") {
    const AmbientSpace v = cyclic_space(v3(), {2, 2, 2});
    const std::uint64_t ea = v.index_of(Codeword{{1, 0, 0}});
    const std::uint64_t eb = v.index_of(Codeword{{0, 1, 0}});
    const std::uint64_t ec = v.index_of(Codeword{{0, 0, 1}});
    CHECK(hier_same_block_criterion(v, ea, eb));   // closures {a,c} vs {b,c}
    CHECK_FALSE(hier_same_block_criterion(v, ec, ea));  // {c} vs {a,c}
    CHECK(hier_same_block_criterion(v, ea, ea));

    CHECK_THROWS_AS(hier_same_block_criterion(cyclic_space(l3(), {2, 2, 2}), 0, 1), Error);

    // matches dual-block equivalence on hierarchical instances
    for (const AmbientSpace& s : sweep_spaces(3)) {
        if (!s.poset().is_hierarchical()) continue;
        const Partition lambda = dual_partition(s, weight_partition(s), ExecMode::serial);
        for (std::uint64_t a = 0; a < s.size(); ++a)
            for (std::uint64_t g = 0; g < s.size(); ++g)
                CHECK(hier_same_block_criterion(s, a, g) ==
                      (lambda.block_of[a] == lambda.block_of[g]));
    }
}

TEST_CASE("uniform-size leading-coefficient criterion") {
    const AmbientSpace c2 = cyclic_space(chain(2), {3, 3});
    const std::uint64_t chi10 = c2.index_of(Codeword{{1, 0}});
    const std::uint64_t chi01 = c2.index_of(Codeword{{0, 1}});
    CHECK(leading_abs_criterion(c2, chi10, chi01).consistent());
    CHECK(leading_abs_criterion(c2, chi10, chi10).size_condition);
    CHECK(leading_abs_criterion(c2, chi10, chi10).abs_leading_equal);

    const AmbientSpace a2 = cyclic_space(antichain(2), {3, 3});
    const std::uint64_t da = a2.index_of(Codeword{{1, 0}});   // closure {a}
    const std::uint64_t dab = a2.index_of(Codeword{{1, 1}});  // closure {a,b}
    CHECK_FALSE(leading_abs_criterion(a2, da, dab).size_condition);

    CHECK_THROWS_AS(leading_abs_criterion(cyclic_space(chain(2), {2, 2}), 0, 1), Error);
    CHECK_THROWS_AS(leading_abs_criterion(cyclic_space(chain(2), {3, 4}), 0, 1), Error);

    for (int n = 1; n <= 3; ++n)
        for (const Poset& p : all_posets(n)) {
            const AmbientSpace s = cyclic_space(p, std::vector<std::uint32_t>(size_t(n), 3));
            for (std::uint64_t a = 0; a < s.size(); ++a)
                for (std::uint64_t g = a; g < s.size(); ++g)
                    CHECK(leading_abs_criterion(s, a, g).consistent());
        }
}
