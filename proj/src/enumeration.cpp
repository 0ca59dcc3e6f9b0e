#include "posetfr/enumeration.hpp"

#include <algorithm>

#include "posetfr/pi_poly.hpp"
#include "posetfr/weight_enum.hpp"

namespace posetfr {

std::vector<Poset> all_posets(int n) {
    require(n >= 0 && n <= 7, Errc::too_large,
            "poset enumeration is intended for n <= 7 (4231 posets already at n = 5)");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0);  // 0 none, 1 i<j, 2 j<i
    while (true) {
        std::vector<std::uint64_t> up(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = 1ull << i;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (state[p] == 1) up[static_cast<std::size_t>(pairs[p].first)] |= 1ull
                                                                              << pairs[p].second;
            if (state[p] == 2) up[static_cast<std::size_t>(pairs[p].second)] |= 1ull
                                                                               << pairs[p].first;
        }
        auto closure = up;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if ((closure[static_cast<std::size_t>(i)] >> k) & 1u)
                    closure[static_cast<std::size_t>(i)] |= closure[static_cast<std::size_t>(k)];
        if (closure == up) {
            std::vector<std::pair<std::string, std::string>> rels;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (state[p] == 1)
                    rels.emplace_back(names[static_cast<std::size_t>(pairs[p].first)],
                                      names[static_cast<std::size_t>(pairs[p].second)]);
                if (state[p] == 2)
                    rels.emplace_back(names[static_cast<std::size_t>(pairs[p].second)],
                                      names[static_cast<std::size_t>(pairs[p].first)]);
            }
            out.emplace_back(Poset(names, rels));
        }
        std::size_t pos = 0;
        while (pos < state.size() && state[pos] == 2) state[pos++] = 0;
        if (pos == state.size()) break;
        ++state[pos];
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> all_size_assignments(
    int n, const std::vector<std::uint32_t>& sizes) {
    require(!sizes.empty(), Errc::bad_instance, "size set must be nonempty");
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<std::uint32_t> a;
        for (int i = 0; i < n; ++i) a.push_back(sizes[idx[static_cast<std::size_t>(i)]]);
        out.push_back(std::move(a));
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == sizes.size() - 1)
            idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return out;
}

AmbientSpace cyclic_space(const Poset& poset, const std::vector<std::uint32_t>& orders) {
    std::vector<std::vector<std::uint32_t>> factors;
    for (std::uint32_t h : orders) factors.push_back({h});
    return AmbientSpace(poset, std::move(factors));
}

Partition random_partition(std::mt19937_64& rng, std::uint64_t carrier,
                           Partition::Carrier kind) {
    const std::uint64_t k = 1 + rng() % carrier;
    std::vector<std::int64_t> labels(carrier);
    for (auto& l : labels) l = static_cast<std::int64_t>(rng() % k);
    return Partition::from_labels(kind, labels);
}

std::string poset_key(const Poset& poset) {
    // Hasse (cover) pairs only.
    std::string key;
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            if (i == j || !poset.leq(i, j)) continue;
            bool cover = true;
            for (int m = 0; m < poset.size() && cover; ++m)
                if (m != i && m != j && poset.leq(i, m) && poset.leq(m, j)) cover = false;
            if (cover) {
                if (!key.empty()) key += ",";
                key += poset.name(i) + "<" + poset.name(j);
            }
        }
    return key.empty() ? "-" : key;
}

namespace {

bool level_sizes_uniform(const AmbientSpace& space) {
    const Poset& poset = space.poset();
    for (int u = 0; u < poset.size(); ++u)
        for (int v = u + 1; v < poset.size(); ++v)
            if (poset.len_of(u) == poset.len_of(v) &&
                space.coordinate_order(u) != space.coordinate_order(v))
                return false;
    return true;
}

SurveyRow survey_one(const Poset& poset, const std::vector<std::uint32_t>& sizes,
                     std::uint64_t cap) {
    SurveyRow row;
    row.poset_key = poset_key(poset);
    row.n = poset.size();
    {
        std::string s;
        for (std::uint32_t h : sizes) {
            if (!s.empty()) s += ",";
            s += std::to_string(h);
        }
        row.sizes_key = s;
    }
    const AmbientSpace space = cyclic_space(poset, sizes);
    row.space_size = space.checked_size(cap);
    row.hierarchical = poset.is_hierarchical();
    row.level_sizes_uniform = level_sizes_uniform(space);
    row.evaluated = space.all_coordinates_at_least(2);
    if (!row.evaluated) return row;

    const Partition q = weight_partition(space, cap);
    const Partition lambda = dual_partition(space, q, ExecMode::serial, cap);
    const Partition lambda_f = lambda_via_f(space, ExecMode::serial, cap);
    require(lambda == lambda_f, Errc::internal,
            "dual-partition paths disagree (cyclotomic vs polynomial)");
    row.lambda_blocks = lambda.block_count();

    const ReflexivityReport refl = is_reflexive(space, q, ExecMode::serial, cap);
    require(refl.consistent(), Errc::internal, "reflexivity criteria disagree");
    row.reflexive = refl.reflexive();

    const bool lambda_is_dual_weights = lambda == dual_weight_partition(space, cap);
    const bool third = row.hierarchical && row.level_sizes_uniform;
    row.duality_consistent =
        (row.reflexive == lambda_is_dual_weights) && (row.reflexive == third);

    IntRing ring;
    const auto params = params_from_orders(ring, space);
    const auto theta = upset_polynomials(poset, ring, params);
    row.theta_size = theta.count();
    row.theta_consistent = theta.count() >= static_cast<std::size_t>(row.n) + 1 &&
                           ((theta.count() == static_cast<std::size_t>(row.n) + 1) == third);
    return row;
}

}  // namespace

std::vector<SurveyRow> run_survey(const SurveyConfig& config, ExecMode mode) {
    require(config.min_n >= 0 && config.min_n <= config.max_n, Errc::bad_instance,
            "empty survey range");
    require(config.max_n <= config.budget_max_n, Errc::too_large,
            "survey size budget exceeded (raise budget_max_n deliberately)");
    struct Job {
        const Poset* poset;
        const std::vector<std::uint32_t>* sizes;
    };
    std::vector<std::vector<Poset>> posets_by_n;
    std::vector<std::vector<std::vector<std::uint32_t>>> sizes_by_n;
    std::vector<Job> jobs;
    for (int n = config.min_n; n <= config.max_n; ++n) {
        posets_by_n.push_back(all_posets(n));
        sizes_by_n.push_back(all_size_assignments(n, config.sizes));
    }
    for (std::size_t b = 0; b < posets_by_n.size(); ++b)
        for (const Poset& p : posets_by_n[b])
            for (const auto& s : sizes_by_n[b]) jobs.push_back(Job{&p, &s});

    std::vector<SurveyRow> rows(jobs.size());
    parallel_for(mode, static_cast<std::int64_t>(jobs.size()), [&](std::int64_t i) {
        const Job& job = jobs[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] = survey_one(*job.poset, *job.sizes, config.enum_cap);
    });
    return rows;
}

}  // namespace posetfr
