// Times the serial reference implementations against the OpenMP kernels on a
// few mid-sized instances: dual-partition signatures, the association-scheme
// axiom sweep, and a survey pool. Outputs are compared before timings are
// reported, so a disagreement shows up here as well as in the tests.

#include <chrono>
#include <cstdio>

#include "posetfr/assoc_scheme.hpp"
#include "posetfr/enumeration.hpp"
#include "posetfr/parallel.hpp"

using namespace posetfr;

namespace {

template <class Fn>
double ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s %10.1f ms %10.1f ms %6.2fx  %s\n", name, serial, parallel,
                serial / parallel, agree ? "outputs agree" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", worker_count());
    std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "openmp", "speedup");

    {
        // 9-element fence-like poset over Z2^9: 512 words, 512 characters.
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> rels;
        for (int i = 0; i < 9; ++i) names.push_back(std::string(1, char('a' + i)));
        for (int i = 0; i + 1 < 9; i += 2) {
            rels.emplace_back(names[size_t(i)], names[size_t(i + 1)]);
            if (i + 2 < 9) rels.emplace_back(names[size_t(i + 2)], names[size_t(i + 1)]);
        }
        const AmbientSpace space = cyclic_space(Poset(names, rels),
                                                std::vector<std::uint32_t>(9, 2));
        const Partition q = weight_partition(space);
        Partition ds, dp;
        const double t_serial = ms([&] { ds = dual_partition(space, q, ExecMode::serial); });
        const double t_par = ms([&] { dp = dual_partition(space, q, ExecMode::parallel); });
        report("dual_partition |H|=512", t_serial, t_par, ds == dp);

        const RelationPartition theta = translation_scheme(space, q);
        SchemeReport rs, rp;
        const double a_serial = ms([&] { rs = is_association_scheme(theta, 512, ExecMode::serial); });
        const double a_par = ms([&] { rp = is_association_scheme(theta, 512, ExecMode::parallel); });
        report("scheme_axioms |H|=512", a_serial, a_par, rs.axioms == rp.axioms);
    }

    {
        SurveyConfig config;
        config.min_n = 1;
        config.max_n = 4;
        config.sizes = {2};
        std::vector<SurveyRow> rs, rp;
        const double t_serial = ms([&] { rs = run_survey(config, ExecMode::serial); });
        const double t_par = ms([&] { rp = run_survey(config, ExecMode::parallel); });
        bool agree = rs.size() == rp.size();
        for (std::size_t i = 0; agree && i < rs.size(); ++i)
            agree = rs[i].poset_key == rp[i].poset_key && rs[i].reflexive == rp[i].reflexive &&
                    rs[i].theta_size == rp[i].theta_size;
        report("survey n<=4 sizes={2}", t_serial, t_par, agree);
    }
    return 0;
}
