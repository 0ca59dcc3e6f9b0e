// Batch front end: parse a JSON instance, run one of the analyses, emit a
// deterministic JSON or CSV report.
//
// Exit codes: 0 all verdicts true; 1 a mathematical verdict is false (the
// counterexample is part of the report) or an internal cross-check tripped;
// 2 usage, validation, or budget error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetfr/assoc_scheme.hpp"
#include "posetfr/enumeration.hpp"
#include "posetfr/instance.hpp"
#include "posetfr/pi_poly.hpp"
#include "posetfr/weight_enum.hpp"

using njson = nlohmann::ordered_json;
using namespace posetfr;

namespace {

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream out(path);
            require(out.good(), Errc::bad_instance, "cannot open output file: " + path);
            out << text;
            if (text.empty() || text.back() != '\n') out << "\n";
        }
    }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

ElementSet parse_set(const Poset& poset, const std::string& text) {
    if (text.empty() || text == "-") return poset.empty_set();
    if (text == "*") return poset.full_set();
    const auto names = split(text, ',');
    return poset.set_of(names);
}

njson set_json(const Poset& poset, const ElementSet& s) {
    njson a = njson::array();
    for (const auto& nm : poset.names_of(s)) a.push_back(nm);
    return a;
}

std::string word_str(const AmbientSpace& space, std::uint64_t idx) {
    const Codeword w = space.word(idx);
    std::string s = "(";
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.digits[i]);
    }
    return s + ")";
}

njson partition_json(const AmbientSpace& space, const Partition& p, bool with_members) {
    njson out;
    out["blocks"] = p.block_count();
    njson sizes = njson::array();
    for (const auto& b : p.blocks) sizes.push_back(b.size());
    out["block_sizes"] = sizes;
    if (with_members) {
        njson blocks = njson::array();
        for (const auto& b : p.blocks) {
            njson members = njson::array();
            for (std::uint32_t x : b) members.push_back(word_str(space, x));
            blocks.push_back(members);
        }
        out["members"] = blocks;
    }
    return out;
}

njson intpoly_json(const IntPoly& f) {
    njson a = njson::array();
    for (const auto& v : f.c) {
        if (v >= std::numeric_limits<std::int64_t>::min() &&
            v <= std::numeric_limits<std::int64_t>::max())
            a.push_back(static_cast<std::int64_t>(v));
        else
            a.push_back(v.str());
    }
    return a;
}

template <class R>
njson ringpoly_json(const R& ring, const RingPoly<R>& f) {
    njson a = njson::array();
    for (const auto& v : f.c) a.push_back(ring.str(v));
    return a;
}

// ---------------------------------------------------------------- inspect

njson witness_json(const AmbientSpace& space, const NonHierarchicalWitness& w) {
    const Poset& poset = space.poset();
    njson j;
    j["B"] = set_json(poset, w.b);
    j["u"] = poset.name(w.u);
    j["v"] = poset.name(w.v);
    j["beta"] = word_str(space, space.index_of(w.beta));
    j["theta"] = word_str(space, space.index_of(w.theta));
    j["weight"] = w.weight;
    j["count_beta"] = w.count_beta;
    j["count_theta"] = w.count_theta;
    return j;
}

int cmd_inspect(const Instance& inst, bool with_witness, const Output& out) {
    const Poset& poset = inst.poset;
    njson j;
    j["n"] = poset.size();
    j["elements"] = poset.names();
    j["poset"] = poset_key(poset);
    if (inst.space.size_known()) j["space_size"] = inst.space.size();
    j["exponent"] = inst.space.exponent();
    j["ideals"] = poset.ideals().size();
    njson levels = njson::array();
    for (int t = 0; t < poset.chain_bound(); ++t) levels.push_back(set_json(poset, poset.level(t)));
    j["levels"] = levels;
    j["hierarchical"] = poset.is_hierarchical();
    const auto eq = poset.hierarchical_equivalents();
    j["hierarchy_criteria"] = njson::array({eq[0], eq[1], eq[2], eq[3], eq[4]});
    const bool agree = eq[0] == eq[1] && eq[1] == eq[2] && eq[2] == eq[3] && eq[3] == eq[4];
    j["criteria_agree"] = agree;
    bool witness_ok = true;
    if (with_witness) {
        const auto w = nonhierarchical_witness(inst.space);
        witness_ok = w.count_beta == 0 && w.count_theta >= 1;
        j["witness"] = witness_json(inst.space, w);
        j["witness_certifies_violation"] = witness_ok;
    }
    out.write(j.dump(2));
    return agree && witness_ok ? 0 : 1;
}

// -------------------------------------------------------------- partitions

int cmd_partitions(const Instance& inst, bool with_scheme, int random_draws, std::uint64_t seed,
                   std::uint64_t cap, const Output& out) {
    const AmbientSpace& space = inst.space;
    const std::uint64_t total = space.checked_size(cap);
    const bool with_members = total <= 256;

    const Partition q = weight_partition(space, cap);
    const Partition lambda = dual_partition(space, q, ExecMode::parallel, cap);
    const Partition lambda_f = lambda_via_f(space, ExecMode::parallel, cap);
    if (lambda != lambda_f) {
        std::cerr << "internal: dual-partition paths disagree (cyclotomic vs polynomial)\n";
        return 1;
    }
    const Partition dual_weights = dual_weight_partition(space, cap);
    const ReflexivityReport refl = is_reflexive(space, q, ExecMode::parallel, cap);

    njson j;
    j["space_size"] = total;
    njson qj = partition_json(space, q, with_members);
    {
        njson weights = njson::array();
        for (const auto& block : q.blocks) weights.push_back(space.pweight(block.front()));
        qj["block_weights"] = weights;
    }
    j["weight_partition"] = qj;
    njson lam = partition_json(space, lambda, with_members);
    lam["paths_identical"] = true;
    j["dual_partition"] = lam;
    // the block polynomial shared by each dual-partition block, low degree first
    njson fpolys = njson::array();
    for (const auto& block : lambda.blocks)
        fpolys.push_back(intpoly_json(f_poly_closed(space, block.front())));
    j["dual_block_polynomials"] = fpolys;
    // Krawtchouk matrix, rows = dual blocks, columns = weight blocks
    {
        njson matrix = njson::array();
        bool integral = true;
        for (std::size_t a = 0; a < lambda.block_count(); ++a) {
            njson row = njson::array();
            for (std::size_t b = 0; b < q.block_count(); ++b) {
                const Cyclotomic k = krawtchouk(space, q, lambda, a, b, true);
                if (k.is_integer())
                    row.push_back(static_cast<std::int64_t>(k.as_integer()));
                else {
                    row.push_back(k.to_string());
                    integral = false;
                }
            }
            matrix.push_back(row);
        }
        j["krawtchouk"] = matrix;
        j["krawtchouk_integral"] = integral;
    }
    j["dual_weight_partition"] = partition_json(space, dual_weights, with_members);
    j["reflexive"] = {{"cardinality", refl.card},
                      {"dual_cardinality", refl.card_dual},
                      {"card_leq_dual", refl.card_leq},
                      {"equal_counts", refl.equal_counts},
                      {"bidual_finer", refl.bidual_finer},
                      {"bidual_equal", refl.bidual_equal},
                      {"criteria_agree", refl.consistent()}};
    j["lambda_finer_than_dual_weights"] = is_finer(lambda, dual_weights);
    j["lambda_equals_dual_weights"] = lambda == dual_weights;

    bool extras_ok = true;
    if (with_scheme) {
        const auto scheme = is_association_scheme(translation_scheme(space, q, total));
        const auto crit = reflexivity_group_criteria(space, q, cap);
        const bool agrees =
            scheme.scheme() == refl.reflexive() && crit.all() == refl.reflexive();
        j["association_scheme"] = {
            {"axioms", njson::array({scheme.axioms[0], scheme.axioms[1], scheme.axioms[2],
                                     scheme.axioms[3], scheme.axioms[4]})},
            {"criteria",
             njson::array({crit.identity_block, crit.inverse_closed, crit.regular_counts})},
            {"agrees_with_reflexive", agrees}};
        extras_ok = extras_ok && agrees;
    }
    if (random_draws > 0) {
        std::mt19937_64 rng(seed);
        njson draws = njson::array();
        for (int t = 0; t < random_draws; ++t) {
            const Partition gamma = random_partition(rng, total);
            const auto r = is_reflexive(space, gamma, ExecMode::parallel, cap);
            draws.push_back({{"blocks", r.card},
                             {"dual_blocks", r.card_dual},
                             {"card_leq_dual", r.card_leq},
                             {"bidual_finer", r.bidual_finer},
                             {"reflexive", r.reflexive()},
                             {"criteria_agree", r.consistent()}});
            extras_ok = extras_ok && r.card_leq && r.bidual_finer && r.consistent();
        }
        j["random_partitions"] = {{"seed", seed}, {"draws", draws}};
    }
    out.write(j.dump(2));
    return refl.consistent() && refl.card_leq && refl.bidual_finer && extras_ok ? 0 : 1;
}

// -------------------------------------------------------------- macwilliams

int cmd_macwilliams(const Instance& inst, const std::string& code_text, bool all_subgroups,
                    std::uint64_t cap, std::uint64_t subgroup_cap, const std::string& format,
                    const Output& out) {
    const AmbientSpace& space = inst.space;
    space.checked_size(cap);
    const Partition q = weight_partition(space, cap);

    std::vector<std::vector<std::uint32_t>> codes;
    if (all_subgroups) {
        codes = space.subgroups(subgroup_cap);
    } else {
        require(!code_text.empty(), Errc::bad_instance,
                "either --code or --all-subgroups is required");
        std::vector<std::uint32_t> gens;
        for (const auto& gen : split(code_text, ';')) {
            Codeword w;
            for (const auto& d : split(gen, ',')) {
                try {
                    w.digits.push_back(static_cast<std::uint32_t>(std::stoul(d)));
                } catch (const std::exception&) {
                    fail(Errc::bad_instance, "bad residue in --code: " + d);
                }
            }
            gens.push_back(static_cast<std::uint32_t>(space.index_of(w)));
        }
        codes.push_back(space.span_of(gens, space.checked_size(cap)));
    }

    std::ostringstream csv;
    njson rows_json = njson::array();
    csv << "code,code_size,block,block_weight,lhs,rhs,holds\n";
    bool all_hold = true;
    const auto wt = space.weight_table(cap);
    for (std::size_t ci = 0; ci < codes.size(); ++ci) {
        const auto report = macwilliams_check(space, q, codes[ci], ExecMode::parallel, cap);
        for (const auto& row : report.rows) {
            const int weight = wt[q.blocks[row.block].front()];
            csv << ci << "," << codes[ci].size() << "," << row.block << "," << weight << ","
                << row.lhs.str() << "," << row.rhs.str() << ","
                << (row.holds ? "true" : "false") << "\n";
            if (format == "json")
                rows_json.push_back({{"code", ci},
                                     {"code_size", codes[ci].size()},
                                     {"block", row.block},
                                     {"block_weight", weight},
                                     {"lhs", row.lhs.str()},
                                     {"rhs", row.rhs.str()},
                                     {"holds", row.holds}});
        }
        all_hold = all_hold && report.verdict;
    }
    if (format == "json")
        out.write(njson{{"rows", rows_json}, {"verdict", all_hold}}.dump(2));
    else
        out.write(csv.str());
    return all_hold ? 0 : 1;
}

// ----------------------------------------------------------------------- pi

struct PiOptions {
    std::string y_text = "*";
    std::string d_text;
    std::string a_text;  // for the containment-order check
    bool check_reduction = false;
    bool check_peel = false;
    bool check_augment = false;
    bool check_ie = false;
    bool check_rie = false;
    bool check_closed = false;
    bool check_order = false;
    bool theta = false;
    bool classify = false;
};

template <class R>
PiParams<R> params_for(const R& ring, const Instance& inst, const std::string& tau_flag,
                       const std::string& eta_flag) {
    auto parse_literal = [&](const std::string& text) -> typename R::Elem {
        if constexpr (std::is_same_v<R, IntRing>) {
            return BigInt(text);
        } else if constexpr (std::is_same_v<R, RationalRing>) {
            return BigRat(text);
        } else if constexpr (std::is_same_v<R, ModRing>) {
            return ring.from_int(std::stol(text));
        } else {
            fail(Errc::bad_instance, "symbolic parameters must be \"generic\"");
        }
    };
    auto from_map = [&](const std::map<std::string, std::string>& m, bool tau_side) {
        std::vector<typename R::Elem> v;
        for (int i = 0; i < inst.poset.size(); ++i) {
            const auto it = m.find(inst.poset.name(i));
            if (it != m.end()) {
                v.push_back(parse_literal(it->second));
            } else {
                const auto h = static_cast<long>(inst.space.coordinate_order(i));
                v.push_back(ring.from_int(tau_side ? h : h - 1));
            }
        }
        return v;
    };
    auto parse_flag = [&](const std::string& flag) {
        std::map<std::string, std::string> m;
        for (const auto& item : split(flag, ',')) {
            const auto eq = item.find('=');
            require(eq != std::string::npos, Errc::bad_instance,
                    "parameter flags use name=value pairs");
            m[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return m;
    };
    auto tau_map = tau_flag.empty() ? inst.tau_literals : parse_flag(tau_flag);
    auto eta_map = eta_flag.empty() ? inst.eta_literals : parse_flag(eta_flag);
    return make_pi_params(ring, from_map(tau_map, true), from_map(eta_map, false));
}

template <class R>
int run_pi(const R& ring, const PiParams<R>& params, const Instance& inst, const PiOptions& opt,
           const Output& out) {
    const Poset& poset = inst.poset;
    const ElementSet y = parse_set(poset, opt.y_text);
    const ElementSet d = parse_set(poset, opt.d_text);
    require(d.subset_of(y), Errc::not_subset, "D must be contained in Y");

    njson j;
    j["Y"] = set_json(poset, y);
    j["D"] = set_json(poset, d);
    const auto direct = pi_direct(poset, ring, params, y, d);
    j["pi"] = ringpoly_json(ring, direct);

    bool all_true = true;
    njson checks;
    auto record = [&](const char* name, bool v) {
        checks[name] = v;
        all_true = all_true && v;
    };
    // identities stated under eta_i = tau_i - 1 get that substitution applied
    auto shift_substituted = [&]() {
        if (params.eta_shift_of_tau) return params;
        checks["eta_substituted_by_tau_minus_one"] = true;
        std::vector<typename R::Elem> eta;
        for (const auto& tv : params.tau) eta.push_back(ring.sub(tv, ring.one()));
        return make_pi_params(ring, params.tau, std::move(eta));
    };

    if (opt.check_reduction) {
        const auto reduced = pi_reduced(poset, ring, params, y, d);
        record("reduction", poly_eq(ring, direct, reduced));
    }
    if (opt.check_peel) {
        bool ok = true;
        for_each_element(poset.maximal(y).bits,
                         [&](int e) { ok = ok && check_peel_identity(poset, ring, params, y, d, e); });
        record("peel", ok);
    }
    if (opt.check_augment) {
        bool ok = true;
        for_each_element(poset.maximal(y).bits & ~d.bits, [&](int e) {
            ok = ok && check_augment_identity(poset, ring, params, y, d, e);
        });
        record("augment", ok);
    }
    if (opt.check_ie) {
        const auto [one, two] = check_inclusion_exclusion(poset, ring, shift_substituted(), y, d);
        record("inclusion_exclusion_1", one);
        record("inclusion_exclusion_2", two);
    }
    if (opt.check_rie)
        record("reduced_inclusion_exclusion",
               check_reduced_inclusion_exclusion(poset, ring, shift_substituted(), y, d));
    if (opt.check_closed) {
        const auto closed = hierarchical_closed_form(poset, ring, params, d);
        record("hierarchical_closed_form",
               poly_eq(ring, closed, pi_direct(poset, ring, params, poset.full_set(), d)));
    }
    if (opt.check_order) {
        if constexpr (R::is_ordered) {
            const ElementSet a = parse_set(poset, opt.a_text);
            record("containment_order", check_strict_order(poset, ring, params, y, a, d));
        } else {
            fail(Errc::precondition, "--check-order needs an ordered ring (int or rational)");
        }
    }
    if (opt.theta) {
        if constexpr (R::is_ordered) {
            const auto th = upset_polynomials(poset, ring, params);
            j["theta_size"] = th.count();
            njson polys = njson::array();
            for (const auto& p : th.distinct) polys.push_back(ringpoly_json(ring, p));
            j["theta"] = polys;
            record("theta_lower_bound", th.count() >= static_cast<std::size_t>(poset.size()) + 1);
        } else {
            fail(Errc::precondition, "--theta needs an ordered ring (int or rational)");
        }
    }
    if (opt.classify) {
        const auto rep = uniformity_classification(poset, ring, params);
        checks["classification"] = {{"hierarchical", rep.hierarchical},
                                    {"size_forces_equal", rep.size_forces_equal},
                                    {"equal_iff_size", rep.equal_iff_size},
                                    {"level_eta_uniform", rep.level_eta_uniform},
                                    {"conditions_agree", rep.conditions_agree()}};
        all_true = all_true && rep.conditions_agree();
    }
    if (!checks.is_null()) j["checks"] = checks;
    out.write(j.dump(2));
    return all_true ? 0 : 1;
}

int cmd_pi(const Instance& inst, const std::string& ring_flag, const std::string& tau_flag,
           const std::string& eta_flag, const PiOptions& opt, const Output& out) {
    RingConfig cfg;
    if (!ring_flag.empty())
        cfg = RingConfig::parse(ring_flag);
    else if (inst.ring)
        cfg = *inst.ring;
    switch (cfg.kind) {
        case RingConfig::Kind::integer: {
            IntRing ring;
            return run_pi(ring, params_for(ring, inst, tau_flag, eta_flag), inst, opt, out);
        }
        case RingConfig::Kind::rational: {
            RationalRing ring;
            return run_pi(ring, params_for(ring, inst, tau_flag, eta_flag), inst, opt, out);
        }
        case RingConfig::Kind::modp: {
            ModRing ring(cfg.modulus);
            return run_pi(ring, params_for(ring, inst, tau_flag, eta_flag), inst, opt, out);
        }
        case RingConfig::Kind::symbolic: {
            const SymbolicRing ring = symbolic_ring_for(inst.poset);
            return run_pi(ring, symbolic_params(ring), inst, opt, out);
        }
    }
    return 2;
}

// -------------------------------------------------------------------- survey

int cmd_survey(int min_n, int max_n, const std::string& sizes_text, std::uint64_t cap,
               const std::string& format, const Output& out) {
    SurveyConfig config;
    config.min_n = min_n > 0 ? min_n : max_n;
    config.max_n = max_n;
    config.enum_cap = cap;
    config.sizes.clear();
    for (const auto& s : split(sizes_text, ',')) {
        try {
            config.sizes.push_back(static_cast<std::uint32_t>(std::stoul(s)));
        } catch (const std::exception&) {
            fail(Errc::bad_instance, "bad size: " + s);
        }
    }
    const auto rows = run_survey(config, ExecMode::parallel);

    std::ostringstream csv;
    njson rows_json = njson::array();
    csv << "poset,sizes,n,space_size,evaluated,hierarchical,level_sizes_uniform,reflexive,"
           "lambda_blocks,theta_size,duality_consistent,theta_consistent\n";
    bool all_consistent = true;
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& r : rows) {
        csv << '"' << r.poset_key << "\"," << '"' << r.sizes_key << "\"," << r.n << ","
            << r.space_size << "," << b(r.evaluated) << "," << b(r.hierarchical) << ","
            << b(r.level_sizes_uniform) << "," << b(r.reflexive) << "," << r.lambda_blocks << ","
            << r.theta_size << "," << (r.evaluated ? b(r.duality_consistent) : "na") << ","
            << (r.evaluated ? b(r.theta_consistent) : "na") << "\n";
        if (format == "json")
            rows_json.push_back({{"poset", r.poset_key},
                                 {"sizes", r.sizes_key},
                                 {"n", r.n},
                                 {"space_size", r.space_size},
                                 {"evaluated", r.evaluated},
                                 {"hierarchical", r.hierarchical},
                                 {"level_sizes_uniform", r.level_sizes_uniform},
                                 {"reflexive", r.reflexive},
                                 {"lambda_blocks", r.lambda_blocks},
                                 {"theta_size", r.theta_size},
                                 {"duality_consistent", r.duality_consistent},
                                 {"theta_consistent", r.theta_consistent}});
        if (r.evaluated && (!r.duality_consistent || !r.theta_consistent)) {
            all_consistent = false;
            njson witness;
            witness["poset"] = r.poset_key;
            witness["sizes"] = r.sizes_key;
            witness["reflexive"] = r.reflexive;
            witness["hierarchical"] = r.hierarchical;
            witness["level_sizes_uniform"] = r.level_sizes_uniform;
            witness["lambda_blocks"] = r.lambda_blocks;
            witness["theta_size"] = r.theta_size;
            std::cerr << "counterexample: " << witness.dump() << "\n";
        }
    }
    if (format == "json")
        out.write(rows_json.dump(2));
    else
        out.write(csv.str());
    return all_consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset-weight partitions, Fourier duals, and their verification sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string instance_path, out_path, format;
    std::string ring_flag, tau_flag, eta_flag;
    std::uint64_t cap_enum = AmbientSpace::kDefaultEnumCap;
    std::uint64_t cap_subgroups = AmbientSpace::kDefaultSubgroupCap;
    std::uint64_t seed = 0;
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--format", format, "json|csv (commands have a natural default)");
    app.add_option("--cap-enum", cap_enum, "refuse to enumerate spaces larger than this");
    app.add_option("--cap-subgroups", cap_subgroups, "cap for subgroup enumeration");
    app.add_option("--seed", seed, "seed for randomized sweeps (recorded in reports)");

    auto* inspect = app.add_subcommand("inspect", "poset-level report for one instance");
    bool with_witness = false;
    inspect->add_option("--instance", instance_path, "instance file")->required();
    inspect->add_flag("--witness", with_witness,
                      "attach the convolution-count certificate (non-hierarchical, h_i >= 2)");

    auto* partitions =
        app.add_subcommand("partitions", "weight partition, dual partition (two paths), duals");
    bool with_scheme = false;
    int random_draws = 0;
    partitions->add_option("--instance", instance_path, "instance file")->required();
    partitions->add_flag("--scheme", with_scheme,
                         "also run the association-scheme axioms and group criteria");
    partitions->add_option("--random-draws", random_draws,
                           "check the duality triple on this many seeded random partitions");

    auto* macwilliams = app.add_subcommand("macwilliams", "two-sided MacWilliams identity table");
    std::string code_text;
    bool all_subgroups = false;
    macwilliams->add_option("--instance", instance_path, "instance file")->required();
    macwilliams->add_option("--code", code_text,
                            "generators as residue tuples, e.g. \"0,1;1,0\"");
    macwilliams->add_flag("--all-subgroups", all_subgroups, "run every subgroup");

    auto* pi = app.add_subcommand("pi", "ring-generalized ideal-sum polynomials and identities");
    PiOptions popt;
    pi->add_option("--instance", instance_path, "instance file")->required();
    pi->add_option("--ring", ring_flag, "int|rational|modp:<p>|symbolic");
    pi->add_option("--tau", tau_flag, "per-element values, e.g. a=2,b=3");
    pi->add_option("--eta", eta_flag, "per-element values");
    pi->add_option("--Y", popt.y_text, "carrier subset (names, default all)");
    pi->add_option("--D", popt.d_text, "distinguished subset (default empty)");
    pi->add_option("--A", popt.a_text, "smaller up-set for --check-order");
    pi->add_flag("--check-reduction", popt.check_reduction, "carrier reduction identity");
    pi->add_flag("--check-peel", popt.check_peel, "maximal-element difference identity");
    pi->add_flag("--check-augment", popt.check_augment, "up-set augmentation identity");
    pi->add_flag("--check-ie", popt.check_ie, "inclusion-exclusion identities (eta = tau - 1)");
    pi->add_flag("--check-rie", popt.check_rie,
                 "reduced inclusion-exclusion identity (eta = tau - 1)");
    pi->add_flag("--check-closed", popt.check_closed, "hierarchical closed form");
    pi->add_flag("--check-order", popt.check_order, "strict containment order (needs --A)");
    pi->add_flag("--theta", popt.theta, "distinct up-set polynomials and their count");
    pi->add_flag("--classify", popt.classify, "three-way uniformity classification");

    auto* survey = app.add_subcommand("survey", "sweep labeled posets x size assignments");
    int max_n = 3, min_n = 0;
    std::string sizes_text = "2";
    survey->add_option("--max-n", max_n, "poset size (rows cover exactly this n by default)");
    survey->add_option("--min-n", min_n, "extend the sweep down to this n");
    survey->add_option("--sizes", sizes_text, "comma-separated coordinate orders, default 2");

    try {
        app.parse(argc, argv);
        require(format.empty() || format == "json" || format == "csv", Errc::bad_instance,
                "--format must be json or csv");
        require(format != "csv" || *macwilliams || *survey, Errc::bad_instance,
                "csv output is only available for macwilliams and survey");
        const Output out{out_path};
        if (*inspect) return cmd_inspect(load_instance_file(instance_path), with_witness, out);
        if (*partitions)
            return cmd_partitions(load_instance_file(instance_path), with_scheme, random_draws,
                                  seed, cap_enum, out);
        if (*macwilliams)
            return cmd_macwilliams(load_instance_file(instance_path), code_text, all_subgroups,
                                   cap_enum, cap_subgroups, format, out);
        if (*pi)
            return cmd_pi(load_instance_file(instance_path), ring_flag, tau_flag, eta_flag, popt,
                          out);
        if (*survey) return cmd_survey(min_n, max_n, sizes_text, cap_enum, format, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
