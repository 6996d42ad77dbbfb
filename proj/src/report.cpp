#include "latsieve/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace latsieve {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json search_result_json(const SearchResult& r, bool stable) {
    Json j;
    switch (r.outcome) {
        case SearchOutcome::Witness: j["status"] = "witness"; break;
        case SearchOutcome::Absent: j["status"] = "free"; break;
        case SearchOutcome::Timeout: j["status"] = "timeout"; break;
    }
    if (r.witness) {
        Json elems = Json::array();
        Json orders = Json::array();
        for (std::size_t i = 0; i < r.witness->element_names.size(); ++i) {
            Json e;
            e["element"] = r.witness->element_names[i];
            e["node"] = r.witness->node_of[i];
            e["order"] = r.witness->node_order[i];
            elems.push_back(e);
            orders.push_back(r.witness->node_order[i]);
        }
        j["witness"] = elems;
        j["orders"] = orders;
    }
    j["seconds"] = stable ? 0.0 : r.seconds;
    return j;
}

Json profile_json(const FreenessProfile& prof, const std::vector<std::string>& filter,
                  bool stable) {
    Json j;
    j["group"] = prof.group_name;
    j["order"] = prof.group_order;
    j["subgroups"] = prof.subgroup_count;
    j["modular"] = prof.modular;
    Json pats;
    for (const auto& [name, r] : prof.per_pattern) {
        if (!filter.empty() && std::find(filter.begin(), filter.end(), name) == filter.end())
            continue;
        pats[name] = search_result_json(r, stable);
    }
    j["patterns"] = pats;
    if (filter.empty() || std::find(filter.begin(), filter.end(), "L9") != filter.end()) {
        j["l9_direct"] = search_result_json(prof.l9_direct, stable);
        j["l9_free"] = prof.l9_free();
    }
    return j;
}

Json witness_json(const InClassWitness& w) {
    Json j;
    j["n_order"] = w.n.order();
    j["k_order"] = w.k.order();
    Json battens = Json::array();
    for (const auto& b : w.battens) {
        Json bj;
        bj["kind"] = b.kind_name();
        bj["order"] = b.subgroup.order();
        if (b.kind == BattenInfo::Kind::NonNilpotent) {
            bj["heart_prime"] = b.heart_prime;
            bj["top_prime"] = b.top_prime;
        }
        battens.push_back(bj);
    }
    j["battens"] = battens;
    Json certs = Json::array();
    for (const auto& c : w.certificates) {
        Json cj;
        cj["batten_order"] = c.batten.subgroup.order();
        cj["prime"] = c.target_prime;
        cj["type"] = avoid_type_name(c.type);
        certs.push_back(cj);
    }
    j["certificates"] = certs;
    j["surplus_triples"] = w.surplus_triples;
    return j;
}

Json class_json(const ClassLWitness& w) {
    Json j;
    j["in_class"] = w.in_class;
    j["inconclusive"] = w.inconclusive;
    if (w.witness) j["type"] = witness_json(*w.witness);
    Json cands = Json::array();
    for (const auto& c : w.candidates) {
        Json cj;
        cj["n_order"] = c.n_order;
        cj["k_order"] = c.k_order;
        if (c.passed) {
            cj["result"] = "passed";
        } else {
            cj["result"] = "failed";
            cj["stage"] = c.failed_stage;
            cj["detail"] = c.detail;
        }
        cands.push_back(cj);
    }
    j["candidates"] = cands;
    return j;
}

}  // namespace

ReportOptions options_from_json(const std::string& options_json) {
    ReportOptions opt;
    if (options_json.empty()) return opt;
    Json j = Json::parse(options_json, nullptr, true, true);
    if (j.contains("stable")) opt.stable = j["stable"].get<bool>();
    if (j.contains("jobs")) opt.jobs = j["jobs"].get<int>();
    if (j.contains("cache_dir")) {
        opt.cache_dir = j["cache_dir"].get<std::string>();
        opt.use_cache = true;
    }
    if (j.contains("use_cache")) opt.use_cache = j["use_cache"].get<bool>();
    if (j.contains("max_order")) opt.group_caps.max_order = j["max_order"].get<int>();
    if (j.contains("max_subgroups")) opt.lattice_caps.max_nodes = j["max_subgroups"].get<int>();
    if (j.contains("budget_secs")) opt.budget.seconds = j["budget_secs"].get<double>();
    if (j.contains("surplus_cap")) opt.classify_caps.surplus_triple_cap = j["surplus_cap"].get<long long>();
    if (j.contains("patterns")) {
        std::string csv = j["patterns"].get<std::string>();
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) opt.patterns.push_back(item);
    }
    return opt;
}

GroupTable load_group_input(const std::string& input, const ReportOptions& opt) {
    if (input.rfind("builtin:", 0) == 0) return build_builtin(input.substr(8), opt.group_caps);
    if (input.rfind("text:", 0) == 0) {
        GroupFile f = parse_group_file(input.substr(5));
        return realize_group(f, opt.group_caps);
    }
    throw Error(ErrorCode::ParseError, "input must be 'builtin:<id>' or 'text:<file text>'");
}

Json analyze_report(const GroupTable& g, const ReportOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    std::shared_ptr<const SubgroupLattice> lat =
        opt.use_cache ? lattice_cache(resolve_cache_dir(opt.cache_dir), g, opt.lattice_caps)
                      : lattice_for(g, opt.lattice_caps);
    FreenessProfile prof = freeness_profile(*lat, opt.budget);
    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "analyze";
    j.update(profile_json(prof, opt.patterns, opt.stable));
    j["elapsed_ms"] = opt.stable ? 0.0 : ms_since(t0);
    return j;
}

Json classify_report(const GroupTable& g, const ReportOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    std::shared_ptr<const SubgroupLattice> lat =
        opt.use_cache ? lattice_cache(resolve_cache_dir(opt.cache_dir), g, opt.lattice_caps)
                      : lattice_for(g, opt.lattice_caps);
    ClassLWitness w = class_l_membership(*lat, opt.classify_caps);
    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "classify";
    j["group"] = g.name;
    j["order"] = g.order;
    j.update(class_json(w));
    if (w.in_class) {
        std::string recheck = recheck_witness(*lat, *w.witness);
        j["recheck"] = recheck.empty() ? "ok" : recheck;
    }
    j["elapsed_ms"] = opt.stable ? 0.0 : ms_since(t0);
    return j;
}

Json congruences_report(const std::string& pattern) {
    AbstractLattice pat = named_pattern(pattern);
    auto congruences = enumerate_congruences(pat);
    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "congruences";
    j["pattern"] = pattern;
    j["count"] = congruences.size();
    Json list = Json::array();
    for (const auto& c : congruences) {
        std::vector<std::vector<std::string>> classes(static_cast<std::size_t>(c.class_count));
        for (int e = 0; e < pat.size; ++e)
            classes[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(e)])].push_back(
                pat.element_names[static_cast<std::size_t>(e)]);
        list.push_back(classes);
    }
    j["congruences"] = list;
    if (pattern == "L9") {
        int e = pat.element_index("E");
        int d = pat.element_index("D");
        bool all_identify = true;
        for (const auto& c : congruences)
            if (!c.is_equality() && !c.same(e, d)) all_identify = false;
        j["nontrivial_all_identify_E_D"] = all_identify;
    }
    return j;
}

Json model_report(const std::string& file_text) {
    GroupFile f = parse_group_file(file_text);
    if (!f.model) throw Error(ErrorCode::ParseError, "file has no model block");
    ModelOutcome out = surplus_model(*f.model);
    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "model";
    j["name"] = f.name;
    switch (out.kind) {
        case ModelOutcome::Kind::Holds: j["outcome"] = "holds"; break;
        case ModelOutcome::Kind::Violation: j["outcome"] = "violation"; break;
        case ModelOutcome::Kind::HypothesisUnmet: j["outcome"] = "hypothesis_unmet"; break;
    }
    if (!out.detail.empty()) j["detail"] = out.detail;
    if (out.violation) {
        Json v;
        v["pi"] = out.violation->pi;
        v["l_order"] = out.violation->l_order;
        v["c_l_j_order"] = out.violation->c_l_j_order;
        v["c_l_j_fixed_point_free_on_h"] = out.violation->c_l_j_fixed_point_free;
        v["fixed_dim_o_pi"] = out.violation->fixed_dim_o_pi;
        v["fixed_dim_o_pi_prime"] = out.violation->fixed_dim_o_pi_prime;
        j["violation"] = v;
    }
    return j;
}

Json corpus_report() {
    const auto& m = builtin_corpus();
    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "corpus";
    j["version"] = m.version;
    Json list = Json::array();
    for (const auto& e : m.entries) {
        Json ej;
        ej["id"] = e.id;
        ej["recipe"] = e.recipe;
        ej["order"] = e.expected_order;
        ej["tags"] = e.tags;
        if (!e.factor_a.empty()) {
            ej["factor_a"] = e.factor_a;
            ej["factor_b"] = e.factor_b;
        }
        list.push_back(ej);
    }
    j["groups"] = list;
    return j;
}

// --- validation harness ----------------------------------------------------

namespace {

struct GroupRun {
    Json row;
    std::vector<std::string> failures;
    bool l9_free = false;
    bool in_class = false;
    bool timeout = false;
    bool inconclusive = false;
};

void check(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

// Lagrange, identity laws, associativity spot checks.
void invariant_table(const GroupTable& g, std::vector<std::string>& failures) {
    try {
        validate_group_table(g);
    } catch (const Error& e) {
        failures.push_back(std::string("table invariants: ") + e.what());
    }
}

// P = [P,K] C_P(K) for normal Sylow subgroups P and coprime subgroups K.
void invariant_coprime_identity(const SubgroupLattice& lat, std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;
    for (int p : prime_set(g)) {
        auto syl = sylow_subgroups(lat, p);
        const SubgroupSet* normal_sylow = nullptr;
        for (const auto& s : syl)
            if (is_normal(g, s)) {
                normal_sylow = &s;
                break;
            }
        if (!normal_sylow) continue;
        int checked = 0;
        for (int i = 0; i < lat.size() && checked < 8; ++i) {
            const SubgroupSet& k = lat.nodes[static_cast<std::size_t>(i)];
            if (k.is_trivial() || k.order() % p == 0) continue;
            ++checked;
            auto comm = commutator_subgroup(g, *normal_sylow, k);
            auto cent = centralizer_in(g, *normal_sylow, k);
            auto prod = join_subgroups(g, comm, cent);
            check(failures, prod.members == normal_sylow->members,
                  "coprime identity fails for p=" + std::to_string(p));
        }
    }
}

// XY ∩ Z = X(Y ∩ Z) as element sets, for X <= Z.
void invariant_dedekind(const SubgroupLattice& lat, std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;
    std::mt19937 rng(0xDEDEu);
    std::uniform_int_distribution<int> d(0, lat.size() - 1);
    auto product_set = [&](const SubgroupSet& a, const SubgroupSet& b) {
        std::vector<char> in(static_cast<std::size_t>(g.order), 0);
        for (Elt x : a.members)
            for (Elt y : b.members) in[static_cast<std::size_t>(g.mul(x, y))] = 1;
        std::vector<Elt> out;
        for (int i = 0; i < g.order; ++i)
            if (in[static_cast<std::size_t>(i)]) out.push_back(static_cast<Elt>(i));
        return out;
    };
    int trials = std::min(100, lat.size() * lat.size());
    for (int t = 0; t < trials; ++t) {
        int zi = d(rng);
        int xi = lat.meet(d(rng), zi);  // some X <= Z
        int yi = d(rng);
        const SubgroupSet& x = lat.nodes[static_cast<std::size_t>(xi)];
        const SubgroupSet& y = lat.nodes[static_cast<std::size_t>(yi)];
        const SubgroupSet& z = lat.nodes[static_cast<std::size_t>(zi)];
        auto xy = product_set(x, y);
        std::vector<Elt> lhs;
        std::set_intersection(xy.begin(), xy.end(), z.members.begin(), z.members.end(),
                              std::back_inserter(lhs));
        auto rhs = product_set(x, intersect_subgroups(y, z));
        if (lhs != rhs) {
            failures.push_back("intersection law fails");
            return;
        }
    }
}

void invariant_normal_sylow(const SubgroupLattice& lat, std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;
    if (g.order == 1) return;
    for (int p : prime_set(g))
        for (const auto& s : sylow_subgroups(lat, p))
            if (is_normal(g, s)) return;
    failures.push_back("no normal Sylow subgroup despite being nine-pattern free");
}

void invariant_rank1(const SubgroupLattice& lat, std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;
    auto primes = prime_set(g);
    if (primes.size() != 2 || is_nilpotent(lat)) return;
    for (int p : primes) {
        bool p_normal = false;
        for (const auto& s : sylow_subgroups(lat, p))
            if (is_normal(g, s)) p_normal = true;
        if (!p_normal) continue;
        int q = (p == primes[0]) ? primes[1] : primes[0];
        for (const auto& qs : sylow_subgroups(lat, q)) {
            if (!is_cyclic_subgroup(g, qs) && !is_quaternion8(g, qs)) {
                failures.push_back("non-nilpotent two-prime group with normal Sylow has a Sylow "
                                   "complement that is neither cyclic nor quaternion");
                return;
            }
        }
    }
}

// Subgroups of battens are cyclic batten groups; the center/Frattini/core
// coincidences of non-nilpotent battens.
void invariant_batten_shape(const SubgroupLattice& lat, const SubgroupSet& batten_set,
                            const BattenInfo& info, std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;
    for (int i : lat.nodes_within(batten_set)) {
        const SubgroupSet& u = lat.nodes[static_cast<std::size_t>(i)];
        if (u.order() == batten_set.order()) continue;
        auto fact = batten_factorization(lat, u);
        if (auto* bad = std::get_if<NotABattenGroup>(&fact)) {
            failures.push_back("a proper subgroup of a batten is not a batten group: " +
                               bad->reason);
            return;
        }
        for (const auto& f : std::get<std::vector<BattenInfo>>(fact))
            if (f.kind != BattenInfo::Kind::CyclicP) {
                failures.push_back("a proper subgroup of a batten has a non-cyclic factor");
                return;
            }
    }
    if (info.kind == BattenInfo::Kind::NonNilpotent && info.top &&
        info.top->order() >= info.top_prime * info.top_prime &&
        batten_set.order() == g.order) {
        SubgroupSet z = center(g);
        SubgroupSet cr = centralizer_in(g, *info.top, *info.heart);
        std::vector<int> phi_seed;
        for (Elt x : info.top->members) phi_seed.push_back(g.pow(x, info.top_prime));
        SubgroupSet phi = generated_subgroup(g, std::span<const int>(phi_seed));
        SubgroupSet core = core_p(lat, info.top_prime);
        check(failures, z.members == cr.members && cr.members == phi.members &&
                            phi.members == core.members,
              "center, heart-centralizer, Frattini part and core of a non-nilpotent batten differ");
    }
}

// Commutator shape and normal-subgroup commutator collapse for the witness
// decomposition, plus the fixed-point corollary and the structural facts
// every accepted decomposition must satisfy.
void invariant_witness_actions(const SubgroupLattice& lat, const InClassWitness& w,
                               std::vector<std::string>& failures) {
    const GroupTable& g = lat.group;

    // accepted groups are soluble: the derived series terminates
    {
        SubgroupSet d = whole_group(g);
        for (int step = 0; step < 32 && !d.is_trivial(); ++step) {
            SubgroupSet next = commutator_subgroup(g, d, d);
            if (next.order() == d.order()) break;
            d = next;
        }
        check(failures, d.is_trivial(), "derived series does not reach the identity");
    }

    // the decision returns the largest normal part, so no Sylow subgroup of
    // the complement centralizes all of it
    {
        SubgroupSet ck = centralizer_in(g, w.k, w.n);
        check(failures,
              prime_set(w.k.order()) == prime_set(w.k.order() / ck.order()),
              "complement has a prime living entirely in the centralizer of N");
    }

    // every subgroup of the commutator-touched part of N is normal in N
    {
        SubgroupSet comm_nk = commutator_subgroup(g, w.n, w.k);
        std::vector<int> pi = prime_set(comm_nk.order());
        if (!pi.empty()) {
            SubgroupSet opi = trivial_subgroup(g);
            for (int p : pi)
                opi = join_subgroups(g, opi, sylow_of_nilpotent(lat, w.n, p));
            for (int i : lat.nodes_within(opi))
                if (!is_normal_in(g, w.n, lat.nodes[static_cast<std::size_t>(i)])) {
                    failures.push_back("a subgroup of the moved part of N is not normal in N");
                    break;
                }
        }
    }

    for (int p : prime_set(w.n.order())) {
        SubgroupSet op = sylow_of_nilpotent(lat, w.n, p);
        SubgroupSet comm = commutator_subgroup(g, op, w.k);
        if (comm.is_trivial()) continue;
        bool shape_ok = is_elementary_abelian(g, comm) || is_quaternion8(g, comm);
        check(failures, shape_ok,
              "commutator with the complement is neither elementary abelian nor quaternion");
        for (int i : lat.nodes_within(w.k)) {
            const SubgroupSet& l0 = lat.nodes[static_cast<std::size_t>(i)];
            if (!is_normal_in(g, w.k, l0)) continue;
            SubgroupSet cl = commutator_subgroup(g, op, l0);
            check(failures, cl.is_trivial() || cl.members == comm.members,
                  "a normal subgroup of the complement has a proper intermediate commutator");
        }
        SubgroupSet fixed = centralizer_in(g, op, w.k);
        if (!fixed.is_trivial())
            check(failures, p == 2, "non-trivial fixed points for odd p under an avoiding action");
        else
            check(failures, comm.members == op.members && is_elementary_abelian(g, op),
                  "fixed-point-free avoiding action on a non-elementary-abelian Sylow subgroup");
    }
}

struct HeredityStats {
    int subgroups_checked = 0;
    int quotients_checked = 0;
};

// Every subgroup and every quotient of a nine-pattern-free group in the
// class stays free and in the class.
HeredityStats invariant_heredity(const SubgroupLattice& lat, const ReportOptions& opt,
                                 std::vector<std::string>& failures) {
    HeredityStats stats;
    const GroupTable& g = lat.group;
    for (int i = 0; i < lat.size(); ++i) {
        const SubgroupSet& h = lat.nodes[static_cast<std::size_t>(i)];
        if (h.order() == g.order) continue;
        GroupTable sub = subgroup_table(g, h);
        FreenessProfile p = freeness_profile(sub, opt.lattice_caps, opt.budget);
        ClassLWitness c = class_l_membership(sub, opt.classify_caps, opt.lattice_caps);
        ++stats.subgroups_checked;
        if (!p.l9_free() || !c.in_class) {
            failures.push_back("subgroup of order " + std::to_string(h.order()) +
                               " breaks heredity");
            return stats;
        }
    }
    for (int i = 0; i < lat.size(); ++i) {
        const SubgroupSet& m = lat.nodes[static_cast<std::size_t>(i)];
        if (m.is_trivial() || !is_normal(g, m)) continue;
        GroupTable quo = quotient_table(g, m);
        FreenessProfile p = freeness_profile(quo, opt.lattice_caps, opt.budget);
        ClassLWitness c = class_l_membership(quo, opt.classify_caps, opt.lattice_caps);
        ++stats.quotients_checked;
        if (!p.l9_free() || !c.in_class) {
            failures.push_back("quotient by a normal subgroup of order " +
                               std::to_string(m.order()) + " breaks heredity");
            return stats;
        }
    }
    return stats;
}

GroupRun run_group(const CorpusEntry& e, const ReportOptions& opt) {
    GroupRun run;
    GroupTable g = build_builtin(e.id, opt.group_caps);
    run.row["id"] = e.id;
    run.row["order"] = g.order;
    check(run.failures, g.order == e.expected_order, "order differs from the manifest");

    invariant_table(g, run.failures);

    auto t0 = std::chrono::steady_clock::now();
    std::shared_ptr<const SubgroupLattice> lat =
        opt.use_cache ? lattice_cache(resolve_cache_dir(opt.cache_dir), g, opt.lattice_caps)
                      : lattice_for(g, opt.lattice_caps);
    double lattice_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    FreenessProfile prof = freeness_profile(*lat, opt.budget);
    double profile_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    ClassLWitness cls = class_l_membership(*lat, opt.classify_caps);
    double classify_ms = ms_since(t0);

    run.l9_free = prof.l9_free();
    run.in_class = cls.in_class;
    run.timeout = prof.any_timeout();
    run.inconclusive = cls.inconclusive && !cls.in_class;

    check(run.failures, !run.timeout, "pattern search timed out");
    check(run.failures, !run.inconclusive, "class decision inconclusive");
    bool agree = run.l9_free == run.in_class;
    check(run.failures, agree, "deciders disagree");

    if (cls.in_class) {
        std::string r = recheck_witness(*lat, *cls.witness);
        check(run.failures, r.empty(), "witness re-check: " + r);
    }

    // lemma-derived invariants
    check(run.failures, prof.modular == !prof.result_for("L5").found(),
          "modularity differs from pentagon-freeness");
    bool is_p2 = std::find(e.tags.begin(), e.tags.end(), "p2") != e.tags.end();
    bool is_p3 = std::find(e.tags.begin(), e.tags.end(), "p3") != e.tags.end();
    if (is_p2 || is_p3) {
        bool l5 = !prof.result_for("L5").found();
        bool l9 = !prof.result_for("L9").found();
        bool l10 = !prof.result_for("L10").found();
        check(run.failures, prof.modular == l5 && l5 == l9 && l9 == l10,
              "prime-power group fails the modularity equivalences");
    }
    invariant_coprime_identity(*lat, run.failures);
    invariant_dedekind(*lat, run.failures);
    if (run.l9_free) {
        invariant_normal_sylow(*lat, run.failures);
        invariant_rank1(*lat, run.failures);
    }
    if (std::find(e.tags.begin(), e.tags.end(), "batten") != e.tags.end()) {
        // whole-group battens checked here; battens sitting inside a product
        // are reached through the witness below
        auto verdict = batten_kind(*lat, whole_group(g));
        if (auto* b = std::get_if<BattenInfo>(&verdict))
            invariant_batten_shape(*lat, whole_group(g), *b, run.failures);
    }
    if (cls.in_class) {
        invariant_witness_actions(*lat, *cls.witness, run.failures);
        for (const auto& b : cls.witness->battens)
            invariant_batten_shape(*lat, b.subgroup, b, run.failures);
    }

    double heredity_ms = 0.0;
    Json heredity;
    if (run.l9_free && cls.in_class) {
        t0 = std::chrono::steady_clock::now();
        HeredityStats stats = invariant_heredity(*lat, opt, run.failures);
        heredity_ms = ms_since(t0);
        heredity["subgroups_checked"] = stats.subgroups_checked;
        heredity["quotients_checked"] = stats.quotients_checked;
    }

    run.row["subgroups"] = lat->size();
    run.row["modular"] = prof.modular;
    run.row["l9_free"] = run.l9_free;
    run.row["in_class"] = cls.in_class;
    run.row["agree"] = agree;
    Json pats;
    for (const auto& [name, r] : prof.per_pattern)
        pats[name] = r.found() ? "witness" : (r.outcome == SearchOutcome::Timeout ? "timeout" : "free");
    run.row["patterns"] = pats;
    if (cls.in_class) {
        run.row["type"] = witness_json(*cls.witness);
    } else {
        Json reasons = Json::array();
        for (const auto& c : cls.candidates) {
            Json cj;
            cj["n_order"] = c.n_order;
            cj["k_order"] = c.k_order;
            cj["stage"] = c.failed_stage;
            cj["detail"] = c.detail;
            reasons.push_back(cj);
        }
        run.row["reasons"] = reasons;
    }
    if (!heredity.is_null()) run.row["heredity"] = heredity;
    run.row["invariants"] = run.failures.empty() ? Json("ok") : Json(run.failures);
    Json timing;
    timing["lattice_ms"] = opt.stable ? 0.0 : lattice_ms;
    timing["profile_ms"] = opt.stable ? 0.0 : profile_ms;
    timing["classify_ms"] = opt.stable ? 0.0 : classify_ms;
    timing["heredity_ms"] = opt.stable ? 0.0 : heredity_ms;
    run.row["timing"] = timing;
    return run;
}

std::vector<CorpusEntry> select_entries(const std::string& selector) {
    const auto& m = builtin_corpus();
    std::vector<CorpusEntry> out;
    if (selector.empty() || selector == "all") return m.entries;
    if (selector == "p2" || selector == "p3") {
        for (const auto& e : m.entries)
            if (std::find(e.tags.begin(), e.tags.end(), selector) != e.tags.end())
                out.push_back(e);
        return out;
    }
    if (selector.rfind("order<=", 0) == 0) {
        long long cap = std::stoll(selector.substr(7));
        for (const auto& e : m.entries)
            if (e.expected_order <= cap) out.push_back(e);
        return out;
    }
    std::stringstream ss(selector);
    std::string id;
    while (std::getline(ss, id, ',')) {
        bool found = false;
        for (const auto& e : m.entries)
            if (e.id == id) {
                out.push_back(e);
                found = true;
            }
        if (!found) throw Error(ErrorCode::UnknownId, "unknown corpus id '" + id + "'");
    }
    return out;
}

}  // namespace

ValidateResult validate_corpus(const std::string& selector, const ReportOptions& opt) {
    ValidateResult result;
    auto entries = select_entries(selector);

    std::vector<GroupRun> runs(entries.size());
    int jobs = opt.jobs > 0 ? opt.jobs
                            : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, static_cast<int>(entries.size()) == 0 ? 1 : static_cast<int>(entries.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            try {
                runs[i] = run_group(entries[i], opt);
            } catch (const std::exception& ex) {
                runs[i].row["id"] = entries[i].id;
                runs[i].failures.push_back(std::string("exception: ") + ex.what());
                runs[i].row["invariants"] = Json(runs[i].failures);
            }
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        for (int t = 0; t < jobs; ++t) workers.emplace_back(work);
        for (auto& w : workers) w.join();
    }

    Json rows = Json::array();
    int agree_count = 0, timeout_count = 0, inconclusive_count = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        rows.push_back(runs[i].row);
        if (runs[i].timeout) ++timeout_count;
        if (runs[i].inconclusive) ++inconclusive_count;
        if (runs[i].failures.empty())
            ++agree_count;
        else if (first_failure.empty())
            first_failure = entries[i].id + ": " + runs[i].failures.front();
    }

    // corpus-level checks
    Json checks;
    {
        // coprime direct products
        int pairs = 0;
        bool pair_ok = true;
        std::string pair_detail;
        auto free_of = [&](const std::string& id) -> const GroupRun* {
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].id == id) return &runs[i];
            return nullptr;
        };
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            if (e.factor_a.empty()) continue;
            const GroupRun* a = free_of(e.factor_a);
            const GroupRun* b = free_of(e.factor_b);
            if (!a || !b) continue;
            ++pairs;
            if (runs[i].l9_free != (a->l9_free && b->l9_free)) {
                pair_ok = false;
                pair_detail = e.id;
            }
        }
        checks["coprime_pairs_checked"] = pairs;
        checks["coprime_pairs"] = pair_ok ? "ok" : ("fail: " + pair_detail);
        if (!pair_ok && first_failure.empty()) first_failure = "coprime pair " + pair_detail;
    }
    {
        Json mj = model_report(builtin_model_text());
        bool ok = mj["outcome"] == "violation" && mj["violation"]["pi"] == Json::array({3}) &&
                  mj["violation"]["c_l_j_order"] == 3 &&
                  mj["violation"]["c_l_j_fixed_point_free_on_h"] == true &&
                  mj["violation"]["fixed_dim_o_pi"] == 0 &&
                  mj["violation"]["fixed_dim_o_pi_prime"] == 0;
        checks["model_example"] = ok ? "ok" : "fail";
        if (!ok && first_failure.empty()) first_failure = "coprime action model example";
    }
    {
        Json cj = congruences_report("L9");
        bool ok = cj["count"] == 2 && cj["nontrivial_all_identify_E_D"] == true;
        checks["congruence_property"] = ok ? "ok" : "fail";
        if (!ok && first_failure.empty()) first_failure = "congruence property";
    }

    Json j;
    j["schema"] = kReportSchema;
    j["kind"] = "validate";
    j["corpus_version"] = builtin_corpus().version;
    j["selector"] = selector.empty() ? "all" : selector;
    Json totals;
    totals["groups"] = entries.size();
    totals["clean"] = agree_count;
    totals["timeouts"] = timeout_count;
    totals["inconclusive"] = inconclusive_count;
    j["totals"] = totals;
    j["checks"] = checks;
    j["groups"] = rows;
    result.ok = first_failure.empty() && timeout_count == 0 && inconclusive_count == 0;
    j["ok"] = result.ok;
    if (!first_failure.empty()) j["first_failure"] = first_failure;
    result.first_failure = first_failure;
    result.json = std::move(j);
    return result;
}

}  // namespace latsieve
