#include "latsieve/pattern.hpp"

#include <algorithm>
#include <numeric>

namespace latsieve {

LatticeView view_of(const SubgroupLattice& l) {
    LatticeView v;
    v.size = l.size();
    v.leq = [&l](int a, int b) { return l.leq(a, b); };
    v.meet = [&l](int a, int b) { return l.meet(a, b); };
    v.join = [&l](int a, int b) { return l.join(a, b); };
    v.node_order = [&l](int a) { return l.node_order(a); };
    return v;
}

LatticeView view_of(const AbstractLattice& l) {
    LatticeView v;
    v.size = l.size;
    v.leq = [&l](int a, int b) { return l.leq(a, b); };
    v.meet = [&l](int a, int b) { return l.meet(a, b); };
    v.join = [&l](int a, int b) { return l.join(a, b); };
    v.node_order = [](int) { return 0; };
    return v;
}

namespace {

struct Deadline {
    std::chrono::steady_clock::time_point end;
    std::chrono::steady_clock::time_point start;
    mutable long long ticks = 0;
    explicit Deadline(double seconds)
        : start(std::chrono::steady_clock::now()) {
        end = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds));
    }
    bool expired() const {
        if ((ticks++ & 0xFF) != 0) return false;
        return std::chrono::steady_clock::now() >= end;
    }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::vector<int> search_order(const AbstractLattice& p) {
    int bottom = -1, top = -1;
    for (int i = 0; i < p.size; ++i) {
        bool is_bottom = true, is_top = true;
        for (int j = 0; j < p.size; ++j) {
            if (!p.leq(i, j)) is_top = false;
            if (!p.leq(j, i)) is_bottom = false;
        }
        if (is_bottom && bottom < 0) bottom = i;
        if (is_top && top < 0) top = i;
    }
    std::vector<int> degree(static_cast<std::size_t>(p.size), 0);
    for (int i = 0; i < p.size; ++i)
        for (int j = 0; j < p.size; ++j)
            if (i != j && (p.leq(i, j) || p.leq(j, i))) ++degree[static_cast<std::size_t>(i)];
    std::vector<int> rest;
    for (int i = 0; i < p.size; ++i)
        if (i != bottom && i != top) rest.push_back(i);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    std::vector<int> order{bottom, top};
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

class EmbeddingSearcher {
public:
    EmbeddingSearcher(const AbstractLattice& p, const LatticeView& t, const Deadline& deadline)
        : p_(p), t_(t), deadline_(deadline), order_(search_order(p)),
          assign_(static_cast<std::size_t>(p.size), -1),
          used_(static_cast<std::size_t>(t.size), 0) {}

    SearchOutcome run() {
        if (t_.size < p_.size) return SearchOutcome::Absent;
        return place(0);
    }

    const std::vector<int>& assignment() const { return assign_; }

private:
    SearchOutcome place(std::size_t depth) {
        if (depth == order_.size()) return SearchOutcome::Witness;
        if (deadline_.expired()) return SearchOutcome::Timeout;
        const int e = order_[depth];
        for (int v = 0; v < t_.size; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (!consistent(e, v)) continue;
            assign_[static_cast<std::size_t>(e)] = v;
            used_[static_cast<std::size_t>(v)] = 1;
            SearchOutcome sub = place(depth + 1);
            if (sub != SearchOutcome::Absent) return sub;
            assign_[static_cast<std::size_t>(e)] = -1;
            used_[static_cast<std::size_t>(v)] = 0;
        }
        return SearchOutcome::Absent;
    }

    bool consistent(int e, int v) const {
        // order relations against every assigned element
        for (int o = 0; o < p_.size; ++o) {
            int w = assign_[static_cast<std::size_t>(o)];
            if (w < 0 || o == e) continue;
            bool le = p_.leq(e, o), ge = p_.leq(o, e);
            if (le != t_.leq(v, w)) return false;
            if (ge != t_.leq(w, v)) return false;
        }
        // meet/join triples whose last member just arrived
        for (int a = 0; a < p_.size; ++a) {
            int va = (a == e) ? v : assign_[static_cast<std::size_t>(a)];
            if (va < 0) continue;
            for (int b = a; b < p_.size; ++b) {
                int vb = (b == e) ? v : assign_[static_cast<std::size_t>(b)];
                if (vb < 0) continue;
                int m = p_.meet(a, b);
                int vm = (m == e) ? v : assign_[static_cast<std::size_t>(m)];
                if (vm >= 0 && (a == e || b == e || m == e) && t_.meet(va, vb) != vm) return false;
                int j = p_.join(a, b);
                int vj = (j == e) ? v : assign_[static_cast<std::size_t>(j)];
                if (vj >= 0 && (a == e || b == e || j == e) && t_.join(va, vb) != vj) return false;
            }
        }
        return true;
    }

    const AbstractLattice& p_;
    const LatticeView& t_;
    const Deadline& deadline_;
    std::vector<int> order_;
    std::vector<int> assign_;
    std::vector<char> used_;
};

Embedding make_embedding(const AbstractLattice& p, const LatticeView& t,
                         const std::vector<int>& node_of) {
    Embedding e;
    e.pattern_name = p.name;
    e.element_names = p.element_names;
    e.node_of = node_of;
    e.node_order.reserve(node_of.size());
    for (int v : node_of) e.node_order.push_back(t.node_order(v));
    return e;
}

}  // namespace

SearchResult find_sublattice_embedding(const AbstractLattice& pattern, const LatticeView& target,
                                       const SearchBudget& budget) {
    Deadline deadline(budget.seconds);
    EmbeddingSearcher searcher(pattern, target, deadline);
    SearchResult res;
    res.outcome = searcher.run();
    res.seconds = deadline.elapsed();
    if (res.outcome == SearchOutcome::Witness)
        res.witness = make_embedding(pattern, target, searcher.assignment());
    return res;
}

SearchResult find_sublattice_embedding(const AbstractLattice& pattern, const SubgroupLattice& l,
                                       const SearchBudget& budget) {
    return find_sublattice_embedding(pattern, view_of(l), budget);
}

SearchResult detect_l9_direct(const SubgroupLattice& l, const SearchBudget& budget) {
    Deadline deadline(budget.seconds);
    SearchResult res;
    res.outcome = SearchOutcome::Absent;
    const int n = l.size();
    const AbstractLattice pat = named_pattern("L9");

    auto finish = [&](std::vector<int> node_of) {
        res.outcome = SearchOutcome::Witness;
        res.witness = make_embedding(pat, view_of(l), node_of);
        res.seconds = deadline.elapsed();
    };

    std::vector<int> meet_with_d(static_cast<std::size_t>(n));
    std::vector<int> join_with_d(static_cast<std::size_t>(n));

    // element order in the result: E,S,T,D,U,A,B,C,F
    for (int D = 0; D < n && res.outcome == SearchOutcome::Absent; ++D) {
        if (deadline.expired()) {
            res.outcome = SearchOutcome::Timeout;
            break;
        }
        for (int X = 0; X < n; ++X) {
            meet_with_d[static_cast<std::size_t>(X)] = l.meet(X, D);
            join_with_d[static_cast<std::size_t>(X)] = l.join(X, D);
        }
        for (int E = 0; E < n && res.outcome == SearchOutcome::Absent; ++E) {
            if (E == D || !l.leq(E, D)) continue;
            // candidates meeting D in E
            std::vector<int> zs;
            for (int X = 0; X < n; ++X)
                if (X != E && X != D && meet_with_d[static_cast<std::size_t>(X)] == E)
                    zs.push_back(X);
            if (zs.size() < 3) continue;  // S, T, U are distinct members
            for (std::size_t si = 0; si < zs.size() && res.outcome == SearchOutcome::Absent; ++si) {
                const int S = zs[si];
                const int A = join_with_d[static_cast<std::size_t>(S)];
                if (A == S || A == D) continue;
                if (deadline.expired()) {
                    res.outcome = SearchOutcome::Timeout;
                    break;
                }
                for (std::size_t ti = 0; ti < zs.size() && res.outcome == SearchOutcome::Absent;
                     ++ti) {
                    const int T = zs[ti];
                    if (T == S) continue;
                    if (join_with_d[static_cast<std::size_t>(T)] != A) continue;
                    if (l.meet(S, T) != E) continue;
                    if (l.join(S, T) != A) continue;
                    for (int U : zs) {
                        if (U == S || U == T) continue;
                        const int C = join_with_d[static_cast<std::size_t>(U)];
                        if (C == A || C == U || C == D) continue;
                        if (l.meet(A, C) != D) continue;
                        const int F = l.join(S, U);
                        if (l.join(T, U) != F) continue;
                        if (F == A || F == C) continue;
                        for (int B = 0; B < n; ++B) {
                            if (B == E || B == D || B == S || B == T || B == U || B == A ||
                                B == C || B == F)
                                continue;
                            if (l.meet(A, B) != D || l.meet(B, C) != D) continue;
                            if (l.join(A, B) != F || l.join(B, C) != F) continue;
                            finish({E, S, T, D, U, A, B, C, F});
                            break;
                        }
                        if (res.outcome != SearchOutcome::Absent) break;
                    }
                }
            }
        }
    }
    res.seconds = deadline.elapsed();
    return res;
}

bool verify_embedding(const AbstractLattice& pattern, const LatticeView& target,
                      const std::vector<int>& node_of) {
    if (static_cast<int>(node_of.size()) != pattern.size) return false;
    for (std::size_t i = 0; i < node_of.size(); ++i)
        for (std::size_t j = i + 1; j < node_of.size(); ++j)
            if (node_of[i] == node_of[j]) return false;
    for (int a = 0; a < pattern.size; ++a)
        for (int b = 0; b < pattern.size; ++b) {
            int va = node_of[static_cast<std::size_t>(a)];
            int vb = node_of[static_cast<std::size_t>(b)];
            if (target.meet(va, vb) != node_of[static_cast<std::size_t>(pattern.meet(a, b))])
                return false;
            if (target.join(va, vb) != node_of[static_cast<std::size_t>(pattern.join(a, b))])
                return false;
        }
    return true;
}

bool verify_embedding(const AbstractLattice& pattern, const SubgroupLattice& l,
                      const std::vector<int>& node_of) {
    return verify_embedding(pattern, view_of(l), node_of);
}

const SearchResult& FreenessProfile::result_for(const std::string& pattern) const {
    for (const auto& [name, r] : per_pattern)
        if (name == pattern) return r;
    throw Error(ErrorCode::UnknownPattern, "no result for pattern " + pattern);
}

bool FreenessProfile::l9_free() const { return !result_for("L9").found(); }

bool FreenessProfile::any_timeout() const {
    if (l9_direct.outcome == SearchOutcome::Timeout) return true;
    for (const auto& [name, r] : per_pattern)
        if (r.outcome == SearchOutcome::Timeout) return true;
    return false;
}

FreenessProfile freeness_profile(const GroupTable& g, const LatticeCaps& caps,
                                 const SearchBudget& budget) {
    auto lat = lattice_for(g, caps);
    return freeness_profile(*lat, budget);
}

FreenessProfile freeness_profile(const SubgroupLattice& l, const SearchBudget& budget) {
    FreenessProfile prof;
    prof.group_name = l.group.name;
    prof.group_order = l.group.order;
    prof.subgroup_count = l.size();
    prof.modular = is_modular(l);
    for (const auto& name : pattern_names()) {
        AbstractLattice pat = named_pattern(name);
        prof.per_pattern.emplace_back(name, find_sublattice_embedding(pat, l, budget));
    }
    prof.l9_direct = detect_l9_direct(l, budget);

    const SearchResult& generic = prof.result_for("L9");
    if (generic.outcome != SearchOutcome::Timeout &&
        prof.l9_direct.outcome != SearchOutcome::Timeout) {
        if (generic.found() != prof.l9_direct.found())
            throw Error(ErrorCode::Internal,
                        "pattern detectors disagree on '" + l.group.name + "'");
        AbstractLattice l9 = named_pattern("L9");
        if (generic.found() && !verify_embedding(l9, l, generic.witness->node_of))
            throw Error(ErrorCode::Internal, "generic witness fails re-validation");
        if (prof.l9_direct.found() && !verify_embedding(l9, l, prof.l9_direct.witness->node_of))
            throw Error(ErrorCode::Internal, "direct witness fails re-validation");
    }

    // monotone under pattern containment
    if (prof.result_for("L10").found()) {
        for (const auto& [name, r] : prof.per_pattern)
            if (r.outcome == SearchOutcome::Absent)
                throw Error(ErrorCode::Internal,
                            "profile fails containment monotonicity on '" + l.group.name + "'");
    }
    return prof;
}

}  // namespace latsieve
