#include "latsieve/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace latsieve {

namespace {

struct MembersHash {
    std::size_t operator()(const std::vector<Elt>& v) const {
        return static_cast<std::size_t>(members_hash(v));
    }
};

bool members_less(const std::vector<Elt>& a, const std::vector<Elt>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

void finish_lattice(SubgroupLattice& lat, std::vector<std::vector<Elt>> members, bool from_cache) {
    std::sort(members.begin(), members.end(), members_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int n = static_cast<int>(members.size());
    lat.nodes.reserve(static_cast<std::size_t>(n));
    for (auto& m : members) {
        SubgroupSet s;
        s.parent = &lat.group;
        s.members = std::move(m);
        lat.nodes.push_back(std::move(s));
    }

    auto corrupt = [&](const std::string& what) -> Error {
        return Error(from_cache ? ErrorCode::CacheCorrupt : ErrorCode::Internal, what);
    };

    if (lat.nodes.empty() || lat.nodes.front().order() != 1 ||
        lat.nodes.back().order() != lat.group.order)
        throw corrupt("node set misses bottom or top");

    lat.words_ = static_cast<std::size_t>((n + 63) / 64);
    lat.up_.assign(static_cast<std::size_t>(n) * lat.words_, 0);
    lat.down_.assign(static_cast<std::size_t>(n) * lat.words_, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!subgroup_leq(lat.nodes[static_cast<std::size_t>(a)],
                              lat.nodes[static_cast<std::size_t>(b)]))
                continue;
            lat.up_[static_cast<std::size_t>(a) * lat.words_ + static_cast<std::size_t>(b >> 6)] |=
                1ull << (b & 63);
            lat.down_[static_cast<std::size_t>(b) * lat.words_ + static_cast<std::size_t>(a >> 6)] |=
                1ull << (a & 63);
        }

    // meet = intersection, join = generated subgroup: verified fully for
    // small lattices, sampled above.
    auto check_pair = [&](int a, int b) {
        auto inter = intersect_subgroups(lat.nodes[static_cast<std::size_t>(a)],
                                         lat.nodes[static_cast<std::size_t>(b)]);
        int m = lat.meet(a, b);
        if (lat.nodes[static_cast<std::size_t>(m)].members != inter.members)
            throw corrupt("meet is not the intersection");
        auto gen = join_subgroups(lat.group, lat.nodes[static_cast<std::size_t>(a)],
                                  lat.nodes[static_cast<std::size_t>(b)]);
        int j = lat.join(a, b);
        if (lat.nodes[static_cast<std::size_t>(j)].members != gen.members)
            throw corrupt("join is not the generated subgroup");
    };
    if (n <= 300) {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) check_pair(a, b);
    } else {
        std::mt19937 rng(0x5EEDu);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 4096; ++t) check_pair(d(rng), d(rng));
    }

    // Hasse edges
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !lat.leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c) {
                if (c == a || c == b) continue;
                if (lat.leq(a, c) && lat.leq(c, b)) cover = false;
            }
            if (cover) lat.covers_.emplace_back(a, b);
        }
}

int SubgroupLattice::meet(int a, int b) const {
    const std::uint64_t* ra = down_.data() + static_cast<std::size_t>(a) * words_;
    const std::uint64_t* rb = down_.data() + static_cast<std::size_t>(b) * words_;
    for (std::size_t w = words_; w-- > 0;) {
        std::uint64_t v = ra[w] & rb[w];
        if (v) return static_cast<int>(w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(v))));
    }
    return 0;  // unreachable: the bottom is below everything
}

int SubgroupLattice::join(int a, int b) const {
    const std::uint64_t* ra = up_.data() + static_cast<std::size_t>(a) * words_;
    const std::uint64_t* rb = up_.data() + static_cast<std::size_t>(b) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t v = ra[w] & rb[w];
        if (v) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
    }
    return size() - 1;  // unreachable: the top is above everything
}

int SubgroupLattice::find_node(const std::vector<Elt>& members) const {
    auto cmp = [](const SubgroupSet& s, const std::vector<Elt>& m) {
        return members_less(s.members, m);
    };
    auto it = std::lower_bound(nodes.begin(), nodes.end(), members, cmp);
    if (it != nodes.end() && it->members == members) return static_cast<int>(it - nodes.begin());
    return -1;
}

int SubgroupLattice::find_node(const SubgroupSet& s) const { return find_node(s.members); }

std::vector<int> SubgroupLattice::nodes_within(const SubgroupSet& ambient) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (subgroup_leq(nodes[static_cast<std::size_t>(i)], ambient)) out.push_back(i);
    return out;
}

std::shared_ptr<const SubgroupLattice> build_lattice(const GroupTable& g, const LatticeCaps& caps) {
    std::unordered_map<std::vector<Elt>, int, MembersHash> index;
    std::vector<std::vector<Elt>> members;
    auto add = [&](std::vector<Elt> m) {
        auto it = index.find(m);
        if (it != index.end()) return;
        index.emplace(m, static_cast<int>(members.size()));
        members.push_back(std::move(m));
        if (static_cast<int>(members.size()) > caps.max_nodes)
            throw Error(ErrorCode::LatticeTooLarge, "subgroup count of '" + g.name +
                                                        "' exceeds node cap " +
                                                        std::to_string(caps.max_nodes));
    };

    add({0});
    for (int x = 1; x < g.order; ++x) add(generated_subgroup(g, {x}).members);

    // Close under pairwise join. Generating sets are cached per node so each
    // join closure starts from a handful of elements.
    std::vector<std::vector<int>> gens;
    auto gens_of = [&](std::size_t i) -> const std::vector<int>& {
        while (gens.size() <= i) {
            SubgroupSet s;
            s.parent = &g;
            s.members = members[gens.size()];
            gens.push_back(subgroup_generating_set(g, s));
        }
        return gens[i];
    };

    for (std::size_t a = 0; a < members.size(); ++a) {
        if (members[a].size() == static_cast<std::size_t>(g.order)) continue;
        for (std::size_t b = 0; b < a; ++b) {
            if (std::includes(members[a].begin(), members[a].end(), members[b].begin(),
                              members[b].end()))
                continue;
            std::vector<int> seed(gens_of(a));
            const auto& gb = gens_of(b);
            seed.insert(seed.end(), gb.begin(), gb.end());
            add(generated_subgroup(g, std::span<const int>(seed)).members);
        }
    }

    auto lat = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
    lat->group = g;
    finish_lattice(*lat, std::move(members), false);
    return lat;
}

std::shared_ptr<const SubgroupLattice> lattice_from_parts(GroupTable g,
                                                          std::vector<std::vector<Elt>> members) {
    for (const auto& m : members)
        if (!is_closed_subgroup(g, m))
            throw Error(ErrorCode::CacheCorrupt, "node member list is not a subgroup");
    auto lat = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
    lat->group = std::move(g);
    finish_lattice(*lat, std::move(members), true);
    return lat;
}

namespace {
std::mutex memo_mutex;
std::map<std::uint64_t, std::shared_ptr<const SubgroupLattice>> memo;
}  // namespace

std::shared_ptr<const SubgroupLattice> lattice_for(const GroupTable& g, const LatticeCaps& caps) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(g.content_hash);
        if (it != memo.end()) return it->second;
    }
    auto lat = build_lattice(g, caps);
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto [it, inserted] = memo.emplace(g.content_hash, lat);
    return it->second;
}

int AbstractLattice::element_index(const std::string& n) const {
    for (int i = 0; i < size; ++i)
        if (element_names[static_cast<std::size_t>(i)] == n) return i;
    throw Error(ErrorCode::UnknownPattern, "no element named " + n);
}

const std::vector<std::string>& pattern_master_order() {
    static const std::vector<std::string> order{"E", "S", "T", "D", "U", "V", "A", "B", "C", "F"};
    return order;
}

const std::vector<std::string>& pattern_names() {
    static const std::vector<std::string> names{"L5", "L6", "L7", "L8", "M8", "M9", "L9", "L10"};
    return names;
}

namespace {

// The ambient ten-element pattern is the subgroup lattice of the dihedral
// group of order 8 with the fixed labeling: S=<s>, T=<r^2 s>, U=<r s>,
// V=<r^3 s>, D=center, B=<r>, A=<S,T>, C=<U,V>.
const AbstractLattice& ambient_pattern() {
    static const AbstractLattice ambient = [] {
        Perm r = Perm::parse_cycles("(1 2 3 4)", 4);
        Perm s = Perm::parse_cycles("(1 3)", 4);
        GroupTable d8 = from_generators(4, {r, s}, "D8_pattern");
        auto find_elt = [&](const Perm& p) {
            for (int i = 0; i < d8.order; ++i)
                if (d8.perms[static_cast<std::size_t>(i)] == p) return i;
            throw Error(ErrorCode::Internal, "element not found in dihedral table");
        };
        int er = find_elt(r);
        int es = find_elt(s);
        int er2 = d8.mul(er, er);
        auto lat = build_lattice(d8);
        if (lat->size() != 10) throw Error(ErrorCode::Internal, "dihedral lattice size is not 10");

        auto node_of = [&](const SubgroupSet& sub) {
            int i = lat->find_node(sub);
            if (i < 0) throw Error(ErrorCode::Internal, "pattern node missing");
            return i;
        };
        int nE = node_of(trivial_subgroup(d8));
        int nF = node_of(whole_group(d8));
        int nS = node_of(generated_subgroup(d8, {es}));
        int nT = node_of(generated_subgroup(d8, {d8.mul(er2, es)}));
        int nU = node_of(generated_subgroup(d8, {d8.mul(er, es)}));
        int nV = node_of(generated_subgroup(d8, {d8.mul(d8.mul(er2, er), es)}));
        int nD = node_of(center(d8));
        int nB = node_of(generated_subgroup(d8, {er}));
        int nA = lat->join(nS, nT);
        int nC = lat->join(nU, nV);

        std::vector<int> by_master{nE, nS, nT, nD, nU, nV, nA, nB, nC, nF};
        AbstractLattice a;
        a.name = "L10";
        a.size = 10;
        a.element_names = pattern_master_order();
        a.leq_table.assign(100, 0);
        a.meet_table.assign(100, -1);
        a.join_table.assign(100, -1);
        std::vector<int> back(10, -1);
        for (int i = 0; i < 10; ++i)
            back[static_cast<std::size_t>(by_master[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                int ni = by_master[static_cast<std::size_t>(i)];
                int nj = by_master[static_cast<std::size_t>(j)];
                a.leq_table[static_cast<std::size_t>(i) * 10 + static_cast<std::size_t>(j)] =
                    lat->leq(ni, nj) ? 1 : 0;
                a.meet_table[static_cast<std::size_t>(i) * 10 + static_cast<std::size_t>(j)] =
                    static_cast<std::int8_t>(back[static_cast<std::size_t>(lat->meet(ni, nj))]);
                a.join_table[static_cast<std::size_t>(i) * 10 + static_cast<std::size_t>(j)] =
                    static_cast<std::int8_t>(back[static_cast<std::size_t>(lat->join(ni, nj))]);
            }
        validate_lattice_axioms(a);
        return a;
    }();
    return ambient;
}

std::vector<std::string> pattern_elements(const std::string& name) {
    if (name == "L5") return {"E", "S", "U", "A", "F"};
    if (name == "L6") return {"E", "S", "T", "U", "A", "F"};
    if (name == "L7") return {"E", "S", "D", "U", "A", "C", "F"};
    if (name == "L8") return {"E", "S", "T", "D", "U", "A", "C", "F"};
    if (name == "M8") return {"E", "S", "D", "U", "A", "B", "C", "F"};
    if (name == "M9") return {"E", "S", "T", "D", "U", "V", "A", "C", "F"};
    if (name == "L9") return {"E", "S", "T", "D", "U", "A", "B", "C", "F"};
    if (name == "L10") return {"E", "S", "T", "D", "U", "V", "A", "B", "C", "F"};
    throw Error(ErrorCode::UnknownPattern, "unknown pattern " + name);
}

}  // namespace

AbstractLattice named_pattern(const std::string& name) {
    const AbstractLattice& amb = ambient_pattern();
    auto elems = pattern_elements(name);
    AbstractLattice l;
    l.name = name;
    l.size = static_cast<int>(elems.size());
    l.element_names = elems;
    const auto sz = static_cast<std::size_t>(l.size);
    l.leq_table.assign(sz * sz, 0);
    l.meet_table.assign(sz * sz, -1);
    l.join_table.assign(sz * sz, -1);
    std::vector<int> amb_idx;
    for (const auto& e : elems) amb_idx.push_back(amb.element_index(e));
    std::vector<int> back(static_cast<std::size_t>(amb.size), -1);
    for (int i = 0; i < l.size; ++i)
        back[static_cast<std::size_t>(amb_idx[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < l.size; ++i)
        for (int j = 0; j < l.size; ++j) {
            int ai = amb_idx[static_cast<std::size_t>(i)];
            int aj = amb_idx[static_cast<std::size_t>(j)];
            l.leq_table[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] =
                amb.leq(ai, aj) ? 1 : 0;
            int m = back[static_cast<std::size_t>(amb.meet(ai, aj))];
            int jn = back[static_cast<std::size_t>(amb.join(ai, aj))];
            if (m < 0 || jn < 0)
                throw Error(ErrorCode::Internal,
                            "pattern " + name + " is not closed under ambient meet/join");
            l.meet_table[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] =
                static_cast<std::int8_t>(m);
            l.join_table[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] =
                static_cast<std::int8_t>(jn);
        }
    validate_lattice_axioms(l);
    return l;
}

void validate_lattice_axioms(const AbstractLattice& l) {
    const int n = l.size;
    auto fail = [&](const char* what) {
        throw Error(ErrorCode::Internal,
                    std::string("lattice axiom fails (") + what + ") in " + l.name);
    };
    for (int a = 0; a < n; ++a) {
        if (l.meet(a, a) != a || l.join(a, a) != a) fail("idempotence");
        for (int b = 0; b < n; ++b) {
            if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) fail("commutativity");
            if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) fail("absorption");
            if (l.leq(a, b) != (l.meet(a, b) == a)) fail("order consistency");
            for (int c = 0; c < n; ++c) {
                if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c))) fail("meet associativity");
                if (l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) fail("join associativity");
            }
        }
    }
}

bool is_modular(const SubgroupLattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (!l.leq(x, z)) continue;
            for (int y = 0; y < n; ++y)
                if (l.meet(l.join(x, y), z) != l.join(x, l.meet(y, z))) return false;
        }
    return true;
}

bool is_modular(const AbstractLattice& l) {
    const int n = l.size;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (!l.leq(x, z)) continue;
            for (int y = 0; y < n; ++y)
                if (l.meet(l.join(x, y), z) != l.join(x, l.meet(y, z))) return false;
        }
    return true;
}

bool is_modular_below(const SubgroupLattice& l, const SubgroupSet& top) {
    auto within = l.nodes_within(top);
    for (int x : within)
        for (int z : within) {
            if (!l.leq(x, z)) continue;
            for (int y : within)
                if (l.meet(l.join(x, y), z) != l.join(x, l.meet(y, z))) return false;
        }
    return true;
}

namespace {

Congruence normalize_partition(const std::vector<int>& raw) {
    Congruence c;
    c.class_of.assign(raw.size(), -1);
    int next = 0;
    std::map<int, int> remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = remap.emplace(raw[i], next);
        if (inserted) ++next;
        c.class_of[i] = it->second;
    }
    c.class_count = next;
    return c;
}

// Smallest congruence containing the given identifications (union-find with
// substitution closure).
Congruence congruence_closure(const AbstractLattice& l, std::vector<int> cls) {
    const int n = l.size;
    auto find_rep = [&](int x) {
        while (cls[static_cast<std::size_t>(x)] != x) x = cls[static_cast<std::size_t>(x)];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find_rep(a);
        b = find_rep(b);
        if (a == b) return false;
        cls[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (find_rep(a) != find_rep(b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (unite(l.join(a, c), l.join(b, c))) changed = true;
                    if (unite(l.meet(a, c), l.meet(b, c))) changed = true;
                }
            }
    }
    std::vector<int> flat(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) flat[static_cast<std::size_t>(i)] = find_rep(i);
    return normalize_partition(flat);
}

}  // namespace

std::vector<Congruence> enumerate_congruences(const AbstractLattice& l) {
    const int n = l.size;
    if (n > 12)
        throw Error(ErrorCode::PatternTooLarge, "congruence enumeration capped at 12 elements");

    std::vector<int> idcls(static_cast<std::size_t>(n));
    std::iota(idcls.begin(), idcls.end(), 0);

    std::vector<Congruence> principals;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto cls = idcls;
            cls[static_cast<std::size_t>(b)] = a;
            principals.push_back(congruence_closure(l, cls));
        }

    std::set<std::vector<int>> seen;
    std::vector<Congruence> out;
    auto push = [&](Congruence c) {
        if (seen.insert(c.class_of).second) out.push_back(std::move(c));
    };
    push(normalize_partition(idcls));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& p : principals) {
            std::vector<int> cls(idcls);
            auto find_rep = [&](int v) {
                while (cls[static_cast<std::size_t>(v)] != v) v = cls[static_cast<std::size_t>(v)];
                return v;
            };
            auto unite_all = [&](const Congruence& c) {
                std::map<int, int> first;
                for (int x = 0; x < n; ++x) {
                    auto [it, ins] = first.emplace(c.class_of[static_cast<std::size_t>(x)], x);
                    if (!ins) {
                        int ra = find_rep(it->second), rb = find_rep(x);
                        if (ra != rb) cls[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
                    }
                }
            };
            unite_all(out[i]);
            unite_all(p);
            push(congruence_closure(l, cls));
        }
    }
    std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
        if (a.class_count != b.class_count) return a.class_count > b.class_count;
        return a.class_of < b.class_of;
    });
    return out;
}

std::vector<SubgroupSet> sylow_subgroups(const SubgroupLattice& l, int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    long long want = p_part(l.group.order, p);
    std::vector<SubgroupSet> out;
    for (const auto& n : l.nodes)
        if (n.order() == want) out.push_back(n);
    return out;
}

std::vector<SubgroupSet> hall_subgroups(const SubgroupLattice& l, const std::vector<int>& pi) {
    for (int p : pi)
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    long long want = pi_part(l.group.order, pi);
    std::vector<SubgroupSet> out;
    for (const auto& n : l.nodes)
        if (n.order() == want) out.push_back(n);
    return out;
}

SubgroupSet frattini_subgroup(const SubgroupLattice& l) {
    std::vector<int> maximals;
    for (const auto& [a, b] : l.covers())
        if (b == l.top()) maximals.push_back(a);
    if (maximals.empty()) return whole_group(l.group);
    SubgroupSet acc = l.nodes[static_cast<std::size_t>(maximals[0])];
    for (std::size_t i = 1; i < maximals.size(); ++i)
        acc = intersect_subgroups(acc, l.nodes[static_cast<std::size_t>(maximals[i])]);
    return acc;
}

SubgroupSet core_p(const SubgroupLattice& l, int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    std::vector<int> seed{0};
    long long pp = p_part(l.group.order, p);
    for (const auto& n : l.nodes) {
        if (pp % n.order() != 0) continue;  // p-subgroups only
        if (!is_normal(l.group, n)) continue;
        for (Elt m : n.members) seed.push_back(m);
    }
    auto res = generated_subgroup(l.group, std::span<const int>(seed));
    if (p_part(res.order(), p) != res.order())
        throw Error(ErrorCode::Internal, "normal p-subgroups did not generate a p-group");
    return res;
}

bool is_nilpotent(const SubgroupLattice& l) {
    for (int p : prime_set(l.group)) {
        auto syl = sylow_subgroups(l, p);
        bool normal_found = false;
        for (const auto& s : syl)
            if (is_normal(l.group, s)) {
                normal_found = true;
                break;
            }
        if (!normal_found) return false;
    }
    return true;
}

bool is_nilpotent_subgroup(const SubgroupLattice& l, const SubgroupSet& h) {
    for (int p : prime_set(h.order())) {
        long long want = p_part(h.order(), p);
        bool normal_found = false;
        for (int i : l.nodes_within(h)) {
            if (l.node_order(i) != want) continue;
            if (is_normal_in(l.group, h, l.nodes[static_cast<std::size_t>(i)])) {
                normal_found = true;
                break;
            }
        }
        if (!normal_found) return false;
    }
    return true;
}

SubgroupSet power_automorphism_inducers(const SubgroupLattice& l, const SubgroupSet& n) {
    return power_automorphism_inducers_in(l, whole_group(l.group), n);
}

SubgroupSet power_automorphism_inducers_in(const SubgroupLattice& l, const SubgroupSet& domain,
                                           const SubgroupSet& n) {
    require_same_parent(l.group, n);
    SubgroupSet acc = domain;
    for (int i : l.nodes_within(n)) {
        acc = intersect_subgroups(acc, normalizer(l.group, l.nodes[static_cast<std::size_t>(i)]));
        if (acc.is_trivial()) break;
    }
    return acc;
}

SubgroupSet sylow_of_nilpotent(const SubgroupLattice& l, const SubgroupSet& h, int p) {
    long long want = p_part(h.order(), p);
    for (int i : l.nodes_within(h))
        if (l.node_order(i) == want && is_normal_in(l.group, h, l.nodes[static_cast<std::size_t>(i)]))
            return l.nodes[static_cast<std::size_t>(i)];
    throw Error(ErrorCode::Internal, "no normal Sylow subgroup found in nilpotent subgroup");
}

}  // namespace latsieve
