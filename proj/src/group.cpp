#include "latsieve/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace latsieve {

namespace {

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        return static_cast<std::size_t>(
            hash_bytes(p.images().data(), p.images().size() * sizeof(int)));
    }
};

std::uint64_t table_hash(int order, const std::vector<Elt>& mul) {
    std::uint64_t h = hash_bytes(&order, sizeof(order));
    return hash_bytes(mul.data(), mul.size() * sizeof(Elt), h);
}

void check_basic_invariants(const GroupTable& g) {
    const int n = g.order;
    for (int x = 0; x < n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x)
            throw Error(ErrorCode::Internal, "identity law fails in table '" + g.name + "'");
        if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0)
            throw Error(ErrorCode::Internal, "inverse law fails in table '" + g.name + "'");
    }
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = g.mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::Internal, "row is not a permutation in '" + g.name + "'");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = g.mul(c, r);
            if (seen[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::Internal, "column is not a permutation in '" + g.name + "'");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

std::vector<Elt> compute_inverses(int n, const std::vector<Elt>& mul) {
    std::vector<Elt> inv(static_cast<std::size_t>(n), 0);
    std::vector<char> found(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        bool ok = false;
        for (int b = 0; b < n; ++b) {
            if (mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(b)] == 0) {
                inv[static_cast<std::size_t>(a)] = static_cast<Elt>(b);
                ok = true;
                break;
            }
        }
        if (!ok) throw Error(ErrorCode::ParseError, "table has an element without inverse");
        found[static_cast<std::size_t>(a)] = 1;
    }
    (void)found;
    return inv;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "g" + std::to_string(i);
    return labels;
}

}  // namespace

std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t members_hash(const std::vector<Elt>& members) {
    return hash_bytes(members.data(), members.size() * sizeof(Elt));
}

int GroupTable::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int acc = 0;
    int base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int GroupTable::order_of(int a) const {
    int x = a;
    int k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool SubgroupSet::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), static_cast<Elt>(x));
}

void require_same_parent(const GroupTable& g, const SubgroupSet& x) {
    if (x.parent == &g) return;
    if (x.parent && x.parent->content_hash == g.content_hash && x.parent->order == g.order) return;
    throw Error(ErrorCode::ForeignSubgroup, "subgroup belongs to a different group");
}

GroupTable from_generators(int degree, std::vector<Perm> gens, std::string name,
                           const GroupCaps& caps) {
    for (const Perm& p : gens)
        if (p.degree() != degree)
            throw Error(ErrorCode::ParseError, "generator degree mismatch in '" + name + "'");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::erase_if(gens, [](const Perm& p) { return p.is_identity(); });

    std::vector<Perm> elems;
    elems.push_back(Perm::identity(degree));
    std::unordered_map<Perm, int, PermHash> index;
    index.emplace(elems[0], 0);

    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const Perm& gp : gens) {
            Perm q = elems[i].then(gp);
            if (index.emplace(q, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(q));
                if (static_cast<int>(elems.size()) > caps.max_order ||
                    static_cast<int>(elems.size()) > 65535)
                    throw Error(ErrorCode::ClosureTooLarge,
                                "closure of '" + name + "' exceeds order cap " +
                                    std::to_string(caps.max_order));
            }
        }
    }

    GroupTable g;
    g.order = static_cast<int>(elems.size());
    g.name = std::move(name);
    g.degree = degree;
    g.mul_table.resize(static_cast<std::size_t>(g.order) * static_cast<std::size_t>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            Perm q = elems[static_cast<std::size_t>(a)].then(elems[static_cast<std::size_t>(b)]);
            g.mul_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(g.order) +
                        static_cast<std::size_t>(b)] = static_cast<Elt>(index.at(q));
        }
    g.inv_table = compute_inverses(g.order, g.mul_table);
    g.labels.resize(static_cast<std::size_t>(g.order));
    for (int i = 0; i < g.order; ++i)
        g.labels[static_cast<std::size_t>(i)] = elems[static_cast<std::size_t>(i)].cycle_string();
    g.perms = std::move(elems);
    g.content_hash = table_hash(g.order, g.mul_table);
    check_basic_invariants(g);
    return g;
}

GroupTable from_table(std::string name, int n, const std::vector<int>& flat,
                      std::vector<std::string> labels) {
    if (n <= 0 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != flat.size())
        throw Error(ErrorCode::ParseError, "table size mismatch in '" + name + "'");
    if (n > 65535) throw Error(ErrorCode::ClosureTooLarge, "table too large for '" + name + "'");
    GroupTable g;
    g.order = n;
    g.name = std::move(name);
    g.mul_table.resize(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] < 0 || flat[i] >= n)
            throw Error(ErrorCode::ParseError, "table entry out of range in '" + g.name + "'");
        g.mul_table[i] = static_cast<Elt>(flat[i]);
    }
    g.inv_table = compute_inverses(n, g.mul_table);
    g.labels = labels.empty() ? default_labels(n) : std::move(labels);
    if (static_cast<int>(g.labels.size()) != n)
        throw Error(ErrorCode::ParseError, "label count mismatch in '" + g.name + "'");
    g.content_hash = table_hash(g.order, g.mul_table);
    check_basic_invariants(g);

    // Associativity: exhaustive up to order 512, sampled above.
    auto assoc = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(ErrorCode::ParseError, "table is not associative in '" + g.name + "'");
    };
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) assoc(a, b, c);
    } else {
        std::mt19937 rng(0xC0FFEEu);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 100000; ++t) assoc(d(rng), d(rng), d(rng));
    }
    return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, const GroupCaps& caps) {
    long long n = static_cast<long long>(a.order) * b.order;
    if (n > caps.max_order || n > 65535)
        throw Error(ErrorCode::ClosureTooLarge,
                    "direct product order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_order));
    GroupTable g;
    g.order = static_cast<int>(n);
    g.name = a.name + "x" + b.name;
    g.mul_table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    const int nb = b.order;
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < nb; ++y1) {
            const std::size_t row =
                (static_cast<std::size_t>(x1) * static_cast<std::size_t>(nb) +
                 static_cast<std::size_t>(y1)) *
                static_cast<std::size_t>(n);
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    g.mul_table[row + static_cast<std::size_t>(x2) * static_cast<std::size_t>(nb) +
                                static_cast<std::size_t>(y2)] =
                        static_cast<Elt>(a.mul(x1, x2) * nb + b.mul(y1, y2));
        }
    g.inv_table.resize(static_cast<std::size_t>(n));
    g.labels.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < nb; ++y) {
            int i = x * nb + y;
            g.inv_table[static_cast<std::size_t>(i)] = static_cast<Elt>(a.inv(x) * nb + b.inv(y));
            g.labels[static_cast<std::size_t>(i)] = "(" + a.label(x) + "," + b.label(y) + ")";
        }
    g.content_hash = table_hash(g.order, g.mul_table);
    check_basic_invariants(g);
    return g;
}

Perm automorphism_from_generator_images(const GroupTable& n, const std::vector<int>& gens,
                                        const std::vector<int>& images) {
    if (gens.size() != images.size())
        throw Error(ErrorCode::NotAnAutomorphism, "generator/image count mismatch");
    std::vector<int> img(static_cast<std::size_t>(n.order), -1);
    img[0] = 0;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = n.mul(x, gens[k]);
            int v = n.mul(img[static_cast<std::size_t>(x)], images[k]);
            if (img[static_cast<std::size_t>(y)] == -1) {
                img[static_cast<std::size_t>(y)] = v;
                queue.push_back(y);
            } else if (img[static_cast<std::size_t>(y)] != v) {
                throw Error(ErrorCode::NotAnAutomorphism, "generator images are inconsistent");
            }
        }
    }
    for (int v : img)
        if (v == -1)
            throw Error(ErrorCode::NotAnAutomorphism, "generators do not generate the group");
    Perm p{std::vector<int>(img.begin(), img.end())};
    for (int a = 0; a < n.order; ++a)
        for (int b = 0; b < n.order; ++b)
            if (p.apply(n.mul(a, b)) != n.mul(p.apply(a), p.apply(b)))
                throw Error(ErrorCode::NotAnAutomorphism, "map does not preserve products");
    return p;
}

GroupTable semidirect_product(const ActionSpec& spec, std::string name, const GroupCaps& caps) {
    const GroupTable& N = *spec.target;
    const GroupTable& K = *spec.acting;
    if (spec.generator_elements.size() != spec.images.size())
        throw Error(ErrorCode::NotAnAutomorphism, "generator/image count mismatch");
    for (const Perm& p : spec.images) {
        if (p.degree() != N.order)
            throw Error(ErrorCode::NotAnAutomorphism, "image degree mismatch");
        for (int a = 0; a < N.order; ++a)
            for (int b = 0; b < N.order; ++b)
                if (p.apply(N.mul(a, b)) != N.mul(p.apply(a), p.apply(b)))
                    throw Error(ErrorCode::NotAnAutomorphism,
                                "action image is not an automorphism");
    }
    long long n = static_cast<long long>(N.order) * K.order;
    if (n > caps.max_order || n > 65535)
        throw Error(ErrorCode::ClosureTooLarge,
                    "semidirect product order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_order));

    // Extend the generator images to the whole of K along a BFS word map,
    // then verify the extension is a homomorphism on every pair.
    std::vector<Perm> act(static_cast<std::size_t>(K.order));
    std::vector<char> have(static_cast<std::size_t>(K.order), 0);
    act[0] = Perm::identity(N.order);
    have[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (std::size_t k = 0; k < spec.generator_elements.size(); ++k) {
            int y = K.mul(x, spec.generator_elements[k]);
            Perm ext = act[static_cast<std::size_t>(x)].then(spec.images[k]);
            if (!have[static_cast<std::size_t>(y)]) {
                act[static_cast<std::size_t>(y)] = std::move(ext);
                have[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            } else if (act[static_cast<std::size_t>(y)] != ext) {
                throw Error(ErrorCode::NotAHomomorphism, "action does not extend to a homomorphism");
            }
        }
    }
    for (int x = 0; x < K.order; ++x)
        if (!have[static_cast<std::size_t>(x)])
            throw Error(ErrorCode::NotAHomomorphism,
                        "action generators do not generate the acting group");
    for (int a = 0; a < K.order; ++a)
        for (int b = 0; b < K.order; ++b)
            if (act[static_cast<std::size_t>(K.mul(a, b))] !=
                act[static_cast<std::size_t>(a)].then(act[static_cast<std::size_t>(b)]))
                throw Error(ErrorCode::NotAHomomorphism, "extended action is not a homomorphism");

    GroupTable g;
    g.order = static_cast<int>(n);
    g.name = std::move(name);
    g.mul_table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    const int m = K.order;
    // (x1,k1)(x2,k2) = (x1 * x2^{k1^-1}, k1 k2), writing x^k for the action.
    for (int x1 = 0; x1 < N.order; ++x1)
        for (int k1 = 0; k1 < m; ++k1) {
            const Perm& tw = act[static_cast<std::size_t>(K.inv(k1))];
            const std::size_t row =
                (static_cast<std::size_t>(x1) * static_cast<std::size_t>(m) +
                 static_cast<std::size_t>(k1)) *
                static_cast<std::size_t>(n);
            for (int x2 = 0; x2 < N.order; ++x2) {
                int xt = N.mul(x1, tw.apply(x2));
                for (int k2 = 0; k2 < m; ++k2)
                    g.mul_table[row + static_cast<std::size_t>(x2) * static_cast<std::size_t>(m) +
                                static_cast<std::size_t>(k2)] =
                        static_cast<Elt>(xt * m + K.mul(k1, k2));
            }
        }
    g.inv_table = compute_inverses(g.order, g.mul_table);
    g.labels.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < N.order; ++x)
        for (int k = 0; k < m; ++k)
            g.labels[static_cast<std::size_t>(x * m + k)] = "(" + N.label(x) + "," + K.label(k) + ")";
    g.content_hash = table_hash(g.order, g.mul_table);
    check_basic_invariants(g);
    return g;
}

GroupTable quotient_table(const GroupTable& g, const SubgroupSet& normal, std::string name) {
    require_same_parent(g, normal);
    if (!is_normal(g, normal))
        throw Error(ErrorCode::NotInvariant, "quotient by a non-normal subgroup");
    const int n = g.order;
    std::vector<int> coset(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset[static_cast<std::size_t>(x)] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);  // elements scanned in order, so rep is the coset minimum
        for (Elt m : normal.members) coset[static_cast<std::size_t>(g.mul(x, m))] = id;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> flat(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                 static_cast<std::size_t>(b)] =
                coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                     reps[static_cast<std::size_t>(b)]))];
    std::vector<std::string> labels(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        labels[static_cast<std::size_t>(i)] = g.label(reps[static_cast<std::size_t>(i)]) + "N";
    if (name.empty()) name = g.name + "/[" + std::to_string(normal.order()) + "]";
    return from_table(std::move(name), q, flat, std::move(labels));
}

GroupTable cyclic_group(int n, std::string name) {
    if (name.empty()) name = "C" + std::to_string(n);
    if (n == 1) {
        GroupTable g;
        g.order = 1;
        g.name = std::move(name);
        g.mul_table = {0};
        g.inv_table = {0};
        g.labels = {"e"};
        g.content_hash = table_hash(1, g.mul_table);
        return g;
    }
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    return from_generators(n, {Perm{cyc}}, std::move(name), GroupCaps{std::max(n, 5000)});
}

GroupTable dicyclic_group(int m, std::string name) {
    // elements a^i b^j, 0 <= i < 2m, j in {0,1}; index = 2*i + j
    const int n = 4 * m;
    if (name.empty()) name = "Dic" + std::to_string(m);
    auto idx = [&](int i, int j) { return 2 * (((i % (2 * m)) + 2 * m) % (2 * m)) + j; };
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string l = (i == 0 && j == 0) ? "e" : "";
            if (i > 0) l = "a" + std::string(i > 1 ? "^" + std::to_string(i) : "");
            if (j) l += "b";
            labels[static_cast<std::size_t>(idx(i, j))] = l.empty() ? "e" : l;
            for (int k = 0; k < 2 * m; ++k)
                for (int l2 = 0; l2 < 2; ++l2) {
                    // (a^i b^j)(a^k b^l): move b^j past a^k, using b a^k = a^-k b
                    // and b^2 = a^m.
                    int e1 = j ? i - k : i + k;
                    int jj = j + l2;
                    if (jj == 2) {
                        e1 += m;
                        jj = 0;
                    }
                    flat[static_cast<std::size_t>(idx(i, j)) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(idx(k, l2))] = idx(e1, jj);
                }
        }
    return from_table(std::move(name), n, flat, std::move(labels));
}

GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h, std::string name) {
    require_same_parent(g, h);
    const int n = h.order();
    std::vector<int> pos(static_cast<std::size_t>(g.order), -1);
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(h.members[static_cast<std::size_t>(i)])] = i;
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = g.label(h.members[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            int p = pos[static_cast<std::size_t>(g.mul(h.members[static_cast<std::size_t>(i)],
                                                       h.members[static_cast<std::size_t>(j)]))];
            if (p < 0)
                throw Error(ErrorCode::Internal, "member list is not closed under multiplication");
            flat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)] = p;
        }
    }
    if (name.empty()) name = g.name + "{" + std::to_string(n) + "}";
    GroupTable t;
    t.order = n;
    t.name = std::move(name);
    t.mul_table.resize(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) t.mul_table[i] = static_cast<Elt>(flat[i]);
    t.inv_table = compute_inverses(n, t.mul_table);
    t.labels = std::move(labels);
    t.content_hash = table_hash(n, t.mul_table);
    check_basic_invariants(t);
    return t;
}

void validate_group_table(const GroupTable& g, unsigned seed) {
    check_basic_invariants(g);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(0, g.order - 1);
    const long long full = static_cast<long long>(g.order) * g.order * g.order;
    if (full <= 200000) {
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw Error(ErrorCode::Internal, "associativity fails in '" + g.name + "'");
    } else {
        for (int t = 0; t < 100000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw Error(ErrorCode::Internal, "associativity fails in '" + g.name + "'");
        }
    }
}

SubgroupSet make_subgroup(const GroupTable& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SubgroupSet s;
    s.parent = &g;
    s.members.reserve(members.size());
    for (int m : members) {
        if (m < 0 || m >= g.order)
            throw Error(ErrorCode::ForeignSubgroup, "member index out of range");
        s.members.push_back(static_cast<Elt>(m));
    }
    if (s.members.empty() || s.members.front() != 0)
        throw Error(ErrorCode::Internal, "subgroup must contain the identity");
    if (g.order % s.order() != 0)
        throw Error(ErrorCode::Internal, "member count violates Lagrange divisibility");
    return s;
}

SubgroupSet trivial_subgroup(const GroupTable& g) { return make_subgroup(g, {0}); }

SubgroupSet whole_group(const GroupTable& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order));
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g, std::move(all));
}

SubgroupSet generated_subgroup(const GroupTable& g, std::span<const int> seed) {
    std::vector<char> in(static_cast<std::size_t>(g.order), 0);
    std::vector<int> work{0};
    in[0] = 1;
    std::vector<int> gens;
    std::size_t count = 1;
    for (int s : seed) {
        if (s < 0 || s >= g.order)
            throw Error(ErrorCode::ForeignSubgroup, "seed index out of range");
        if (!in[static_cast<std::size_t>(s)]) {
            in[static_cast<std::size_t>(s)] = 1;
            work.push_back(s);
            ++count;
        }
        gens.push_back(s);
    }
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (int s : gens) {
            int y = g.mul(work[i], s);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                work.push_back(y);
                ++count;
            }
        }
    }
    // collect via an index scan: sorted for free
    SubgroupSet out;
    out.parent = &g;
    out.members.reserve(count);
    for (int x = 0; x < g.order; ++x)
        if (in[static_cast<std::size_t>(x)]) out.members.push_back(static_cast<Elt>(x));
    if (g.order % static_cast<int>(count) != 0)
        throw Error(ErrorCode::Internal, "member count violates Lagrange divisibility");
    return out;
}

SubgroupSet generated_subgroup(const GroupTable& g, std::initializer_list<int> seed) {
    std::vector<int> v(seed);
    return generated_subgroup(g, std::span<const int>(v));
}

SubgroupSet join_subgroups(const GroupTable& g, const SubgroupSet& x, const SubgroupSet& y) {
    require_same_parent(g, x);
    require_same_parent(g, y);
    if (subgroup_leq(x, y)) return y;
    if (subgroup_leq(y, x)) return x;
    std::vector<int> seed;
    for (int e : subgroup_generating_set(g, x)) seed.push_back(e);
    for (int e : subgroup_generating_set(g, y)) seed.push_back(e);
    return generated_subgroup(g, std::span<const int>(seed));
}

SubgroupSet intersect_subgroups(const SubgroupSet& x, const SubgroupSet& y) {
    SubgroupSet s;
    s.parent = x.parent;
    std::set_intersection(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
                          std::back_inserter(s.members));
    return s;
}

bool subgroup_leq(const SubgroupSet& x, const SubgroupSet& y) {
    return std::includes(y.members.begin(), y.members.end(), x.members.begin(), x.members.end());
}

bool is_closed_subgroup(const GroupTable& g, const std::vector<Elt>& members) {
    std::vector<char> in(static_cast<std::size_t>(g.order), 0);
    for (Elt m : members) in[m] = 1;
    if (!in[0]) return false;
    for (Elt a : members) {
        if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
        for (Elt b : members)
            if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
    }
    return true;
}

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& x) {
    return centralizer_in(g, whole_group(g), x);
}

SubgroupSet centralizer_in(const GroupTable& g, const SubgroupSet& domain,
                           const SubgroupSet& of_set) {
    require_same_parent(g, domain);
    require_same_parent(g, of_set);
    std::vector<int> res;
    for (Elt a : domain.members) {
        bool ok = true;
        for (Elt b : of_set.members)
            if (g.mul(a, b) != g.mul(b, a)) {
                ok = false;
                break;
            }
        if (ok) res.push_back(a);
    }
    return make_subgroup(g, std::move(res));
}

SubgroupSet normalizer(const GroupTable& g, const SubgroupSet& x) {
    return normalizer_in(g, whole_group(g), x);
}

SubgroupSet normalizer_in(const GroupTable& g, const SubgroupSet& domain, const SubgroupSet& x) {
    require_same_parent(g, domain);
    require_same_parent(g, x);
    std::vector<int> res;
    for (Elt a : domain.members) {
        bool ok = true;
        for (Elt b : x.members)
            if (!x.contains(g.conj(b, a))) {
                ok = false;
                break;
            }
        if (ok) res.push_back(a);
    }
    return make_subgroup(g, std::move(res));
}

SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& x, const SubgroupSet& y) {
    require_same_parent(g, x);
    require_same_parent(g, y);
    std::vector<int> seed;
    std::vector<char> seen(static_cast<std::size_t>(g.order), 0);
    for (Elt a : x.members)
        for (Elt b : y.members) {
            int c = g.comm(a, b);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                seed.push_back(c);
            }
        }
    return generated_subgroup(g, std::span<const int>(seed));
}

SubgroupSet center(const GroupTable& g) { return centralizer(g, whole_group(g)); }

SubgroupSet conjugate_subgroup(const GroupTable& g, const SubgroupSet& x, int by) {
    require_same_parent(g, x);
    std::vector<int> res;
    res.reserve(x.members.size());
    for (Elt m : x.members) res.push_back(g.conj(m, by));
    return make_subgroup(g, std::move(res));
}

bool is_normal(const GroupTable& g, const SubgroupSet& x) {
    for (int s : small_generating_set(g)) {
        for (Elt m : x.members)
            if (!x.contains(g.conj(m, s))) return false;
    }
    return true;
}

bool is_normal_in(const GroupTable& g, const SubgroupSet& ambient, const SubgroupSet& x) {
    for (Elt s : ambient.members)
        for (Elt m : x.members)
            if (!x.contains(g.conj(m, s))) return false;
    return true;
}

namespace {
std::mutex gens_memo_mutex;
std::map<std::uint64_t, std::vector<int>> gens_memo;
}  // namespace

std::vector<int> small_generating_set(const GroupTable& g) {
    {
        std::lock_guard<std::mutex> lock(gens_memo_mutex);
        auto it = gens_memo.find(g.content_hash);
        if (it != gens_memo.end()) return it->second;
    }
    std::vector<int> gens;
    SubgroupSet cur = trivial_subgroup(g);
    for (int x = 1; x < g.order && cur.order() < g.order; ++x) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        std::vector<int> seed(gens);
        cur = generated_subgroup(g, std::span<const int>(seed));
    }
    std::lock_guard<std::mutex> lock(gens_memo_mutex);
    gens_memo.emplace(g.content_hash, gens);
    return gens;
}

std::vector<int> subgroup_generating_set(const GroupTable& g, const SubgroupSet& h) {
    std::vector<int> gens;
    std::vector<char> in(static_cast<std::size_t>(g.order), 0);
    in[0] = 1;
    int covered = 1;
    for (Elt x : h.members) {
        if (in[x]) continue;
        gens.push_back(x);
        in[x] = 1;
        ++covered;
        // re-close under the enlarged generating set
        std::vector<int> all;
        for (Elt m : h.members)
            if (in[m]) all.push_back(m);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (int s : gens) {
                int y = g.mul(all[i], s);
                if (!in[static_cast<std::size_t>(y)]) {
                    in[static_cast<std::size_t>(y)] = 1;
                    ++covered;
                    all.push_back(y);
                }
            }
        }
        if (covered >= h.order()) break;
    }
    return gens;
}

bool is_abelian(const GroupTable& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

bool is_abelian_subgroup(const GroupTable& g, const SubgroupSet& h) {
    for (Elt a : h.members)
        for (Elt b : h.members)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

bool is_cyclic_subgroup(const GroupTable& g, const SubgroupSet& h) {
    for (Elt a : h.members)
        if (g.order_of(a) == h.order()) return true;
    return false;
}

bool is_elementary_abelian(const GroupTable& g, const SubgroupSet& h) {
    if (h.is_trivial()) return true;
    if (!is_abelian_subgroup(g, h)) return false;
    auto primes = prime_set(h.order());
    if (primes.size() != 1) return false;
    int p = primes[0];
    for (Elt a : h.members)
        if (a != 0 && g.order_of(a) != p) return false;
    return true;
}

bool is_quaternion8(const GroupTable& g, const SubgroupSet& h) {
    if (h.order() != 8 || is_abelian_subgroup(g, h)) return false;
    int involutions = 0;
    for (Elt a : h.members)
        if (a != 0 && g.order_of(a) == 2) ++involutions;
    return involutions == 1;
}

bool is_quaternion8_group(const GroupTable& g) { return is_quaternion8(g, whole_group(g)); }

bool is_alt4_group(const GroupTable& g) {
    if (g.order != 12) return false;
    auto m = element_order_multiset(g);
    return m == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}};
}

std::vector<int> prime_set(long long n) {
    std::vector<int> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(static_cast<int>(p));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(static_cast<int>(n));
    return ps;
}

std::vector<int> prime_set(const GroupTable& g) { return prime_set(g.order); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long long p_part(long long n, int p) {
    long long r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

long long pi_part(long long n, const std::vector<int>& pi) {
    long long r = 1;
    for (int p : pi) r *= p_part(n, p);
    return r;
}

bool is_hall_subgroup(const GroupTable& g, const SubgroupSet& h) {
    long long o = h.order();
    long long idx = g.order / o;
    return std::gcd(o, idx) == 1;
}

SubgroupSet omega1(const GroupTable& g, const SubgroupSet& h, int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    std::vector<int> seed;
    for (Elt a : h.members)
        if (a != 0 && g.order_of(a) == p) seed.push_back(a);
    return generated_subgroup(g, std::span<const int>(seed));
}

std::map<int, int> element_order_multiset(const GroupTable& g) {
    std::map<int, int> m;
    for (int a = 0; a < g.order; ++a) ++m[g.order_of(a)];
    return m;
}

}  // namespace latsieve
