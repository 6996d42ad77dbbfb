#include "latsieve/batten.hpp"

#include <algorithm>
#include <numeric>

namespace latsieve {

std::string BattenInfo::kind_name() const {
    switch (kind) {
        case Kind::CyclicP: return "cyclic_p";
        case Kind::QuaternionQ8: return "q8";
        case Kind::NonNilpotent: return "non_nilpotent";
    }
    return "?";
}

BattenVerdict batten_kind(const SubgroupLattice& l, const SubgroupSet& h) {
    const GroupTable& g = l.group;
    require_same_parent(g, h);
    const long long n = h.order();
    if (n == 1) return NotABatten{"trivial group carries no prime"};

    auto primes = prime_set(n);
    if (primes.size() == 1) {
        const int p = primes[0];
        if (is_cyclic_subgroup(g, h)) {
            BattenInfo b;
            b.kind = BattenInfo::Kind::CyclicP;
            b.subgroup = h;
            b.p = p;
            b.exponent = 0;
            for (long long m = n; m > 1; m /= p) ++b.exponent;
            return b;
        }
        if (is_quaternion8(g, h)) {
            BattenInfo b;
            b.kind = BattenInfo::Kind::QuaternionQ8;
            b.subgroup = h;
            b.p = 2;
            b.exponent = 3;
            return b;
        }
        return NotABatten{"p-group is neither cyclic nor quaternion of order 8"};
    }
    if (primes.size() != 2) return NotABatten{"order has more than two prime divisors"};

    // non-nilpotent shape: normal Sylow subgroup of prime order q, the other
    // Sylow cyclic with C_R(Q) = Phi(R) != 1
    for (int which = 0; which < 2; ++which) {
        const int q = primes[static_cast<std::size_t>(which)];
        const int r = primes[static_cast<std::size_t>(1 - which)];
        if (p_part(n, q) != q) continue;
        // unique normal Sylow q of order q
        std::optional<SubgroupSet> heart;
        for (int i : l.nodes_within(h)) {
            if (l.node_order(i) != q) continue;
            if (is_normal_in(g, h, l.nodes[static_cast<std::size_t>(i)])) {
                heart = l.nodes[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (!heart) continue;
        const long long rpart = p_part(n, r);
        for (int i : l.nodes_within(h)) {
            if (l.node_order(i) != rpart) continue;
            const SubgroupSet& top = l.nodes[static_cast<std::size_t>(i)];
            if (!is_cyclic_subgroup(g, top)) break;  // all Sylow r conjugate, same shape
            SubgroupSet cent = centralizer_in(g, top, *heart);
            if (cent.order() == rpart) break;  // top centralizes heart: nilpotent, not this shape
            // Phi of a cyclic r-group is its unique maximal subgroup
            std::vector<int> phi_seed;
            for (Elt x : top.members) phi_seed.push_back(g.pow(x, r));
            SubgroupSet phi = generated_subgroup(g, std::span<const int>(phi_seed));
            if (phi.is_trivial() || !(cent == phi)) break;
            BattenInfo b;
            b.kind = BattenInfo::Kind::NonNilpotent;
            b.subgroup = h;
            b.heart_prime = q;
            b.top_prime = r;
            b.heart = *heart;
            b.top = top;
            return b;
        }
    }
    return NotABatten{"not of the non-nilpotent batten shape"};
}

BattenVerdict batten_kind(const GroupTable& g) {
    auto lat = lattice_for(g);
    return batten_kind(*lat, whole_group(g));
}

BattenFactorization batten_factorization(const SubgroupLattice& l, const SubgroupSet& k) {
    const GroupTable& g = l.group;
    require_same_parent(g, k);
    if (k.order() == 1) return std::vector<BattenInfo>{};

    auto primes = prime_set(k.order());
    const int np = static_cast<int>(primes.size());

    // Pick one Sylow subgroup of k per prime (the canonical first node).
    std::vector<SubgroupSet> sylow(static_cast<std::size_t>(np));
    std::vector<std::vector<int>> sylow_nodes(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
        long long want = p_part(k.order(), primes[static_cast<std::size_t>(i)]);
        for (int node : l.nodes_within(k))
            if (l.node_order(node) == want) sylow_nodes[static_cast<std::size_t>(i)].push_back(node);
        if (sylow_nodes[static_cast<std::size_t>(i)].empty())
            throw Error(ErrorCode::Internal, "missing Sylow subgroup");
        sylow[static_cast<std::size_t>(i)] =
            l.nodes[static_cast<std::size_t>(sylow_nodes[static_cast<std::size_t>(i)][0])];
    }

    // Link primes whose Sylow subgroups interact non-centrally.
    std::vector<int> cls(static_cast<std::size_t>(np));
    std::iota(cls.begin(), cls.end(), 0);
    auto find_rep = [&](int x) {
        while (cls[static_cast<std::size_t>(x)] != x) x = cls[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            bool linked = false;
            for (int ni : sylow_nodes[static_cast<std::size_t>(i)]) {
                for (int nj : sylow_nodes[static_cast<std::size_t>(j)]) {
                    auto comm = commutator_subgroup(g, l.nodes[static_cast<std::size_t>(ni)],
                                                    l.nodes[static_cast<std::size_t>(nj)]);
                    if (!comm.is_trivial()) {
                        linked = true;
                        break;
                    }
                }
                if (linked) break;
            }
            if (linked) {
                int a = find_rep(i), b = find_rep(j);
                if (a != b) cls[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }

    std::vector<std::vector<int>> classes;
    {
        std::vector<int> rep_to_class(static_cast<std::size_t>(np), -1);
        for (int i = 0; i < np; ++i) {
            int r = find_rep(i);
            if (rep_to_class[static_cast<std::size_t>(r)] < 0) {
                rep_to_class[static_cast<std::size_t>(r)] = static_cast<int>(classes.size());
                classes.emplace_back();
            }
            classes[static_cast<std::size_t>(rep_to_class[static_cast<std::size_t>(r)])].push_back(
                primes[static_cast<std::size_t>(i)]);
        }
    }

    // Each prime class must contribute a normal Hall factor.
    std::vector<BattenInfo> factors;
    for (const auto& pi : classes) {
        long long want = pi_part(k.order(), pi);
        std::optional<SubgroupSet> factor;
        for (int node : l.nodes_within(k)) {
            if (l.node_order(node) != want) continue;
            if (is_normal_in(g, k, l.nodes[static_cast<std::size_t>(node)])) {
                factor = l.nodes[static_cast<std::size_t>(node)];
                break;
            }
        }
        if (!factor) {
            std::string ps;
            for (int p : pi) ps += (ps.empty() ? "" : ",") + std::to_string(p);
            return NotABattenGroup{"no normal Hall factor for prime set {" + ps + "}"};
        }
        auto verdict = batten_kind(l, *factor);
        if (auto* nb = std::get_if<NotABatten>(&verdict)) {
            return NotABattenGroup{"factor of order " + std::to_string(want) +
                                   " is not a batten: " + nb->reason};
        }
        factors.push_back(std::get<BattenInfo>(std::move(verdict)));
    }
    return factors;
}

BattenFactorization batten_factorization(const GroupTable& g) {
    auto lat = lattice_for(g);
    return batten_factorization(*lat, whole_group(g));
}

bool is_batten_group(const SubgroupLattice& l, const SubgroupSet& k) {
    return std::holds_alternative<std::vector<BattenInfo>>(batten_factorization(l, k));
}

}  // namespace latsieve
