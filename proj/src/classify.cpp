#include "latsieve/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latsieve {

const char* avoid_type_name(AvoidType t) {
    switch (t) {
        case AvoidType::Centralizes: return "centralizes";
        case AvoidType::Std: return "std";
        case AvoidType::Cent: return "cent";
        case AvoidType::Hamil: return "hamil";
        case AvoidType::Q8Action: return "q8";
        case AvoidType::Cy: return "Cy";
        case AvoidType::NN: return "NN";
    }
    return "?";
}

namespace {

bool invariant_under(const GroupTable& g, const SubgroupSet& w, const SubgroupSet& u) {
    for (Elt a : u.members)
        for (Elt x : w.members)
            if (!w.contains(g.conj(x, a))) return false;
    return true;
}

bool acts_trivially(const GroupTable& g, const SubgroupSet& u, const SubgroupSet& v) {
    for (Elt a : u.members)
        for (Elt x : v.members)
            if (g.mul(a, x) != g.mul(x, a)) return false;
    return true;
}

// No u-invariant subgroup strictly between the identity and v.
bool acts_irreducibly(const SubgroupLattice& l, const SubgroupSet& u, const SubgroupSet& v) {
    if (v.is_trivial()) return false;
    for (int i : l.nodes_within(v)) {
        const SubgroupSet& w = l.nodes[static_cast<std::size_t>(i)];
        if (w.is_trivial() || w.order() == v.order()) continue;
        if (invariant_under(l.group, w, u)) return false;
    }
    return true;
}

// u normalizes every subgroup of p.
bool induces_power_autos(const SubgroupLattice& l, const SubgroupSet& u, const SubgroupSet& p) {
    for (int i : l.nodes_within(p))
        if (!invariant_under(l.group, l.nodes[static_cast<std::size_t>(i)], u)) return false;
    return true;
}

SubgroupSet subgroup_center(const SubgroupLattice& l, const SubgroupSet& h) {
    return centralizer_in(l.group, h, h);
}

std::vector<int> subgroup_nodes_of_order(const SubgroupLattice& l, const SubgroupSet& ambient,
                                         long long order) {
    std::vector<int> out;
    for (int i : l.nodes_within(ambient))
        if (l.node_order(i) == order) out.push_back(i);
    return out;
}

struct CyclicOutcome {
    bool ok = false;
    AvoidType type = AvoidType::Std;
    std::vector<SubActionVerdict> per_subgroup;
    std::string reason;
};

// Evaluates the cyclic action shapes (std / cent / hamil) of q on p.
CyclicOutcome cyclic_avoidance(const SubgroupLattice& l, const SubgroupSet& q,
                               const SubgroupSet& p) {
    const GroupTable& g = l.group;
    CyclicOutcome out;
    SubgroupSet comm = commutator_subgroup(g, p, q);
    SubgroupSet fixed = centralizer_in(g, p, q);

    auto sub_verdicts = [&](const SubgroupSet& module) {
        std::vector<SubActionVerdict> v;
        for (int i : l.nodes_within(q)) {
            const SubgroupSet& u = l.nodes[static_cast<std::size_t>(i)];
            SubActionVerdict sv;
            sv.subgroup_order = u.order();
            sv.trivial = acts_trivially(g, u, module);
            sv.power = induces_power_autos(l, u, module);
            sv.irreducible = acts_irreducibly(l, u, module);
            v.push_back(sv);
        }
        return v;
    };

    // std: [P,Q] = P elementary abelian; every subgroup of Q irreducible or
    // power-inducing on P.
    if (comm.order() == p.order() && is_elementary_abelian(g, p)) {
        auto verdicts = sub_verdicts(p);
        bool all = std::all_of(verdicts.begin(), verdicts.end(),
                               [](const SubActionVerdict& s) { return s.irreducible || s.power; });
        if (all) {
            out.ok = true;
            out.type = AvoidType::Std;
            out.per_subgroup = std::move(verdicts);
            return out;
        }
    }

    // cent: every subgroup irreducible or trivial on elementary abelian [P,Q];
    // P abelian; C_P(Q) a non-trivial cyclic 2-group.
    if (!comm.is_trivial() && is_elementary_abelian(g, comm) && is_abelian_subgroup(g, p) &&
        !fixed.is_trivial() && is_cyclic_subgroup(g, fixed) &&
        p_part(fixed.order(), 2) == fixed.order()) {
        auto verdicts = sub_verdicts(comm);
        bool all = std::all_of(verdicts.begin(), verdicts.end(),
                               [](const SubActionVerdict& s) { return s.irreducible || s.trivial; });
        if (all) {
            out.ok = true;
            out.type = AvoidType::Cent;
            out.per_subgroup = std::move(verdicts);
            return out;
        }
    }

    // hamil: [P,Q] quaternion of order 8 with a direct factor of order <= 2
    // left over, Q a cyclic 3-group, and ([P,Q]Q)/Z isomorphic to Alt4.
    if (is_quaternion8(g, comm) && p_part(q.order(), 3) == q.order() && q.order() > 1 &&
        p.order() % 8 == 0 && (p.order() == 8 || p.order() == 16)) {
        bool complement_ok = p.order() == comm.order();
        if (!complement_ok) {
            for (int i : l.nodes_within(p)) {
                const SubgroupSet& cand = l.nodes[static_cast<std::size_t>(i)];
                if (cand.order() != p.order() / comm.order()) continue;
                if (!intersect_subgroups(cand, comm).is_trivial()) continue;
                if (acts_trivially(g, cand, comm)) {
                    complement_ok = true;
                    break;
                }
            }
        }
        if (complement_ok) {
            SubgroupSet m = join_subgroups(g, comm, q);
            GroupTable mt = subgroup_table(g, m);
            SubgroupSet z = center(mt);
            GroupTable quo = quotient_table(mt, z);
            if (is_alt4_group(quo)) {
                out.ok = true;
                out.type = AvoidType::Hamil;
                out.per_subgroup = sub_verdicts(comm);
                return out;
            }
        }
    }

    out.ok = false;
    out.reason = "cyclic action fits none of std/cent/hamil";
    return out;
}

}  // namespace

AvoidanceResult action_avoidance(const SubgroupLattice& l, const BattenInfo& batten, int p,
                                 const SubgroupSet& target) {
    const GroupTable& g = l.group;
    const SubgroupSet& b = batten.subgroup;
    if (std::gcd(static_cast<long long>(b.order()), static_cast<long long>(target.order())) != 1)
        throw Error(ErrorCode::NotCoprime, "batten order is not coprime to the target");
    if (!invariant_under(g, target, b))
        throw Error(ErrorCode::NotInvariant, "batten does not normalize the target");

    AvoidanceCertificate cert;
    cert.batten = batten;
    cert.target_prime = p;
    cert.target = target;
    cert.commutator = commutator_subgroup(g, target, b);
    cert.fixed = centralizer_in(g, target, b);

    if (cert.commutator.is_trivial()) {
        cert.type = AvoidType::Centralizes;
        return cert;
    }

    switch (batten.kind) {
        case BattenInfo::Kind::CyclicP: {
            CyclicOutcome c = cyclic_avoidance(l, b, target);
            if (!c.ok) return AvoidanceFailure{c.reason};
            cert.type = c.type;
            cert.per_subgroup = std::move(c.per_subgroup);
            return cert;
        }
        case BattenInfo::Kind::QuaternionQ8: {
            if (p % 4 != 3)
                return AvoidanceFailure{"quaternion action needs p = 3 mod 4, got p = " +
                                        std::to_string(p)};
            if (target.order() != static_cast<long long>(p) * p)
                return AvoidanceFailure{"quaternion action needs |P| = p^2"};
            if (!centralizer_in(g, b, target).is_trivial())
                return AvoidanceFailure{"quaternion subgroup does not act faithfully"};
            cert.type = AvoidType::Q8Action;
            return cert;
        }
        case BattenInfo::Kind::NonNilpotent: {
            SubgroupSet zb = subgroup_center(l, b);
            if (acts_trivially(g, zb, target))
                return AvoidanceFailure{"central part of the batten acts trivially"};
            const SubgroupSet& heart = *batten.heart;
            long long rpart = p_part(b.order(), batten.top_prime);
            auto tops = subgroup_nodes_of_order(l, b, rpart);
            if (acts_trivially(g, heart, target)) {
                // Cy: every top Sylow acts avoiding within the cyclic shapes
                for (int i : tops) {
                    CyclicOutcome c = cyclic_avoidance(l, l.nodes[static_cast<std::size_t>(i)], target);
                    if (!c.ok)
                        return AvoidanceFailure{"top Sylow subgroup fails the cyclic shapes"};
                    if (cert.per_subgroup.empty()) cert.per_subgroup = std::move(c.per_subgroup);
                }
                cert.type = AvoidType::Cy;
                return cert;
            }
            // NN: P elementary abelian of order p^{|B : heart Z(B)|}; every Sylow
            // of B acts irreducibly; Z(B) induces power automorphisms.
            SubgroupSet hz = join_subgroups(g, heart, zb);
            long long index = b.order() / hz.order();
            long long expected = 1;
            for (long long i = 0; i < index; ++i) expected *= p;
            if (!is_elementary_abelian(g, target) || target.order() != expected)
                return AvoidanceFailure{"target is not elementary abelian of order p^" +
                                        std::to_string(index)};
            if (!acts_irreducibly(l, heart, target))
                return AvoidanceFailure{"normal prime Sylow does not act irreducibly"};
            for (int i : tops)
                if (!acts_irreducibly(l, l.nodes[static_cast<std::size_t>(i)], target))
                    return AvoidanceFailure{"top Sylow subgroup does not act irreducibly"};
            if (!induces_power_autos(l, zb, target))
                return AvoidanceFailure{"batten center does not induce power automorphisms"};
            cert.type = AvoidType::NN;
            std::ostringstream d;
            d << "index " << index;
            cert.detail = d.str();
            return cert;
        }
    }
    return AvoidanceFailure{"unknown batten kind"};
}

namespace {

bool sylows_noncyclic(const GroupTable& g, const SubgroupSet& h) {
    for (int p : prime_set(h.order())) {
        int count = 0;
        for (Elt x : h.members)
            if (g.pow(x, p) == 0) ++count;  // includes the identity
        if (count <= p) return false;      // cyclic Sylow p
    }
    return true;
}

int cyclic_generator(const GroupTable& g, const SubgroupSet& h) {
    for (Elt x : h.members)
        if (g.order_of(x) == h.order()) return x;
    return -1;
}

SubgroupSet cyclic_part(const GroupTable& g, int generator, long long sub_order, long long order) {
    // subgroup of <generator> of the given order
    long long step = order / sub_order;
    return generated_subgroup(g, {g.pow(generator, step)});
}

bool centralizes_all(const GroupTable& g, int x, const SubgroupSet& s) {
    for (Elt m : s.members)
        if (g.mul(x, m) != g.mul(m, x)) return false;
    return true;
}

}  // namespace

SurplusOutcome surplus_check(const SubgroupLattice& l, const SubgroupSet& n, const SubgroupSet& k,
                     const ClassifyCaps& caps) {
    const GroupTable& g = l.group;
    SurplusOutcome out;

    std::vector<int> h_cands;
    for (int i : l.nodes_within(n)) {
        const SubgroupSet& h = l.nodes[static_cast<std::size_t>(i)];
        if (h.is_trivial()) continue;
        if (!is_abelian_subgroup(g, h)) continue;
        if (!sylows_noncyclic(g, h)) continue;
        h_cands.push_back(i);
    }
    std::vector<int> j_cands;
    for (int i : l.nodes_within(n)) {
        const SubgroupSet& j = l.nodes[static_cast<std::size_t>(i)];
        if (j.is_trivial()) continue;
        if (!is_abelian_subgroup(g, j)) continue;
        j_cands.push_back(i);
    }

    for (int hi : h_cands) {
        const SubgroupSet& h = l.nodes[static_cast<std::size_t>(hi)];
        SubgroupSet pot = power_automorphism_inducers_in(l, k, h);
        for (int li : l.nodes_within(pot)) {
            const SubgroupSet& lsub = l.nodes[static_cast<std::size_t>(li)];
            int z = cyclic_generator(g, lsub);
            if (z < 0) continue;  // not cyclic
            SubgroupSet cl_h = centralizer_in(g, lsub, h);
            if (prime_set(lsub.order()) != prime_set(lsub.order() / cl_h.order())) continue;
            for (int ji : j_cands) {
                const SubgroupSet& j = l.nodes[static_cast<std::size_t>(ji)];
                if (std::gcd(static_cast<long long>(h.order()),
                             static_cast<long long>(j.order())) != 1)
                    continue;
                if (!invariant_under(g, j, lsub)) continue;
                if (!acts_trivially(g, h, j)) continue;
                SubgroupSet cl_j = centralizer_in(g, lsub, j);
                if (!centralizer_in(g, h, cl_j).is_trivial()) continue;

                if (++out.triples > caps.surplus_triple_cap) {
                    out.inconclusive = true;
                    out.holds = false;
                    return out;
                }

                // pi = primes q of |L| whose Sylow part fixes strictly more of J
                // than of H
                std::vector<int> pi;
                auto lprimes = prime_set(lsub.order());
                for (int q : lprimes) {
                    SubgroupSet oq = cyclic_part(g, z, p_part(lsub.order(), q), lsub.order());
                    SubgroupSet c1 = centralizer_in(g, oq, h);
                    SubgroupSet c2 = centralizer_in(g, oq, j);
                    if (c1.order() < c2.order() && subgroup_leq(c1, c2)) pi.push_back(q);
                }
                long long pi_ord = 1, pip_ord = 1;
                for (int q : lprimes) {
                    long long pp = p_part(lsub.order(), q);
                    if (std::find(pi.begin(), pi.end(), q) != pi.end())
                        pi_ord *= pp;
                    else
                        pip_ord *= pp;
                }
                SubgroupSet o_pi = cyclic_part(g, z, pi_ord, lsub.order());
                SubgroupSet o_pip = cyclic_part(g, z, pip_ord, lsub.order());

                SubgroupSet hj = join_subgroups(g, h, j);
                bool found = false;
                for (Elt x : hj.members) {
                    if (x == 0) continue;
                    if (centralizes_all(g, x, o_pi) || centralizes_all(g, x, o_pip)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    out.holds = false;
                    out.violation = SurplusViolation{h, lsub, j, pi};
                    return out;
                }
            }
        }
    }
    return out;
}

namespace {

struct StageFailure {
    std::string stage;
    std::string detail;
};

std::optional<StageFailure> try_candidate(const SubgroupLattice& l, const SubgroupSet& n,
                                          const SubgroupSet& k, const ClassifyCaps& caps,
                                          InClassWitness& w, bool& inconclusive) {
    const GroupTable& g = l.group;

    auto fact = batten_factorization(l, k);
    if (auto* bad = std::get_if<NotABattenGroup>(&fact))
        return StageFailure{"decomposition", "complement is not a batten group: " + bad->reason};
    w.battens = std::get<std::vector<BattenInfo>>(std::move(fact));

    for (int p : prime_set(n.order())) {
        SubgroupSet op = sylow_of_nilpotent(l, n, p);
        for (const BattenInfo& b : w.battens) {
            AvoidanceResult r = action_avoidance(l, b, p, op);
            if (auto* f = std::get_if<AvoidanceFailure>(&r))
                return StageFailure{"avoidance", "batten of order " + std::to_string(b.subgroup.order()) +
                                               " on the Sylow " + std::to_string(p) +
                                               "-subgroup: " + f->reason};
            w.certificates.push_back(std::get<AvoidanceCertificate>(std::move(r)));
        }
    }

    auto nprimes = prime_set(n.order());
    for (int q : prime_set(k.order())) {
        long long qpart = p_part(k.order(), q);
        for (int qi : l.nodes_within(k)) {
            if (l.node_order(qi) != qpart) continue;
            const SubgroupSet& qs = l.nodes[static_cast<std::size_t>(qi)];
            for (std::size_t a = 0; a < nprimes.size(); ++a) {
                SubgroupSet pa = sylow_of_nilpotent(l, n, nprimes[a]);
                if (acts_trivially(g, qs, pa)) continue;
                for (std::size_t bidx = a + 1; bidx < nprimes.size(); ++bidx) {
                    SubgroupSet pb = sylow_of_nilpotent(l, n, nprimes[bidx]);
                    if (acts_trivially(g, qs, pb)) continue;
                    SubgroupSet c1 = centralizer_in(g, qs, pa);
                    SubgroupSet c2 = centralizer_in(g, qs, pb);
                    SeparationEntry e;
                    e.q = q;
                    e.sylow_node = qi;
                    e.p1 = nprimes[a];
                    e.p2 = nprimes[bidx];
                    e.cent1_order = c1.order();
                    e.cent2_order = c2.order();
                    e.ok = !(c1 == c2);
                    w.fl3.push_back(e);
                    if (!e.ok)
                        return StageFailure{
                            "separation", "a Sylow " + std::to_string(q) +
                                       "-subgroup has equal centralizers on the Sylow " +
                                       std::to_string(nprimes[a]) + "- and " +
                                       std::to_string(nprimes[bidx]) + "-subgroups"};
                }
            }
        }
    }

    SurplusOutcome f4 = surplus_check(l, n, k, caps);
    w.surplus_triples = f4.triples;
    if (f4.inconclusive) {
        inconclusive = true;
        return StageFailure{"surplus", "triple cap exceeded (inconclusive)"};
    }
    if (!f4.holds) {
        const auto& v = *f4.violation;
        std::ostringstream d;
        d << "violated by |H|=" << v.h.order() << " |L|=" << v.l.order() << " |J|=" << v.j.order()
          << " pi={";
        for (std::size_t i = 0; i < v.pi.size(); ++i) d << (i ? "," : "") << v.pi[i];
        d << "}";
        return StageFailure{"surplus", d.str()};
    }
    return std::nullopt;
}

ClassLWitness evaluate_candidates(const SubgroupLattice& l, const ClassifyCaps& caps,
                                  bool stop_at_first_success) {
    const GroupTable& g = l.group;
    ClassLWitness out;

    // first-stage filter on N: normal nilpotent Hall with modular Sylow parts
    std::vector<int> n_cands;
    for (int i = 0; i < l.size(); ++i) {
        const SubgroupSet& n = l.nodes[static_cast<std::size_t>(i)];
        if (!is_hall_subgroup(g, n)) continue;
        if (!is_normal(g, n)) continue;
        if (!is_nilpotent_subgroup(l, n)) continue;
        bool modular_sylows = true;
        for (int p : prime_set(n.order())) {
            SubgroupSet s = sylow_of_nilpotent(l, n, p);
            if (!is_modular_below(l, s)) {
                modular_sylows = false;
                break;
            }
        }
        if (!modular_sylows) continue;
        n_cands.push_back(i);
    }
    std::sort(n_cands.begin(), n_cands.end(), [&](int a, int b) {
        if (l.node_order(a) != l.node_order(b)) return l.node_order(a) > l.node_order(b);
        return a < b;
    });

    for (int ni : n_cands) {
        const SubgroupSet& n = l.nodes[static_cast<std::size_t>(ni)];
        long long want = g.order / n.order();
        for (int ki = 0; ki < l.size(); ++ki) {
            if (l.node_order(ki) != want) continue;
            if (l.meet(ni, ki) != l.bottom()) continue;
            const SubgroupSet& k = l.nodes[static_cast<std::size_t>(ki)];

            CandidateReport rep;
            rep.n_node = ni;
            rep.k_node = ki;
            rep.n_order = n.order();
            rep.k_order = k.order();

            InClassWitness w;
            w.n = n;
            w.k = k;
            bool inconclusive = false;
            auto failure = try_candidate(l, n, k, caps, w, inconclusive);
            if (inconclusive) out.inconclusive = true;
            if (!failure) {
                rep.passed = true;
                out.candidates.push_back(rep);
                if (!out.in_class) {
                    out.in_class = true;
                    out.witness = std::move(w);
                }
                if (stop_at_first_success) return out;
            } else {
                rep.failed_stage = failure->stage;
                rep.detail = failure->detail;
                out.candidates.push_back(rep);
            }
        }
    }
    if (out.candidates.empty()) {
        CandidateReport rep;
        rep.failed_stage = "decomposition";
        rep.detail = "no candidate decomposition";
        out.candidates.push_back(rep);
    }
    return out;
}

}  // namespace

ClassLWitness class_l_membership(const SubgroupLattice& l, const ClassifyCaps& caps) {
    return evaluate_candidates(l, caps, true);
}

ClassLWitness class_l_membership(const GroupTable& g, const ClassifyCaps& caps,
                                 const LatticeCaps& lcaps) {
    auto lat = lattice_for(g, lcaps);
    return class_l_membership(*lat, caps);
}

ClassLWitness decomposition_report(const SubgroupLattice& l, const ClassifyCaps& caps) {
    return evaluate_candidates(l, caps, false);
}

ClassLWitness decomposition_report(const GroupTable& g, const ClassifyCaps& caps,
                                   const LatticeCaps& lcaps) {
    auto lat = lattice_for(g, lcaps);
    return decomposition_report(*lat, caps);
}

// --- independent re-validation -------------------------------------------
//
// Everything below re-derives the claimed facts from the multiplication
// table and the node list, without calling into the search path above.

namespace {

bool raw_closed(const GroupTable& g, const std::vector<Elt>& m) {
    return is_closed_subgroup(g, m);
}

bool raw_normal(const GroupTable& g, const SubgroupSet& s) {
    for (int x = 0; x < g.order; ++x)
        for (Elt a : s.members)
            if (!s.contains(g.conj(a, x))) return false;
    return true;
}

bool raw_nilpotent(const GroupTable& g, const SubgroupSet& s) {
    for (int p : prime_set(s.order())) {
        std::vector<Elt> pelts;
        for (Elt x : s.members) {
            int o = g.order_of(x);
            if (p_part(o, p) == o) pelts.push_back(x);
        }
        std::sort(pelts.begin(), pelts.end());
        if (!raw_closed(g, pelts)) return false;
    }
    return true;
}

bool raw_invariant(const GroupTable& g, const SubgroupSet& w, const SubgroupSet& u) {
    for (Elt a : u.members)
        for (Elt x : w.members)
            if (!w.contains(g.conj(x, a))) return false;
    return true;
}

std::vector<std::vector<Elt>> raw_subgroups_within(const SubgroupLattice& l,
                                                   const SubgroupSet& top) {
    std::vector<std::vector<Elt>> out;
    for (int i : l.nodes_within(top)) out.push_back(l.nodes[static_cast<std::size_t>(i)].members);
    return out;
}

bool raw_irreducible(const SubgroupLattice& l, const SubgroupSet& u, const SubgroupSet& v) {
    if (v.is_trivial()) return false;
    for (const auto& wm : raw_subgroups_within(l, v)) {
        if (wm.size() == 1 || wm.size() == v.members.size()) continue;
        SubgroupSet w;
        w.parent = &l.group;
        w.members = wm;
        if (raw_invariant(l.group, w, u)) return false;
    }
    return true;
}

bool raw_power(const SubgroupLattice& l, const SubgroupSet& u, const SubgroupSet& p) {
    for (const auto& wm : raw_subgroups_within(l, p)) {
        SubgroupSet w;
        w.parent = &l.group;
        w.members = wm;
        if (!raw_invariant(l.group, w, u)) return false;
    }
    return true;
}

std::vector<Elt> raw_commutator(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
    std::vector<int> seed;
    for (Elt x : a.members)
        for (Elt y : b.members) seed.push_back(g.comm(x, y));
    return generated_subgroup(g, std::span<const int>(seed)).members;
}

std::vector<Elt> raw_centralizer_in(const GroupTable& g, const SubgroupSet& dom,
                                    const SubgroupSet& of) {
    std::vector<Elt> out;
    for (Elt a : dom.members) {
        bool ok = true;
        for (Elt b : of.members)
            if (g.mul(a, b) != g.mul(b, a)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(a);
    }
    return out;
}

// Unique Sylow p-subgroup of a nilpotent subgroup: its p-power-order elements.
SubgroupSet nilpotent_sylow_raw(const GroupTable& g, const SubgroupSet& h, int p) {
    std::vector<Elt> pelts;
    for (Elt x : h.members) {
        int o = g.order_of(x);
        if (p_part(o, p) == o) pelts.push_back(x);
    }
    std::sort(pelts.begin(), pelts.end());
    SubgroupSet s;
    s.parent = &g;
    s.members = std::move(pelts);
    return s;
}

std::string raw_check_batten(const SubgroupLattice& l, const BattenInfo& b) {
    const GroupTable& g = l.group;
    const SubgroupSet& s = b.subgroup;
    if (!raw_closed(g, s.members)) return "batten member list is not a subgroup";
    switch (b.kind) {
        case BattenInfo::Kind::CyclicP: {
            long long expect = 1;
            for (int i = 0; i < b.exponent; ++i) expect *= b.p;
            if (s.order() != expect) return "cyclic batten order mismatch";
            bool gen = false;
            for (Elt x : s.members)
                if (g.order_of(x) == s.order()) gen = true;
            if (!gen) return "claimed cyclic batten is not cyclic";
            return "";
        }
        case BattenInfo::Kind::QuaternionQ8: {
            if (s.order() != 8) return "quaternion batten has wrong order";
            int inv = 0;
            bool abelian = true;
            for (Elt x : s.members) {
                if (x != 0 && g.order_of(x) == 2) ++inv;
                for (Elt y : s.members)
                    if (g.mul(x, y) != g.mul(y, x)) abelian = false;
            }
            if (abelian || inv != 1) return "claimed quaternion batten has wrong shape";
            return "";
        }
        case BattenInfo::Kind::NonNilpotent: {
            if (!b.heart || !b.top) return "non-nilpotent batten misses heart or top";
            const SubgroupSet& q = *b.heart;
            const SubgroupSet& r = *b.top;
            if (q.order() != b.heart_prime || !is_prime(q.order()))
                return "heart is not of prime order";
            if (!raw_invariant(g, q, s)) return "heart is not normal in the batten";
            long long rpart = p_part(s.order(), b.top_prime);
            if (r.order() != rpart) return "top is not a Sylow subgroup";
            bool cyc = false;
            for (Elt x : r.members)
                if (g.order_of(x) == r.order()) cyc = true;
            if (!cyc) return "top is not cyclic";
            if (static_cast<long long>(q.order()) * r.order() != s.order())
                return "heart and top do not span the batten";
            // C_R(Q) must equal Phi(R) = unique maximal subgroup of cyclic R != 1
            std::vector<Elt> cent = raw_centralizer_in(g, r, q);
            std::vector<int> phi_seed;
            for (Elt x : r.members) phi_seed.push_back(g.pow(x, b.top_prime));
            auto phi = generated_subgroup(g, std::span<const int>(phi_seed)).members;
            if (phi.size() <= 1) return "top acts with trivial kernel layer";
            std::sort(cent.begin(), cent.end());
            if (cent != phi) return "centralizer of heart in top differs from its Frattini part";
            return "";
        }
    }
    return "unknown batten kind";
}

}  // namespace

std::string recheck_certificate(const SubgroupLattice& l, const AvoidanceCertificate& cert) {
    const GroupTable& g = l.group;
    if (std::string e = raw_check_batten(l, cert.batten); !e.empty()) return e;
    const SubgroupSet& b = cert.batten.subgroup;
    const SubgroupSet& p = cert.target;
    if (!raw_closed(g, p.members)) return "target member list is not a subgroup";
    if (std::gcd(static_cast<long long>(b.order()), static_cast<long long>(p.order())) != 1)
        return "batten and target are not coprime";
    if (!raw_invariant(g, p, b)) return "batten does not normalize the target";
    if (raw_commutator(g, p, b) != cert.commutator.members) return "recorded commutator differs";
    if (raw_centralizer_in(g, p, b) != cert.fixed.members) return "recorded fixed points differ";

    auto comm = cert.commutator;
    auto subgroups_of = [&](const SubgroupSet& top) { return raw_subgroups_within(l, top); };
    auto elementary_abelian = [&](const SubgroupSet& v) { return is_elementary_abelian(g, v); };

    switch (cert.type) {
        case AvoidType::Centralizes:
            if (!comm.is_trivial()) return "claimed centralizing action has a commutator";
            return "";
        case AvoidType::Std: {
            if (comm.members != p.members) return "std action needs [P,B] = P";
            if (!elementary_abelian(p)) return "std action needs elementary abelian P";
            for (const auto& um : subgroups_of(b)) {
                SubgroupSet u;
                u.parent = &g;
                u.members = um;
                if (!raw_irreducible(l, u, p) && !raw_power(l, u, p))
                    return "a subgroup acts neither irreducibly nor by power automorphisms";
            }
            return "";
        }
        case AvoidType::Cent: {
            if (comm.is_trivial() || !elementary_abelian(comm))
                return "cent action needs non-trivial elementary abelian [P,B]";
            if (!is_abelian_subgroup(g, p)) return "cent action needs abelian P";
            if (cert.fixed.is_trivial() || !is_cyclic_subgroup(g, cert.fixed) ||
                p_part(cert.fixed.order(), 2) != cert.fixed.order())
                return "cent action needs non-trivial cyclic 2-group fixed points";
            for (const auto& um : subgroups_of(b)) {
                SubgroupSet u;
                u.parent = &g;
                u.members = um;
                bool trivial = acts_trivially(g, u, comm);
                if (!raw_irreducible(l, u, comm) && !trivial)
                    return "a subgroup acts neither irreducibly nor trivially";
            }
            return "";
        }
        case AvoidType::Hamil: {
            if (!is_quaternion8(g, comm)) return "hamil action needs [P,B] quaternion of order 8";
            if (p_part(b.order(), 3) != b.order()) return "hamil action needs a 3-group";
            if (p.order() != 8 && p.order() != 16) return "hamil action needs |P| in {8,16}";
            SubgroupSet m = join_subgroups(g, comm, b);
            GroupTable mt = subgroup_table(g, m);
            GroupTable quo = quotient_table(mt, center(mt));
            if (!is_alt4_group(quo)) return "hamil quotient is not of alternating type";
            return "";
        }
        case AvoidType::Q8Action: {
            if (cert.target_prime % 4 != 3) return "q8 action needs p = 3 mod 4";
            if (p.order() != static_cast<long long>(cert.target_prime) * cert.target_prime)
                return "q8 action needs |P| = p^2";
            if (raw_centralizer_in(g, b, p).size() != 1) return "q8 action must be faithful";
            return "";
        }
        case AvoidType::Cy: {
            if (!cert.batten.heart) return "malformed certificate";
            if (!acts_trivially(g, *cert.batten.heart, p))
                return "Cy action needs the heart to centralize the target";
            SubgroupSet zb = centralizer_in(g, b, b);
            if (acts_trivially(g, zb, p)) return "Cy action needs the center to act";
            long long rpart = p_part(b.order(), cert.batten.top_prime);
            for (const auto& um : subgroups_of(b)) {
                if (um.size() != static_cast<std::size_t>(rpart)) continue;
                SubgroupSet r;
                r.parent = &g;
                r.members = um;
                CyclicOutcome c = cyclic_avoidance(l, r, p);
                if (!c.ok) return "a top Sylow subgroup fails the cyclic shapes";
            }
            return "";
        }
        case AvoidType::NN: {
            SubgroupSet zb = centralizer_in(g, b, b);
            if (acts_trivially(g, zb, p)) return "NN action needs the center to act";
            SubgroupSet hz = join_subgroups(g, *cert.batten.heart, zb);
            long long index = b.order() / hz.order();
            long long expected = 1;
            for (long long i = 0; i < index; ++i) expected *= cert.target_prime;
            if (!elementary_abelian(p) || p.order() != expected)
                return "NN action target has the wrong shape";
            if (!raw_irreducible(l, *cert.batten.heart, p)) return "heart is not irreducible";
            long long rpart = p_part(b.order(), cert.batten.top_prime);
            for (const auto& um : subgroups_of(b)) {
                if (um.size() != static_cast<std::size_t>(rpart)) continue;
                SubgroupSet r;
                r.parent = &g;
                r.members = um;
                if (!raw_irreducible(l, r, p)) return "a top Sylow subgroup is not irreducible";
            }
            if (!raw_power(l, zb, p)) return "center does not induce power automorphisms";
            return "";
        }
    }
    return "unknown certificate type";
}

std::string recheck_witness(const SubgroupLattice& l, const InClassWitness& w) {
    const GroupTable& g = l.group;
    if (!raw_closed(g, w.n.members)) return "N is not a subgroup";
    if (!raw_closed(g, w.k.members)) return "K is not a subgroup";
    if (static_cast<long long>(w.n.order()) * w.k.order() != g.order)
        return "N and K do not factor the group order";
    if (intersect_subgroups(w.n, w.k).order() != 1) return "N and K intersect non-trivially";
    if (std::gcd(static_cast<long long>(w.n.order()),
                 static_cast<long long>(g.order / w.n.order())) != 1)
        return "N is not a Hall subgroup";
    if (!raw_normal(g, w.n)) return "N is not normal";
    if (!raw_nilpotent(g, w.n)) return "N is not nilpotent";
    for (int p : prime_set(w.n.order())) {
        std::vector<Elt> pelts;
        for (Elt x : w.n.members) {
            int o = g.order_of(x);
            if (p_part(o, p) == o) pelts.push_back(x);
        }
        SubgroupSet s;
        s.parent = &g;
        std::sort(pelts.begin(), pelts.end());
        s.members = pelts;
        if (!is_modular_below(l, s)) return "a Sylow subgroup of N is not modular";
    }

    // battens of K: pairwise coprime normal factors spanning K
    long long prod = 1;
    for (std::size_t i = 0; i < w.battens.size(); ++i) {
        const auto& b = w.battens[i];
        if (!subgroup_leq(b.subgroup, w.k)) return "a batten is not inside K";
        if (!raw_invariant(g, b.subgroup, w.k)) return "a batten is not normal in K";
        if (std::string e = raw_check_batten(l, b); !e.empty()) return e;
        prod *= b.subgroup.order();
        for (std::size_t j = i + 1; j < w.battens.size(); ++j)
            if (std::gcd(static_cast<long long>(b.subgroup.order()),
                         static_cast<long long>(w.battens[j].subgroup.order())) != 1)
                return "battens are not of pairwise coprime order";
    }
    if (prod != w.k.order()) return "battens do not span K";

    // avoidance certificates: one per (prime of N, batten)
    auto nprimes = prime_set(w.n.order());
    if (w.certificates.size() != nprimes.size() * w.battens.size())
        return "certificate count mismatch";
    for (const auto& cert : w.certificates)
        if (std::string e = recheck_certificate(l, cert); !e.empty()) return e;

    // centralizer-separation raw re-evaluation
    for (int q : prime_set(w.k.order())) {
        long long qpart = p_part(w.k.order(), q);
        for (int qi : l.nodes_within(w.k)) {
            if (l.node_order(qi) != qpart) continue;
            const SubgroupSet& qs = l.nodes[static_cast<std::size_t>(qi)];
            for (std::size_t a = 0; a < nprimes.size(); ++a)
                for (std::size_t b = a + 1; b < nprimes.size(); ++b) {
                    SubgroupSet pa = nilpotent_sylow_raw(g, w.n, nprimes[a]);
                    SubgroupSet pb = nilpotent_sylow_raw(g, w.n, nprimes[b]);
                    if (acts_trivially(g, qs, pa) || acts_trivially(g, qs, pb)) continue;
                    if (raw_centralizer_in(g, qs, pa) == raw_centralizer_in(g, qs, pb))
                        return "centralizer separation fails on re-check";
                }
        }
    }

    SurplusOutcome f4 = surplus_check(l, w.n, w.k, ClassifyCaps{});
    if (f4.inconclusive) return "surplus re-check inconclusive";
    if (!f4.holds) return "surplus condition fails on re-check";
    return "";
}

}  // namespace latsieve
