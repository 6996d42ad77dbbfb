#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latsieve/batten.hpp"
#include "latsieve/lattice.hpp"

namespace latsieve {

enum class AvoidType { Centralizes, Std, Cent, Hamil, Q8Action, Cy, NN };
const char* avoid_type_name(AvoidType t);

struct SubActionVerdict {
    int subgroup_order = 1;
    bool trivial = false;
    bool power = false;
    bool irreducible = false;
};

// Certificate that a batten either centralizes a coprime p-subgroup or acts
// on it within one of the admissible action shapes. All recorded data is
// re-checkable against the defining clauses.
struct AvoidanceCertificate {
    BattenInfo batten;
    int target_prime = 0;
    AvoidType type = AvoidType::Centralizes;
    SubgroupSet target;      // P
    SubgroupSet commutator;  // [P,B]
    SubgroupSet fixed;       // C_P(B)
    std::vector<SubActionVerdict> per_subgroup;  // cyclic cases: one entry per subgroup of Q
    std::string detail;
};

struct AvoidanceFailure {
    std::string reason;
};

using AvoidanceResult = std::variant<AvoidanceCertificate, AvoidanceFailure>;

// Exhaustive evaluation of the defining clauses for the batten's shape.
// Preconditions: gcd(|B|,|P|) = 1 (NotCoprime) and B normalizes P (NotInvariant).
AvoidanceResult action_avoidance(const SubgroupLattice& l, const BattenInfo& batten, int p,
                                 const SubgroupSet& target);

struct SeparationEntry {
    int q = 0;
    int sylow_node = -1;
    int p1 = 0, p2 = 0;
    int cent1_order = 0, cent2_order = 0;
    bool ok = true;
};

struct SurplusViolation {
    SubgroupSet h, l, j;
    std::vector<int> pi;
};

struct SurplusOutcome {
    bool holds = true;
    bool inconclusive = false;
    long long triples = 0;
    std::optional<SurplusViolation> violation;
};

struct ClassifyCaps {
    long long surplus_triple_cap = 1000000;
};

// Exhaustive scan over (H, L, J): H <= N abelian with non-cyclic non-trivial
// Sylow subgroups, L a cyclic subgroup of K normalizing every subgroup of H
// with pi(L) = pi(L/C_L(H)), J <= N non-trivial abelian L-invariant coprime
// to H with [H,J] = 1 and C_H(C_L(J)) = 1. Each triple must admit some
// g in (HJ)^# centralizing the pi- or pi'-part of L.
SurplusOutcome surplus_check(const SubgroupLattice& l, const SubgroupSet& n, const SubgroupSet& k,
                     const ClassifyCaps& caps = {});

struct CandidateReport {
    int n_node = -1;
    int k_node = -1;
    int n_order = 0;
    int k_order = 0;
    bool passed = false;
    std::string failed_stage;  // decomposition/avoidance/separation/surplus, empty when passed
    std::string detail;
};

struct InClassWitness {
    SubgroupSet n, k;
    std::vector<BattenInfo> battens;
    std::vector<AvoidanceCertificate> certificates;
    std::vector<SeparationEntry> fl3;
    long long surplus_triples = 0;
};

struct ClassLWitness {
    bool in_class = false;
    bool inconclusive = false;
    std::optional<InClassWitness> witness;
    std::vector<CandidateReport> candidates;  // every pair tried, in trial order
};

// Tries every (N, K): N over normal nilpotent Hall subgroups with modular
// Sylow subgroups in descending order, K over same-order complements with
// trivial intersection; returns on the first pair satisfying all conditions.
ClassLWitness class_l_membership(const GroupTable& g, const ClassifyCaps& caps = {},
                                 const LatticeCaps& lcaps = {});
ClassLWitness class_l_membership(const SubgroupLattice& l, const ClassifyCaps& caps = {});

// Same enumeration without early exit; the diagnostic surface.
ClassLWitness decomposition_report(const GroupTable& g, const ClassifyCaps& caps = {},
                                   const LatticeCaps& lcaps = {});
ClassLWitness decomposition_report(const SubgroupLattice& l, const ClassifyCaps& caps = {});

// Independent re-validation of an IN_CLASS witness; evaluates every condition
// directly from the group table without going through the search path.
// Returns an empty string on success, else the first failed check.
std::string recheck_witness(const SubgroupLattice& l, const InClassWitness& w);
std::string recheck_certificate(const SubgroupLattice& l, const AvoidanceCertificate& cert);

}  // namespace latsieve
