#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsieve/error.hpp"

namespace latsieve {

// One elementary abelian block F_p^d together with the matrix of every
// acting generator on it.
struct ModelBlock {
    char tag = 'H';  // 'H' or 'J'
    int p = 0;
    int dim = 0;
    std::vector<std::vector<int>> gen_matrices;  // per generator, row-major d*d, entries mod p
};

// (H x J) acted on by a cyclic group L presented by commuting generators of
// pairwise coprime orders; H blocks carry scalar (power-automorphism) action.
struct CoprimeActionSystem {
    std::string name;
    int num_generators = 0;
    std::vector<ModelBlock> blocks;
};

struct ModelViolation {
    std::vector<int> pi;
    long long l_order = 0;
    long long c_l_j_order = 0;        // |C_L(J)|
    bool c_l_j_fixed_point_free = true;  // on H
    int fixed_dim_o_pi = 0;           // dim of fixed vectors of O_pi(L) in H + J
    int fixed_dim_o_pi_prime = 0;
};

struct ModelOutcome {
    enum class Kind { Holds, Violation, HypothesisUnmet };
    Kind kind = Kind::Holds;
    std::string detail;  // first unmet hypothesis, when applicable
    std::optional<ModelViolation> violation;
};

// Evaluates the surplus-action condition purely linear-algebraically; never
// builds a multiplication table. Throws Error(HypothesisUnmet is reported
// in-band, hard structural problems throw ParseError/Internal).
ModelOutcome surplus_model(const CoprimeActionSystem& sys);

}  // namespace latsieve
