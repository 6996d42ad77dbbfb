#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latsieve/lattice.hpp"

namespace latsieve {

// A batten is a cyclic group of prime-power order, a quaternion group of
// order 8, or a non-nilpotent product Q.R with |Q| = q prime, Q normal, R a
// cyclic r-group and C_R(Q) = Phi(R) != 1.
struct BattenInfo {
    enum class Kind { CyclicP, QuaternionQ8, NonNilpotent };
    Kind kind = Kind::CyclicP;
    SubgroupSet subgroup;  // the batten inside its ambient group

    // CyclicP
    int p = 0;
    int exponent = 0;  // |subgroup| = p^exponent

    // NonNilpotent
    int heart_prime = 0;
    int top_prime = 0;
    std::optional<SubgroupSet> heart;  // normal Sylow of prime order
    std::optional<SubgroupSet> top;    // a cyclic Sylow top_prime-subgroup

    std::string kind_name() const;
};

struct NotABatten {
    std::string reason;
};

using BattenVerdict = std::variant<BattenInfo, NotABatten>;

// Classification of a subgroup of `g` against the three batten shapes.
BattenVerdict batten_kind(const SubgroupLattice& l, const SubgroupSet& h);
BattenVerdict batten_kind(const GroupTable& g);

struct NotABattenGroup {
    std::string reason;
};

using BattenFactorization = std::variant<std::vector<BattenInfo>, NotABattenGroup>;

// Finest decomposition of k into normal Hall direct factors of pairwise
// coprime order (primes are grouped by non-central Sylow interaction), each
// factor checked to be a batten. The trivial group yields an empty list.
BattenFactorization batten_factorization(const SubgroupLattice& l, const SubgroupSet& k);
BattenFactorization batten_factorization(const GroupTable& g);

bool is_batten_group(const SubgroupLattice& l, const SubgroupSet& k);

}  // namespace latsieve
