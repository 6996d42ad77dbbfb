#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latsieve/lattice.hpp"

namespace latsieve {

struct SearchBudget {
    double seconds = 60.0;
};

// An injective map from pattern elements to lattice nodes preserving meets
// and joins of all pairs, i.e. the image is a sublattice isomorphic to the
// pattern.
struct Embedding {
    std::string pattern_name;
    std::vector<std::string> element_names;
    std::vector<int> node_of;     // per pattern element
    std::vector<int> node_order;  // subgroup order per pattern element
};

enum class SearchOutcome { Witness, Absent, Timeout };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Absent;
    std::optional<Embedding> witness;
    double seconds = 0.0;
    bool found() const { return outcome == SearchOutcome::Witness; }
};

// Uniform view over SubgroupLattice and AbstractLattice targets.
struct LatticeView {
    int size = 0;
    std::function<bool(int, int)> leq;
    std::function<int(int, int)> meet;
    std::function<int(int, int)> join;
    std::function<int(int)> node_order;  // subgroup order, or 0 when not applicable
};

LatticeView view_of(const SubgroupLattice& l);
LatticeView view_of(const AbstractLattice& l);

// Deterministic backtracking search: element order is bottom, top, then
// descending comparability degree; node candidates ascend in canonical order.
SearchResult find_sublattice_embedding(const AbstractLattice& pattern, const LatticeView& target,
                                       const SearchBudget& budget = {});
SearchResult find_sublattice_embedding(const AbstractLattice& pattern, const SubgroupLattice& l,
                                       const SearchBudget& budget = {});

// Relation-driven detector for the nine-element pattern; independent of the
// generic search and used as its oracle.
SearchResult detect_l9_direct(const SubgroupLattice& l, const SearchBudget& budget = {});

// Re-checks that a claimed embedding is injective and preserves all pairwise
// meets and joins.
bool verify_embedding(const AbstractLattice& pattern, const LatticeView& target,
                      const std::vector<int>& node_of);
bool verify_embedding(const AbstractLattice& pattern, const SubgroupLattice& l,
                      const std::vector<int>& node_of);

struct FreenessProfile {
    std::string group_name;
    int group_order = 0;
    int subgroup_count = 0;
    bool modular = false;
    std::vector<std::pair<std::string, SearchResult>> per_pattern;  // in pattern_names() order
    SearchResult l9_direct;

    const SearchResult& result_for(const std::string& pattern) const;
    bool l9_free() const;
    bool any_timeout() const;
};

// Runs every named pattern search plus modularity; for the nine-element
// pattern the direct detector is run as well and agreement is asserted.
FreenessProfile freeness_profile(const GroupTable& g, const LatticeCaps& caps = {},
                                 const SearchBudget& budget = {});
FreenessProfile freeness_profile(const SubgroupLattice& l, const SearchBudget& budget = {});

}  // namespace latsieve
