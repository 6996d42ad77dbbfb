#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "latsieve/group.hpp"

namespace latsieve {

struct LatticeCaps {
    int max_nodes = 50000;
};

// All subgroups of a group with containment, meet, join and cover structure.
// Nodes are sorted by (order, member-list lexicographic). Heap-only and
// immutable after build; nodes' parent pointers refer to `group`.
//
// Meet and join are resolved by scanning the common lower/upper bound bit
// rows; this is exact because the node set is closed under intersection and
// generation.
class SubgroupLattice {
public:
    GroupTable group;
    std::vector<SubgroupSet> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
    bool leq(int a, int b) const {
        return (up_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b >> 6)] >>
                (b & 63)) &
               1ull;
    }
    int meet(int a, int b) const;
    int join(int a, int b) const;
    int node_order(int a) const { return nodes[static_cast<std::size_t>(a)].order(); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    // Index of the node with exactly these members, or -1.
    int find_node(const std::vector<Elt>& members) const;
    int find_node(const SubgroupSet& s) const;
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<int> nodes_within(const SubgroupSet& ambient) const;

    SubgroupLattice(const SubgroupLattice&) = delete;
    SubgroupLattice& operator=(const SubgroupLattice&) = delete;

private:
    SubgroupLattice() = default;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> up_;    // row a: { b : a <= b }
    std::vector<std::uint64_t> down_;  // row a: { b : b <= a }
    std::vector<std::pair<int, int>> covers_;
    friend std::shared_ptr<const SubgroupLattice> build_lattice(const GroupTable&,
                                                                const LatticeCaps&);
    friend std::shared_ptr<const SubgroupLattice> lattice_from_parts(GroupTable,
                                                                     std::vector<std::vector<Elt>>);
    friend void finish_lattice(SubgroupLattice&, std::vector<std::vector<Elt>>, bool);
};

std::shared_ptr<const SubgroupLattice> build_lattice(const GroupTable& g,
                                                     const LatticeCaps& caps = {});
// Rebuilds lattice structure from a node list (cache loads). Throws
// CacheCorrupt if the member lists are not closed subgroups or fail the
// meet/join spot checks.
std::shared_ptr<const SubgroupLattice> lattice_from_parts(GroupTable g,
                                                          std::vector<std::vector<Elt>> members);

// Process-wide memo keyed by table content hash.
std::shared_ptr<const SubgroupLattice> lattice_for(const GroupTable& g,
                                                   const LatticeCaps& caps = {});

// A small named pattern lattice with explicit tables.
struct AbstractLattice {
    std::string name;  // L5..L10, M8, M9 or "anonymous"
    int size = 0;
    std::vector<std::string> element_names;
    std::vector<char> leq_table;          // size*size
    std::vector<std::int8_t> meet_table;  // size*size
    std::vector<std::int8_t> join_table;

    bool leq(int a, int b) const {
        return leq_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
                         static_cast<std::size_t>(b)] != 0;
    }
    int meet(int a, int b) const {
        return meet_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
                          static_cast<std::size_t>(b)];
    }
    int join(int a, int b) const {
        return join_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
                          static_cast<std::size_t>(b)];
    }
    int element_index(const std::string& n) const;
};

// Canonical order of the ambient ten-element pattern's members.
const std::vector<std::string>& pattern_master_order();
const std::vector<std::string>& pattern_names();  // L5,L6,L7,L8,M8,M9,L9,L10
AbstractLattice named_pattern(const std::string& name);
// Checks idempotence, commutativity, associativity and absorption.
void validate_lattice_axioms(const AbstractLattice& l);

bool is_modular(const SubgroupLattice& l);
bool is_modular(const AbstractLattice& l);
// Modularity of the interval below `top` (all subgroups of top).
bool is_modular_below(const SubgroupLattice& l, const SubgroupSet& top);

struct Congruence {
    std::vector<int> class_of;  // element -> class id, ids normalized by first occurrence
    int class_count = 0;
    bool is_equality() const { return class_count == static_cast<int>(class_of.size()); }
    bool same(int a, int b) const {
        return class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)];
    }
};

// All congruence relations, equality and total collapse included; pattern
// sizes are capped at 12.
std::vector<Congruence> enumerate_congruences(const AbstractLattice& l);

// --- lattice-backed subgroup calculus ---

std::vector<SubgroupSet> sylow_subgroups(const SubgroupLattice& l, int p);
std::vector<SubgroupSet> hall_subgroups(const SubgroupLattice& l, const std::vector<int>& pi);
SubgroupSet frattini_subgroup(const SubgroupLattice& l);
SubgroupSet core_p(const SubgroupLattice& l, int p);  // largest normal p-subgroup
bool is_nilpotent(const SubgroupLattice& l);
bool is_nilpotent_subgroup(const SubgroupLattice& l, const SubgroupSet& h);
// Elements of the whole group normalizing every subgroup of n.
SubgroupSet power_automorphism_inducers(const SubgroupLattice& l, const SubgroupSet& n);
// As above but intersected with `domain`.
SubgroupSet power_automorphism_inducers_in(const SubgroupLattice& l, const SubgroupSet& domain,
                                           const SubgroupSet& n);
// Unique Sylow p-subgroup of a nilpotent subgroup h.
SubgroupSet sylow_of_nilpotent(const SubgroupLattice& l, const SubgroupSet& h, int p);

}  // namespace latsieve
