#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latsieve/error.hpp"
#include "latsieve/perm.hpp"

namespace latsieve {

using Elt = std::uint16_t;

struct GroupCaps {
    int max_order = 5000;
};

// A finite group as a dense multiplication table over element indices
// 0..order-1, with the identity fixed at index 0. Immutable once built.
struct GroupTable {
    int order = 1;
    std::vector<Elt> mul_table;  // order*order, row-major
    std::vector<Elt> inv_table;
    std::vector<std::string> labels;
    std::string name;
    std::uint64_t content_hash = 0;

    // Set when the group was produced by permutation closure; perms then
    // holds the permutation realizing each element.
    int degree = 0;
    std::vector<Perm> perms;

    static constexpr int identity = 0;

    int mul(int a, int b) const {
        return mul_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                         static_cast<std::size_t>(b)];
    }
    int inv(int a) const { return inv_table[static_cast<std::size_t>(a)]; }
    int conj(int x, int by) const { return mul(mul(inv(by), x), by); }
    int comm(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
    int pow(int a, long long e) const;
    int order_of(int a) const;
    bool is_trivial() const { return order == 1; }
    const std::string& label(int a) const { return labels[static_cast<std::size_t>(a)]; }
};

// A subgroup as a strictly sorted list of element indices of its parent.
struct SubgroupSet {
    const GroupTable* parent = nullptr;
    std::vector<Elt> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;
    bool is_trivial() const { return members.size() == 1; }
    bool is_whole() const { return parent && order() == parent->order; }

    friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
        return a.members == b.members;
    }
};

// Semidirect-product data: each listed generator of `acting` is mapped to an
// automorphism of `target`, given as a permutation of target's element indices.
struct ActionSpec {
    const GroupTable* acting = nullptr;
    const GroupTable* target = nullptr;
    std::vector<int> generator_elements;
    std::vector<Perm> images;  // one per generator element, degree = target->order
};

// --- construction ---

GroupTable from_generators(int degree, std::vector<Perm> gens, std::string name,
                           const GroupCaps& caps = {});
// Validates the table: identity at 0, row/column permutations, inverses,
// associativity (fully for order <= 512, on 10^5 random triples above).
GroupTable from_table(std::string name, int n, const std::vector<int>& flat,
                      std::vector<std::string> labels = {});
GroupTable direct_product(const GroupTable& a, const GroupTable& b, const GroupCaps& caps = {});
GroupTable semidirect_product(const ActionSpec& spec, std::string name, const GroupCaps& caps = {});
GroupTable quotient_table(const GroupTable& g, const SubgroupSet& normal, std::string name = "");

GroupTable cyclic_group(int n, std::string name = "");
// Order 4m: <a, b | a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1>. m = 2 gives Q8.
GroupTable dicyclic_group(int m, std::string name = "");

// Builds the subgroup as its own GroupTable; element i of the result is
// h.members[i]. Also returns nothing extra: the member list is the index map.
GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h, std::string name = "");

// Extends generator-level automorphism images to a permutation of all of n's
// elements. Throws NotAnAutomorphism if the images are inconsistent.
Perm automorphism_from_generator_images(const GroupTable& n, const std::vector<int>& gens,
                                        const std::vector<int>& images);

// Deterministic spot check of the GroupTable invariants (used by tests and
// the validation harness).
void validate_group_table(const GroupTable& g, unsigned seed = 12345);

// --- subgroups ---

SubgroupSet make_subgroup(const GroupTable& g, std::vector<int> members);
SubgroupSet trivial_subgroup(const GroupTable& g);
SubgroupSet whole_group(const GroupTable& g);
SubgroupSet generated_subgroup(const GroupTable& g, std::span<const int> seed);
SubgroupSet generated_subgroup(const GroupTable& g, std::initializer_list<int> seed);
// Union of two member lists, then closure.
SubgroupSet join_subgroups(const GroupTable& g, const SubgroupSet& x, const SubgroupSet& y);
SubgroupSet intersect_subgroups(const SubgroupSet& x, const SubgroupSet& y);
bool subgroup_leq(const SubgroupSet& x, const SubgroupSet& y);

// Verifies closure under multiplication and inversion; used when ingesting
// member lists from files or caches.
bool is_closed_subgroup(const GroupTable& g, const std::vector<Elt>& members);

// --- subgroup calculus ---

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& x);
// { a in domain : a commutes with every element of of_set }
SubgroupSet centralizer_in(const GroupTable& g, const SubgroupSet& domain, const SubgroupSet& of_set);
SubgroupSet normalizer(const GroupTable& g, const SubgroupSet& x);
SubgroupSet normalizer_in(const GroupTable& g, const SubgroupSet& domain, const SubgroupSet& x);
SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& x, const SubgroupSet& y);
SubgroupSet center(const GroupTable& g);
SubgroupSet conjugate_subgroup(const GroupTable& g, const SubgroupSet& x, int by);
bool is_normal(const GroupTable& g, const SubgroupSet& x);
bool is_normal_in(const GroupTable& g, const SubgroupSet& ambient, const SubgroupSet& x);

// Small generating sets (greedy; deterministic).
std::vector<int> small_generating_set(const GroupTable& g);
std::vector<int> subgroup_generating_set(const GroupTable& g, const SubgroupSet& h);

// --- predicates and invariants ---

bool is_abelian(const GroupTable& g);
bool is_abelian_subgroup(const GroupTable& g, const SubgroupSet& h);
bool is_cyclic_subgroup(const GroupTable& g, const SubgroupSet& h);
bool is_elementary_abelian(const GroupTable& g, const SubgroupSet& h);
// Order 8, non-abelian, unique involution.
bool is_quaternion8(const GroupTable& g, const SubgroupSet& h);
bool is_quaternion8_group(const GroupTable& g);
// Order 12 with element-order multiset {1:1, 2:3, 3:8}.
bool is_alt4_group(const GroupTable& g);

std::vector<int> prime_set(long long n);
std::vector<int> prime_set(const GroupTable& g);
bool is_prime(long long n);
long long p_part(long long n, int p);
long long pi_part(long long n, const std::vector<int>& pi);
bool is_hall_subgroup(const GroupTable& g, const SubgroupSet& h);

// Subgroup generated by all elements of order p.
SubgroupSet omega1(const GroupTable& g, const SubgroupSet& h, int p);

std::map<int, int> element_order_multiset(const GroupTable& g);

std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ull);
std::uint64_t members_hash(const std::vector<Elt>& members);

void require_same_parent(const GroupTable& g, const SubgroupSet& x);

}  // namespace latsieve
