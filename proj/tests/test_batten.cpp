#include <doctest.h>

#include <numeric>

#include "latsieve/batten.hpp"

using namespace latsieve;

namespace {

GroupTable perms(const std::string& name, int degree, std::vector<std::string> gens) {
    std::vector<Perm> ps;
    for (auto& s : gens) ps.push_back(Perm::parse_cycles(s, degree));
    return from_generators(degree, ps, name);
}

GroupTable c19_by_c27() {
    GroupTable n = cyclic_group(19);
    GroupTable k = cyclic_group(27);
    std::vector<int> img(19);
    for (int i = 0; i < 19; ++i) img[static_cast<std::size_t>(i)] = (7 * i) % 19;
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    return semidirect_product(spec, "C19xC27");
}

}  // namespace

TEST_CASE("prime-power cyclic groups are battens") {
    GroupTable c27 = cyclic_group(27);
    auto v = batten_kind(c27);
    auto* b = std::get_if<BattenInfo>(&v);
    REQUIRE(b != nullptr);
    CHECK(b->kind == BattenInfo::Kind::CyclicP);
    CHECK(b->p == 3);
    CHECK(b->exponent == 3);
}

TEST_CASE("the quaternion group of order 8 is a batten") {
    auto v = batten_kind(dicyclic_group(2, "Q8"));
    auto* b = std::get_if<BattenInfo>(&v);
    REQUIRE(b != nullptr);
    CHECK(b->kind == BattenInfo::Kind::QuaternionQ8);
}

TEST_CASE("the order-513 semidirect product is a non-nilpotent batten") {
    GroupTable g = c19_by_c27();
    auto v = batten_kind(g);
    auto* b = std::get_if<BattenInfo>(&v);
    REQUIRE(b != nullptr);
    CHECK(b->kind == BattenInfo::Kind::NonNilpotent);
    CHECK(b->heart_prime == 19);
    CHECK(b->top_prime == 3);
    CHECK(b->heart->order() == 19);
    CHECK(b->top->order() == 27);
    // center = centralizer of the heart in the top = Frattini part = core
    auto lat = lattice_for(g);
    SubgroupSet z = center(g);
    CHECK(z.order() == 9);
    SubgroupSet cr = centralizer_in(g, *b->top, *b->heart);
    CHECK(cr.members == z.members);
    CHECK(core_p(*lat, 3).members == z.members);
}

TEST_CASE("the dicyclic group of order 12 is a batten") {
    auto v = batten_kind(dicyclic_group(3, "Dic3"));
    auto* b = std::get_if<BattenInfo>(&v);
    REQUIRE(b != nullptr);
    CHECK(b->kind == BattenInfo::Kind::NonNilpotent);
    CHECK(b->heart_prime == 3);
    CHECK(b->top_prime == 2);
}

TEST_CASE("groups that are not battens") {
    for (auto g : {perms("C2xC2", 4, {"(1 2)", "(3 4)"}),
                   perms("D8", 4, {"(1 2 3 4)", "(1 3)"}),
                   perms("S3", 3, {"(1 2 3)", "(1 2)"}),  // heart ok but centralizer trivial
                   perms("A4", 4, {"(1 2 3)", "(1 2)(3 4)"})}) {
        auto v = batten_kind(g);
        CHECK(std::holds_alternative<NotABatten>(v));
    }
}

TEST_CASE("factorization of coprime cyclic groups") {
    GroupTable c6 = cyclic_group(6);
    auto v = batten_factorization(c6);
    auto* fs = std::get_if<std::vector<BattenInfo>>(&v);
    REQUIRE(fs != nullptr);
    REQUIRE(fs->size() == 2);
    CHECK((*fs)[0].kind == BattenInfo::Kind::CyclicP);
    CHECK((*fs)[1].kind == BattenInfo::Kind::CyclicP);
    CHECK((*fs)[0].subgroup.order() * (*fs)[1].subgroup.order() == 6);
}

TEST_CASE("same-prime direct factors are rejected") {
    GroupTable g = perms("C2xC2", 4, {"(1 2)", "(3 4)"});
    auto v = batten_factorization(g);
    auto* bad = std::get_if<NotABattenGroup>(&v);
    REQUIRE(bad != nullptr);
}

TEST_CASE("the trivial group is a batten group with no factors") {
    auto v = batten_factorization(cyclic_group(1));
    auto* fs = std::get_if<std::vector<BattenInfo>>(&v);
    REQUIRE(fs != nullptr);
    CHECK(fs->empty());
}

TEST_CASE("the large batten product verifies factor-wise") {
    // the full product of orders 513 * 8 * 625 exceeds the order cap
    GroupTable b = c19_by_c27();
    GroupTable t = dicyclic_group(2, "Q8");
    GroupTable s = cyclic_group(625);
    CHECK_THROWS_AS(direct_product(direct_product(b, t, GroupCaps{65535}), s, GroupCaps{65535}),
                    Error);
    for (const GroupTable* g : {&b, &t, &s}) {
        auto v = batten_kind(*g);
        CHECK(std::holds_alternative<BattenInfo>(v));
    }
    // pairwise coprime orders
    CHECK(std::gcd(static_cast<long long>(b.order), static_cast<long long>(t.order)) == 1);
    CHECK(std::gcd(static_cast<long long>(b.order), static_cast<long long>(s.order)) == 1);
    CHECK(std::gcd(static_cast<long long>(t.order), static_cast<long long>(s.order)) == 1);
    // a mid-size slice of the product factorizes into the expected battens
    GroupTable bt = direct_product(b, t, GroupCaps{4104});
    auto v = batten_factorization(bt);
    auto* fs = std::get_if<std::vector<BattenInfo>>(&v);
    REQUIRE(fs != nullptr);
    REQUIRE(fs->size() == 2);
    CHECK((*fs)[0].kind == BattenInfo::Kind::QuaternionQ8);
    CHECK((*fs)[1].kind == BattenInfo::Kind::NonNilpotent);
}

TEST_CASE("proper subgroups of battens are products of cyclic battens") {
    for (auto g : {c19_by_c27(), dicyclic_group(3, "Dic3"), dicyclic_group(2, "Q8"),
                   cyclic_group(16)}) {
        auto lat = lattice_for(g);
        SubgroupSet whole = whole_group(g);
        for (int i = 0; i < lat->size() - 1; ++i) {
            auto fact = batten_factorization(*lat, lat->nodes[static_cast<std::size_t>(i)]);
            auto* fs = std::get_if<std::vector<BattenInfo>>(&fact);
            REQUIRE(fs != nullptr);
            for (const auto& f : *fs) CHECK(f.kind == BattenInfo::Kind::CyclicP);
        }
    }
}

TEST_CASE("factor set is reproducible") {
    GroupTable g = direct_product(dicyclic_group(2, "Q8"), cyclic_group(15), GroupCaps{200});
    auto v1 = batten_factorization(g);
    auto v2 = batten_factorization(g);
    auto* f1 = std::get_if<std::vector<BattenInfo>>(&v1);
    auto* f2 = std::get_if<std::vector<BattenInfo>>(&v2);
    REQUIRE(f1 != nullptr);
    REQUIRE(f2 != nullptr);
    REQUIRE(f1->size() == f2->size());
    CHECK(f1->size() == 3);  // orders 8, 3, 5
    for (std::size_t i = 0; i < f1->size(); ++i)
        CHECK((*f1)[i].subgroup.members == (*f2)[i].subgroup.members);
}
