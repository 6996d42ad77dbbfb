#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latsieve/group.hpp"
#include "latsieve/lattice.hpp"

using namespace latsieve;

namespace {

GroupTable perms(const std::string& name, int degree, std::vector<std::string> gens) {
    std::vector<Perm> ps;
    for (auto& s : gens) ps.push_back(Perm::parse_cycles(s, degree));
    return from_generators(degree, ps, name);
}

// Independent oracle: every subgroup of a small group arises as the closure
// of at most three elements (valid for the groups this is applied to).
std::set<std::vector<Elt>> subgroups_by_small_seeds(const GroupTable& g) {
    std::set<std::vector<Elt>> out;
    out.insert({0});
    for (int a = 0; a < g.order; ++a) {
        out.insert(generated_subgroup(g, {a}).members);
        for (int b = a + 1; b < g.order; ++b) {
            out.insert(generated_subgroup(g, {a, b}).members);
            for (int c = b + 1; c < g.order; ++c)
                out.insert(generated_subgroup(g, {a, b, c}).members);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
    Perm p = Perm::parse_cycles("(1 2 3 4)(5 6)", 7);
    CHECK(p.cycle_string() == "(1 2 3 4)(5 6)");
    CHECK(p.apply(0) == 1);
    CHECK(p.apply(6) == 6);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(Perm::identity(4).cycle_string() == "()");
    CHECK_THROWS_AS(Perm::parse_cycles("(1 8)", 7), Error);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)", 7), Error);
}

TEST_CASE("closure of square symmetries has order 8") {
    GroupTable d8 = perms("D8", 4, {"(1 2 3 4)", "(1 3)"});
    CHECK(d8.order == 8);
    validate_group_table(d8);
}

TEST_CASE("empty generating set gives the trivial group") {
    GroupTable t = from_generators(1, {}, "T");
    CHECK(t.order == 1);
}

TEST_CASE("dihedral of order 12 closes") {
    GroupTable d12 = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    CHECK(d12.order == 12);
    validate_group_table(d12);
}

TEST_CASE("generator order does not change element indexing") {
    GroupTable a = perms("X1", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    GroupTable b = perms("X2", 6, {"(2 6)(3 5)", "(1 2 3 4 5 6)"});
    CHECK(a.mul_table == b.mul_table);
}

TEST_CASE("direct product with the trivial group copies the table") {
    GroupTable s3 = perms("S3", 3, {"(1 2 3)", "(1 2)"});
    GroupTable t = cyclic_group(1);
    GroupTable p = direct_product(t, s3);
    CHECK(p.order == 6);
    CHECK(p.mul_table == s3.mul_table);
}

TEST_CASE("coprime cyclic product is cyclic") {
    GroupTable p = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(p.order == 6);
    bool has_order_6 = false;
    for (int x = 0; x < 6; ++x)
        if (p.order_of(x) == 6) has_order_6 = true;
    CHECK(has_order_6);
}

TEST_CASE("order cap rejects the large triple product") {
    GroupTable q8 = dicyclic_group(2, "Q8");
    GroupTable c625 = cyclic_group(625);
    GroupTable b = cyclic_group(19);  // stand-in factor sizes: 8*625*513 > 5000 either way
    GroupTable q8xc625 = direct_product(q8, c625);
    CHECK(q8xc625.order == 5000);
    CHECK_THROWS_AS(direct_product(q8xc625, b), Error);
    try {
        direct_product(q8xc625, b);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::ClosureTooLarge);
    }
}

TEST_CASE("semidirect product of order 513 has the expected centralizer") {
    GroupTable n = cyclic_group(19);
    GroupTable k = cyclic_group(27);
    std::vector<int> img(19);
    for (int i = 0; i < 19; ++i) img[static_cast<std::size_t>(i)] = (7 * i) % 19;
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    GroupTable g = semidirect_product(spec, "C19xC27");
    CHECK(g.order == 513);
    // N = first factor, K = complement over the identity of N
    std::vector<int> nmem, kmem;
    for (int i = 0; i < 19; ++i) nmem.push_back(i * 27);
    for (int i = 0; i < 27; ++i) kmem.push_back(i);
    SubgroupSet N = make_subgroup(g, nmem);
    SubgroupSet K = make_subgroup(g, kmem);
    SubgroupSet c = centralizer_in(g, K, N);
    CHECK(c.order() == 9);
    // the fixed part is exactly the cube powers of the complement generator
    SubgroupSet cubes = generated_subgroup(g, {g.pow(1, 3)});
    CHECK(c.members == cubes.members);
    // non-nilpotent: the complement is not normal
    CHECK(!is_normal(g, K));
}

TEST_CASE("trivial action gives an abelian semidirect product") {
    GroupTable n = perms("C3xC3", 6, {"(1 2 3)", "(4 5 6)"});
    GroupTable k = cyclic_group(3);
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm::identity(9)};
    GroupTable g = semidirect_product(spec, "C3wr");
    CHECK(g.order == 27);
    CHECK(is_abelian(g));
}

TEST_CASE("order 147 example: squaring has order 3 mod 7") {
    CHECK((2 * 2 * 2) % 7 == 1);
    GroupTable n = perms("C7xC7", 14, {"(1 2 3 4 5 6 7)", "(8 9 10 11 12 13 14)"});
    GroupTable k = cyclic_group(3);
    // act on the first factor by squaring, fix the second
    std::vector<int> img(static_cast<std::size_t>(n.order));
    int e1 = -1, e2 = -1;
    Perm p1 = Perm::parse_cycles("(1 2 3 4 5 6 7)", 14);
    Perm p2 = Perm::parse_cycles("(8 9 10 11 12 13 14)", 14);
    for (int i = 0; i < n.order; ++i) {
        if (n.perms[static_cast<std::size_t>(i)] == p1) e1 = i;
        if (n.perms[static_cast<std::size_t>(i)] == p2) e2 = i;
    }
    REQUIRE(e1 >= 0);
    REQUIRE(e2 >= 0);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) {
            int x = n.mul(n.pow(e1, u), n.pow(e2, v));
            int y = n.mul(n.pow(e1, 2 * u % 7), n.pow(e2, v));
            img[static_cast<std::size_t>(x)] = y;
        }
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    GroupTable g = semidirect_product(spec, "F147");
    CHECK(g.order == 147);
    auto ps = prime_set(g);
    CHECK(ps == std::vector<int>{3, 7});
}

TEST_CASE("rejects non-automorphism actions") {
    GroupTable n = cyclic_group(4);
    GroupTable k = cyclic_group(2);
    // i -> i+1 is no automorphism (does not fix the identity)
    std::vector<int> img{1, 2, 3, 0};
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    CHECK_THROWS_AS(semidirect_product(spec, "bad"), Error);
}

TEST_CASE("rejects actions that are no homomorphism") {
    GroupTable n = cyclic_group(5);
    GroupTable k = cyclic_group(3);
    // i -> 2i has order 4 mod 5, incompatible with a generator of order 3
    std::vector<int> img{0, 2, 4, 1, 3};
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    CHECK_THROWS_AS(semidirect_product(spec, "bad"), Error);
}

TEST_CASE("generated subgroups in the dihedral group of order 12") {
    GroupTable g = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    int a = -1, b = -1;
    Perm pa = Perm::parse_cycles("(1 2 3 4 5 6)", 6);
    Perm pb = Perm::parse_cycles("(2 6)(3 5)", 6);
    for (int i = 0; i < 12; ++i) {
        if (g.perms[static_cast<std::size_t>(i)] == pa) a = i;
        if (g.perms[static_cast<std::size_t>(i)] == pb) b = i;
    }
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);

    CHECK(generated_subgroup(g, {}).order() == 1);

    int a2 = g.mul(a, a);
    SubgroupSet s6 = generated_subgroup(g, {a2, b});
    CHECK(s6.order() == 6);
    CHECK(!is_abelian_subgroup(g, s6));  // symmetric-group shape

    int ab = g.mul(a, b);
    SubgroupSet whole = generated_subgroup(g, {b, ab});
    CHECK(whole.order() == 12);
}

TEST_CASE("subgroup calculus basics") {
    GroupTable q8 = dicyclic_group(2, "Q8");
    SubgroupSet z = center(q8);
    CHECK(z.order() == 2);

    GroupTable c12 = cyclic_group(12);
    CHECK(commutator_subgroup(c12, whole_group(c12), whole_group(c12)).order() == 1);

    GroupTable g = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    CHECK_THROWS_AS(centralizer(g, whole_group(q8)), Error);  // foreign subgroup
}

TEST_CASE("characteristic series operations") {
    GroupTable q8 = dicyclic_group(2, "Q8");
    auto lat = build_lattice(q8);
    SubgroupSet frat = frattini_subgroup(*lat);
    CHECK(frat.members == center(q8).members);
    CHECK(frat.order() == 2);

    GroupTable d12 = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    auto lat12 = build_lattice(d12);
    SubgroupSet o2 = core_p(*lat12, 2);
    CHECK(o2.order() == 2);  // the central rotation
    SubgroupSet zc = center(d12);
    CHECK(o2.members == zc.members);

    CHECK(sylow_subgroups(*lat12, 2).size() == 3);
    CHECK(sylow_subgroups(*lat12, 3).size() == 1);
    CHECK(hall_subgroups(*lat12, {2, 3}).size() == 1);
    CHECK(hall_subgroups(*lat12, {3}).size() == 1);
    CHECK_THROWS_AS(sylow_subgroups(*lat12, 4), Error);

    CHECK(!is_nilpotent(*lat12));
    CHECK(is_nilpotent(*lat));

    SubgroupSet om = omega1(d12, whole_group(d12), 2);
    CHECK(om.order() == 12);  // reflections generate everything
}

TEST_CASE("power automorphism inducers") {
    GroupTable q8 = dicyclic_group(2, "Q8");
    auto lat = build_lattice(q8);
    // every subgroup is normal, so the whole group induces power automorphisms
    SubgroupSet pot = power_automorphism_inducers(*lat, whole_group(q8));
    CHECK(pot.order() == 8);

    GroupTable c7 = cyclic_group(7);
    auto lat7 = build_lattice(c7);
    SubgroupSet n = whole_group(c7);
    SubgroupSet pot7 = power_automorphism_inducers(*lat7, n);
    CHECK(pot7.members == normalizer(c7, n).members);
}

TEST_CASE("conjugation of subgroups") {
    GroupTable g = perms("S3", 3, {"(1 2 3)", "(1 2)"});
    auto lat = build_lattice(g);
    auto twos = sylow_subgroups(*lat, 2);
    REQUIRE(twos.size() == 3);
    // conjugating one order-2 subgroup reaches all three
    std::set<std::vector<Elt>> orbit;
    for (int x = 0; x < g.order; ++x) orbit.insert(conjugate_subgroup(g, twos[0], x).members);
    CHECK(orbit.size() == 3);
    // conjugation fixes normal subgroups pointwise as sets
    auto c3 = sylow_subgroups(*lat, 3).front();
    for (int x = 0; x < g.order; ++x)
        CHECK(conjugate_subgroup(g, c3, x).members == c3.members);
}

TEST_CASE("coprime action identity on a concrete pair") {
    // the order-12 alternating-type group: V4 normal, C3 acting
    GroupTable g = perms("A4", 4, {"(1 2 3)", "(1 2)(3 4)"});
    auto lat = build_lattice(g);
    SubgroupSet v4 = sylow_subgroups(*lat, 2).front();
    REQUIRE(is_normal(g, v4));
    SubgroupSet c3 = sylow_subgroups(*lat, 3).front();
    auto comm = commutator_subgroup(g, v4, c3);
    auto cent = centralizer_in(g, v4, c3);
    auto prod = join_subgroups(g, comm, cent);
    CHECK(prod.members == v4.members);
}

TEST_CASE("subgroup counts against the small-seed oracle") {
    for (auto [name, degree, gens] :
         std::vector<std::tuple<std::string, int, std::vector<std::string>>>{
             {"D8", 4, {"(1 2 3 4)", "(1 3)"}},
             {"D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}},
             {"A4", 4, {"(1 2 3)", "(1 2)(3 4)"}},
             {"S4", 4, {"(1 2 3 4)", "(1 2)"}}}) {
        GroupTable g = perms(name, degree, gens);
        auto oracle = subgroups_by_small_seeds(g);
        auto lat = build_lattice(g);
        std::set<std::vector<Elt>> got;
        for (const auto& n : lat->nodes) got.insert(n.members);
        CHECK(got == oracle);
    }
}

TEST_CASE("randomized cyclic semidirect products satisfy the table invariants") {
    std::mt19937 rng(0xABCDu);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 3 + static_cast<int>(rng() % 14);
        // pick a unit mod n and read off its multiplicative order
        int u = 0;
        do {
            u = 1 + static_cast<int>(rng() % (n - 1));
        } while (std::gcd(u, n) != 1);
        int d = 1;
        long long acc = u % n;
        while (acc != 1 % n) {
            acc = acc * u % n;
            ++d;
        }
        GroupTable ng = cyclic_group(n);
        GroupTable kg = cyclic_group(d);
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<std::size_t>(i)] = static_cast<int>(static_cast<long long>(u) * i % n);
        ActionSpec spec;
        spec.acting = &kg;
        spec.target = &ng;
        spec.generator_elements = {d == 1 ? 0 : 1};
        spec.images = {Perm(img)};
        GroupTable g = semidirect_product(spec, "rand");
        CHECK(g.order == n * d);
        validate_group_table(g, 7u + static_cast<unsigned>(trial));
        auto lat = build_lattice(g);  // meet/join laws re-checked inside
        CHECK(lat->node_order(lat->top()) == g.order);
    }
}

TEST_CASE("quotient tables") {
    GroupTable d12 = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    SubgroupSet z = center(d12);
    GroupTable q = quotient_table(d12, z);
    CHECK(q.order == 6);
    CHECK(!is_abelian(q));  // symmetric-group shape

    auto lat = build_lattice(d12);
    SubgroupSet v4 = sylow_subgroups(*lat, 2).front();
    CHECK_THROWS_AS(quotient_table(d12, v4), Error);  // not normal
}

TEST_CASE("element invariants of recognizable groups") {
    GroupTable q8 = dicyclic_group(2, "Q8");
    CHECK(is_quaternion8_group(q8));
    GroupTable a4 = perms("A4", 4, {"(1 2 3)", "(1 2)(3 4)"});
    CHECK(is_alt4_group(a4));
    GroupTable d12 = perms("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    CHECK(!is_alt4_group(d12));
    CHECK(is_elementary_abelian(a4, sylow_subgroups(*build_lattice(a4), 2).front()));
    CHECK(prime_set(147) == std::vector<int>{3, 7});
    auto lat = build_lattice(d12);
    CHECK(is_hall_subgroup(d12, sylow_subgroups(*lat, 3).front()));
    CHECK(!is_hall_subgroup(d12, center(d12)));  // order 2, index 6
}
