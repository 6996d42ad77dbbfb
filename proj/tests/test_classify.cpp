#include <doctest.h>

#include <numeric>

#include "latsieve/catalog.hpp"
#include "latsieve/classify.hpp"
#include "latsieve/pattern.hpp"

using namespace latsieve;

namespace {

const BattenInfo& single_batten(const InClassWitness& w) {
    REQUIRE(w.battens.size() == 1);
    return w.battens.front();
}

}  // namespace

TEST_CASE("alternating group of order 12 is in the class with type (V4, C3)") {
    GroupTable g = build_builtin("A4");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 4);
    CHECK(w.witness->k.order() == 3);
    REQUIRE(w.witness->certificates.size() == 1);
    CHECK(w.witness->certificates[0].type == AvoidType::Std);
    CHECK(single_batten(*w.witness).kind == BattenInfo::Kind::CyclicP);
    CHECK(recheck_witness(*lattice_for(g), *w.witness).empty());
}

TEST_CASE("the order-12 dihedral group is rejected with per-candidate reasons") {
    GroupTable g = build_builtin("D12");
    ClassLWitness w = class_l_membership(g);
    CHECK(!w.in_class);
    CHECK(!w.inconclusive);
    REQUIRE(!w.candidates.empty());
    for (const auto& c : w.candidates) {
        CHECK(!c.passed);
        CHECK(c.failed_stage == "decomposition");  // complements are never batten groups here
    }
    // candidates: the order-3 normal Hall with each Klein complement, plus (1, G)
    CHECK(w.candidates.size() == 4);
}

TEST_CASE("nilpotent groups with modular Sylow subgroups join with a trivial complement") {
    GroupTable g = direct_product(dicyclic_group(2, "Q8"), cyclic_group(625), GroupCaps{5000});
    g.name = "Q8xC625";
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 5000);
    CHECK(w.witness->k.order() == 1);
    CHECK(w.witness->battens.empty());
    CHECK(w.witness->certificates.empty());
}

TEST_CASE("non-modular prime-power groups are rejected") {
    for (const char* id : {"D8", "D16", "Q16"}) {
        ClassLWitness w = class_l_membership(build_builtin(id));
        CHECK(!w.in_class);
    }
    CHECK(class_l_membership(build_builtin("Mod16")).in_class);
    CHECK(class_l_membership(build_builtin("Q8")).in_class);
}

TEST_CASE("the special linear group of order 24 carries a hamiltonian-type action") {
    GroupTable g = build_builtin("SL23");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 8);
    CHECK(w.witness->k.order() == 3);
    REQUIRE(w.witness->certificates.size() == 1);
    CHECK(w.witness->certificates[0].type == AvoidType::Hamil);
    CHECK(recheck_witness(*lattice_for(g), *w.witness).empty());
}

TEST_CASE("the faithful quaternion action on nine points is accepted") {
    GroupTable g = build_builtin("Q8_on_C3sq");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 9);
    CHECK(w.witness->k.order() == 8);
    REQUIRE(w.witness->certificates.size() == 1);
    CHECK(w.witness->certificates[0].type == AvoidType::Q8Action);
    CHECK(recheck_witness(*lattice_for(g), *w.witness).empty());
}

TEST_CASE("the order-513 batten classifies with the largest normal part") {
    GroupTable g = build_builtin("C19xC27_batten");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 19);
    CHECK(w.witness->k.order() == 27);
    REQUIRE(w.witness->certificates.size() == 1);
    CHECK(w.witness->certificates[0].type == AvoidType::Std);
}

TEST_CASE("power inducers of the order-147 example form the index-3 subgroup") {
    GroupTable g = build_builtin("L9example_7_3");
    auto lat = lattice_for(g);
    SubgroupSet p = sylow_subgroups(*lat, 7).front();
    SubgroupSet pot = power_automorphism_inducers(*lat, p);
    CHECK(pot.order() == 49);  // the abelian Sylow itself, no 3-part
    CHECK(subgroup_leq(p, pot));
}

TEST_CASE("a subgroup may be a batten without being a factor") {
    GroupTable g = build_builtin("C19xC27_batten");
    auto lat = lattice_for(g);
    SubgroupSet heart = sylow_subgroups(*lat, 19).front();
    auto sub_verdict = batten_kind(*lat, heart);
    CHECK(std::holds_alternative<BattenInfo>(sub_verdict));  // a batten on its own
    auto fact = batten_factorization(*lat, whole_group(g));
    auto* fs = std::get_if<std::vector<BattenInfo>>(&fact);
    REQUIRE(fs != nullptr);
    REQUIRE(fs->size() == 1);  // but never listed as a factor
    CHECK(fs->front().subgroup.order() == 513);
}

TEST_CASE("the order-147 example fails the avoidance clauses") {
    GroupTable g = build_builtin("L9example_7_3");
    ClassLWitness w = class_l_membership(g);
    CHECK(!w.in_class);
    bool fl2_seen = false;
    for (const auto& c : w.candidates)
        if (c.failed_stage == "avoidance") fl2_seen = true;
    CHECK(fl2_seen);
    // cross-check with the lattice side
    CHECK(!freeness_profile(g).l9_free());
}

TEST_CASE("cent-type and std-type cyclic actions are classified") {
    GroupTable std_g = build_builtin("C2cube_by_C7");
    ClassLWitness ws = class_l_membership(std_g);
    REQUIRE(ws.in_class);
    REQUIRE(ws.witness->certificates.size() == 1);
    CHECK(ws.witness->certificates[0].type == AvoidType::Std);

    GroupTable cent_g = build_builtin("C2four_by_C7");
    ClassLWitness wc = class_l_membership(cent_g);
    REQUIRE(wc.in_class);
    REQUIRE(wc.witness->certificates.size() == 1);
    CHECK(wc.witness->certificates[0].type == AvoidType::Cent);
    CHECK(wc.witness->certificates[0].fixed.order() == 2);
    CHECK(recheck_witness(*lattice_for(cent_g), *wc.witness).empty());
}

TEST_CASE("the largest normal part wins, pushing central battens into it") {
    GroupTable g = build_builtin("C5_by_Dic3");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    // the order-3 part centralizes the order-5 part and joins the normal side
    CHECK(w.witness->n.order() == 15);
    CHECK(w.witness->k.order() == 4);

    // exhaustive report: the smaller decomposition with the non-nilpotent
    // batten acting also satisfies every condition, with a Cy-type action
    ClassLWitness full = decomposition_report(g);
    bool cy_seen = false;
    for (const auto& c : full.candidates) {
        if (c.n_order == 5 && c.k_order == 12 && c.passed) cy_seen = true;
    }
    CHECK(cy_seen);
    auto lat = lattice_for(g);
    // evaluate the Cy certificate directly
    SubgroupSet n5 = sylow_subgroups(*lat, 5).front();
    auto fact = batten_factorization(*lat, hall_subgroups(*lat, {2, 3}).front());
    auto* fs = std::get_if<std::vector<BattenInfo>>(&fact);
    REQUIRE(fs != nullptr);
    REQUIRE(fs->size() == 1);
    AvoidanceResult r = action_avoidance(*lat, fs->front(), 5, n5);
    auto* cert = std::get_if<AvoidanceCertificate>(&r);
    REQUIRE(cert != nullptr);
    CHECK(cert->type == AvoidType::Cy);
    CHECK(recheck_certificate(*lat, *cert).empty());
}

TEST_CASE("avoidance preconditions raise typed errors") {
    GroupTable g = build_builtin("A4");
    auto lat = lattice_for(g);
    SubgroupSet v4 = sylow_subgroups(*lat, 2).front();
    SubgroupSet c3 = sylow_subgroups(*lat, 3).front();
    BattenInfo fake;
    fake.kind = BattenInfo::Kind::CyclicP;
    fake.p = 2;
    fake.exponent = 2;
    fake.subgroup = v4;
    CHECK_THROWS_AS(action_avoidance(*lat, fake, 2, v4), Error);  // not coprime
    BattenInfo c3b;
    c3b.kind = BattenInfo::Kind::CyclicP;
    c3b.p = 3;
    c3b.exponent = 1;
    c3b.subgroup = c3;
    // a subgroup the complement does not normalize
    SubgroupSet line = generated_subgroup(g, {v4.members[1]});
    CHECK_THROWS_AS(action_avoidance(*lat, c3b, 2, line), Error);
}

TEST_CASE("surplus-action condition is vacuous without qualifying subgroups") {
    GroupTable g = build_builtin("A4");
    auto lat = lattice_for(g);
    SubgroupSet n = sylow_subgroups(*lat, 2).front();
    SubgroupSet k = sylow_subgroups(*lat, 3).front();
    SurplusOutcome out = surplus_check(*lat, n, k);
    CHECK(out.holds);
    CHECK(!out.inconclusive);
}

namespace {

// (C3^2 x C5) acted on by C4: inversion on the square part, nothing on the
// rest. The square part with the full cyclic acting group and the order-5
// part form a qualifying triple for the surplus condition.
GroupTable surplus_triple_group() {
    GroupTable n = from_generators(11,
                                   {Perm::parse_cycles("(1 2 3)", 11),
                                    Perm::parse_cycles("(4 5 6)", 11),
                                    Perm::parse_cycles("(7 8 9 10 11)", 11)},
                                   "C3sqxC5", GroupCaps{200});
    // invert the two order-3 coordinates, fix the order-5 one
    std::vector<int> img(static_cast<std::size_t>(n.order));
    int e1 = -1, e2 = -1, e3 = -1;
    Perm p1 = Perm::parse_cycles("(1 2 3)", 11);
    Perm p2 = Perm::parse_cycles("(4 5 6)", 11);
    Perm p3 = Perm::parse_cycles("(7 8 9 10 11)", 11);
    for (int i = 0; i < n.order; ++i) {
        if (n.perms[static_cast<std::size_t>(i)] == p1) e1 = i;
        if (n.perms[static_cast<std::size_t>(i)] == p2) e2 = i;
        if (n.perms[static_cast<std::size_t>(i)] == p3) e3 = i;
    }
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 5; ++w) {
                int x = n.mul(n.mul(n.pow(e1, u), n.pow(e2, v)), n.pow(e3, w));
                int y = n.mul(n.mul(n.pow(e1, (3 - u) % 3), n.pow(e2, (3 - v) % 3)),
                              n.pow(e3, w));
                img[static_cast<std::size_t>(x)] = y;
            }
    GroupTable c4 = cyclic_group(4);
    ActionSpec spec;
    spec.acting = &c4;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    return semidirect_product(spec, "C3sqxC5_by_C4", GroupCaps{200});
}

}  // namespace

TEST_CASE("triple cap turns the surplus check inconclusive") {
    GroupTable g = surplus_triple_group();
    auto lat = lattice_for(g);
    SubgroupSet n = hall_subgroups(*lat, {3, 5}).front();
    REQUIRE(n.order() == 45);
    SubgroupSet k;
    for (const auto& s : sylow_subgroups(*lat, 2))
        if (intersect_subgroups(s, n).is_trivial()) {
            k = s;
            break;
        }
    REQUIRE(k.order() == 4);
    SurplusOutcome full = surplus_check(*lat, n, k);
    CHECK(full.holds);
    CHECK(full.triples > 0);
    SurplusOutcome capped = surplus_check(*lat, n, k, ClassifyCaps{0});
    CHECK(capped.inconclusive);
}

TEST_CASE("equal centralizers on two Sylow parts fail the separation stage") {
    GroupTable g = build_builtin("C2sqxC7_by_C3");
    auto lat = lattice_for(g);
    ClassLWitness w = class_l_membership(*lat);
    CHECK(!w.in_class);
    bool separation_seen = false;
    for (const auto& c : w.candidates)
        if (c.n_order == 28 && c.failed_stage == "separation") separation_seen = true;
    CHECK(separation_seen);
    CHECK(detect_l9_direct(*lat).found());
}

TEST_CASE("the faithful quaternion action inverts through its involution") {
    GroupTable g = build_builtin("Q8_on_C3sq");
    auto lat = lattice_for(g);
    SubgroupSet p = sylow_subgroups(*lat, 3).front();
    SubgroupSet q = sylow_subgroups(*lat, 2).front();
    SubgroupSet inv = omega1(g, q, 2);
    REQUIRE(inv.order() == 2);
    // the unique involution inverts every element of the order-9 part
    int t = inv.members[1];
    for (Elt x : p.members) CHECK(g.conj(x, t) == g.inv(x));
    // order-4 subgroups act irreducibly
    for (int i : lat->nodes_within(q)) {
        const SubgroupSet& u = lat->nodes[static_cast<std::size_t>(i)];
        if (u.order() != 4) continue;
        bool invariant_line = false;
        for (int pi : lat->nodes_within(p)) {
            const SubgroupSet& w2 = lat->nodes[static_cast<std::size_t>(pi)];
            if (w2.order() != 3) continue;
            bool inv_line = true;
            for (Elt a : u.members)
                for (Elt x : w2.members)
                    if (!w2.contains(g.conj(x, a))) inv_line = false;
            if (inv_line) invariant_line = true;
        }
        CHECK(!invariant_line);
    }
}

TEST_CASE("report and membership agree on the symmetric group of order 24") {
    GroupTable g = build_builtin("S4");
    ClassLWitness w = decomposition_report(g);
    CHECK(!w.in_class);
    for (const auto& c : w.candidates) CHECK(!c.passed);
    CHECK(detect_l9_direct(*lattice_for(g)).found());
}

TEST_CASE("witness re-check rejects corrupted data") {
    GroupTable g = build_builtin("A4");
    ClassLWitness w = class_l_membership(g);
    REQUIRE(w.in_class);
    InClassWitness bad = *w.witness;
    std::swap(bad.n, bad.k);
    CHECK(!recheck_witness(*lattice_for(g), bad).empty());

    InClassWitness bad2 = *w.witness;
    bad2.certificates[0].type = AvoidType::Cent;
    CHECK(!recheck_witness(*lattice_for(g), bad2).empty());
}

TEST_CASE("two-dimensional irreducible action of a non-nilpotent batten") {
    // C11^2 acted on by the dicyclic group of order 12: the heart and the
    // tops act irreducibly, the center by inversion
    GroupTable n = from_generators(
        22, {Perm::parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 22),
             Perm::parse_cycles("(12 13 14 15 16 17 18 19 20 21 22)", 22)},
        "C11xC11", GroupCaps{200});
    int e1 = -1, e2 = -1;
    Perm p1 = Perm::parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 22);
    Perm p2 = Perm::parse_cycles("(12 13 14 15 16 17 18 19 20 21 22)", 22);
    for (int i = 0; i < n.order; ++i) {
        if (n.perms[static_cast<std::size_t>(i)] == p1) e1 = i;
        if (n.perms[static_cast<std::size_t>(i)] == p2) e2 = i;
    }
    REQUIRE(e1 >= 0);
    REQUIRE(e2 >= 0);
    auto act = [&](const std::vector<int>& mat) {
        std::vector<int> img(static_cast<std::size_t>(n.order));
        for (int u = 0; u < 11; ++u)
            for (int v = 0; v < 11; ++v) {
                int x = n.mul(n.pow(e1, u), n.pow(e2, v));
                int uu = (mat[0] * u + mat[1] * v) % 11;
                int vv = (mat[2] * u + mat[3] * v) % 11;
                img[static_cast<std::size_t>(x)] = n.mul(n.pow(e1, uu), n.pow(e2, vv));
            }
        return Perm(img);
    };
    // order 3: x -> -y, y -> x - y (characteristic polynomial irreducible mod 11)
    // order 4: found by conjugating the order-3 matrix to its inverse, square = -1
    std::vector<int> m3{0, 10, 1, 10};
    // search a compatible order-4 matrix
    std::vector<int> m4;
    for (int a = 0; a < 11 && m4.empty(); ++a)
        for (int b = 0; b < 11 && m4.empty(); ++b)
            for (int c = 0; c < 11 && m4.empty(); ++c)
                for (int d = 0; d < 11 && m4.empty(); ++d) {
                    // u^2 = -I
                    int t00 = (a * a + b * c) % 11, t01 = (a * b + b * d) % 11;
                    int t10 = (c * a + d * c) % 11, t11 = (c * b + d * d) % 11;
                    if (t00 != 10 || t01 != 0 || t10 != 0 || t11 != 10) continue;
                    // u^-1 m3 u = m3^-1 i.e. m3 u = u m3^-1; m3^-1 = {10,1,10,0}
                    int l00 = (0 * a + 10 * c) % 11, l01 = (0 * b + 10 * d) % 11;
                    int l10 = (1 * a + 10 * c) % 11, l11 = (1 * b + 10 * d) % 11;
                    int r00 = (a * 10 + b * 10) % 11, r01 = (a * 1 + b * 0) % 11;
                    int r10 = (c * 10 + d * 10) % 11, r11 = (c * 1 + d * 0) % 11;
                    if (l00 == r00 && l01 == r01 && l10 == r10 && l11 == r11)
                        m4 = {a, b, c, d};
                }
    REQUIRE(!m4.empty());
    GroupTable dic3 = dicyclic_group(3, "Dic3");
    ActionSpec spec;
    spec.acting = &dic3;
    spec.target = &n;
    // generator a of order 6 acts as -m3 (order 6), b as the order-4 matrix
    std::vector<int> m6{(11 - m3[0]) % 11, (11 - m3[1]) % 11, (11 - m3[2]) % 11,
                        (11 - m3[3]) % 11};
    spec.generator_elements = {2, 1};
    spec.images = {act(m6), act(m4)};
    GroupTable g = semidirect_product(spec, "C11sq_by_Dic3", GroupCaps{1452});
    CHECK(g.order == 1452);

    auto lat = lattice_for(g);
    ClassLWitness w = class_l_membership(*lat);
    REQUIRE(w.in_class);
    CHECK(w.witness->n.order() == 121);
    CHECK(w.witness->k.order() == 12);
    REQUIRE(w.witness->certificates.size() == 1);
    CHECK(w.witness->certificates[0].type == AvoidType::NN);
    CHECK(recheck_witness(*lat, *w.witness).empty());
}
