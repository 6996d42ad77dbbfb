#include <doctest.h>

#include "latsieve/catalog.hpp"
#include "latsieve/model.hpp"

using namespace latsieve;

namespace {

// The order-649800 construction: scalars on F19^2, genuine 2x2 action on F5^2.
CoprimeActionSystem reference_system() {
    CoprimeActionSystem sys;
    sys.name = "reference";
    sys.num_generators = 2;
    ModelBlock h;
    h.tag = 'H';
    h.p = 19;
    h.dim = 2;
    h.gen_matrices = {{18, 0, 0, 18}, {4, 0, 0, 4}};
    ModelBlock j;
    j.tag = 'J';
    j.p = 5;
    j.dim = 2;
    j.gen_matrices = {{0, 3, 1, 0}, {2, 3, 1, 2}};
    sys.blocks = {h, j};
    return sys;
}

}  // namespace

TEST_CASE("the reference system violates the surplus condition with pi = {3}") {
    ModelOutcome out = surplus_model(reference_system());
    REQUIRE(out.kind == ModelOutcome::Kind::Violation);
    REQUIRE(out.violation.has_value());
    CHECK(out.violation->pi == std::vector<int>{3});
    CHECK(out.violation->l_order == 72);
    CHECK(out.violation->c_l_j_order == 3);
    CHECK(out.violation->c_l_j_fixed_point_free);
    CHECK(out.violation->fixed_dim_o_pi == 0);
    CHECK(out.violation->fixed_dim_o_pi_prime == 0);
}

TEST_CASE("trivial action on the scalar part breaks the prime-set hypothesis") {
    CoprimeActionSystem sys = reference_system();
    sys.blocks[0].gen_matrices[1] = {1, 0, 0, 1};  // second generator fixes H
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind == ModelOutcome::Kind::HypothesisUnmet);
    CHECK(out.detail.find("pi(L)") != std::string::npos);
}

TEST_CASE("prime-power acting groups never violate") {
    // only the order-8 generator: pi or its complement is empty
    CoprimeActionSystem sys = reference_system();
    sys.num_generators = 1;
    sys.blocks[0].gen_matrices = {{18, 0, 0, 18}};
    sys.blocks[1].gen_matrices = {{0, 3, 1, 0}};
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind != ModelOutcome::Kind::Violation);
}

TEST_CASE("non-scalar action on an H block is rejected") {
    CoprimeActionSystem sys = reference_system();
    sys.blocks[0].gen_matrices[0] = {0, 18, 1, 0};
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind == ModelOutcome::Kind::HypothesisUnmet);
    CHECK(out.detail.find("power automorphisms") != std::string::npos);
}

TEST_CASE("one-dimensional H blocks are rejected as cyclic") {
    CoprimeActionSystem sys = reference_system();
    sys.blocks[0].dim = 1;
    sys.blocks[0].gen_matrices = {{18}, {4}};
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind == ModelOutcome::Kind::HypothesisUnmet);
}

TEST_CASE("singular matrices and clashing primes raise parse-level errors") {
    CoprimeActionSystem sys = reference_system();
    sys.blocks[0].gen_matrices[0] = {0, 0, 0, 0};
    CHECK_THROWS_AS(surplus_model(sys), Error);

    CoprimeActionSystem sys2 = reference_system();
    sys2.blocks[1].p = 19;
    CHECK_THROWS_AS(surplus_model(sys2), Error);

    CoprimeActionSystem sys3 = reference_system();
    sys3.blocks[1].gen_matrices[0] = {1, 0, 0, 1};
    sys3.blocks[1].gen_matrices[1] = {1, 0, 0, 1};
    // J block now carries a trivial action
    ModelOutcome out = surplus_model(sys3);
    CHECK(out.kind == ModelOutcome::Kind::HypothesisUnmet);
}

TEST_CASE("generators of coinciding prime orders are rejected") {
    CoprimeActionSystem sys = reference_system();
    // both generators of order 8 on J and scalar on H
    sys.blocks[0].gen_matrices = {{18, 0, 0, 18}, {18, 0, 0, 18}};
    sys.blocks[1].gen_matrices = {{0, 3, 1, 0}, {0, 3, 1, 0}};
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind == ModelOutcome::Kind::HypothesisUnmet);
    CHECK(out.detail.find("cyclic") != std::string::npos);
}

TEST_CASE("the builtin model text parses to the reference system") {
    GroupFile f = parse_group_file(builtin_model_text());
    REQUIRE(f.model.has_value());
    CHECK(f.model->num_generators == 2);
    REQUIRE(f.model->blocks.size() == 2);
    CHECK(f.model->blocks[0].tag == 'H');
    CHECK(f.model->blocks[0].p == 19);
    CHECK(f.model->blocks[1].tag == 'J');
    CHECK(f.model->blocks[1].p == 5);
    ModelOutcome out = surplus_model(*f.model);
    CHECK(out.kind == ModelOutcome::Kind::Violation);
}

TEST_CASE("a holding variant: the order-9 part centralizes J") {
    // with the second generator trivial on J, the order-9 part of L fixes all
    // of J, so a non-trivial element of J centralizes it and the condition holds
    CoprimeActionSystem sys = reference_system();
    sys.blocks[1].gen_matrices[1] = {1, 0, 0, 1};
    ModelOutcome out = surplus_model(sys);
    CHECK(out.kind == ModelOutcome::Kind::Holds);
}
