#include <doctest.h>

#include <stdexcept>

#include "qdg/discord.hpp"
#include "qdg/generators.hpp"
#include "qdg/oracle.hpp"

using namespace qdg;
using namespace qdg::oracle;

TEST_CASE("commutator_l1") {
    IntMatrix a(2, 2), b(2, 2);
    a << 2, 0, 0, 1;
    b << 1, 1, 1, 0;
    CHECK(commutator_l1(a, a) == 0);
    CHECK(commutator_l1(a, b) == 2);

    BinaryMatrix path3 = BinaryMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    BinaryMatrix corner3 = BinaryMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
    CHECK(commutator_l1(to_int_matrix(path3), to_int_matrix(corner3)) == 4);
    CHECK(commutator_l1(to_int_matrix(path3), to_int_matrix(corner3)) == nc3(path3, corner3));

    IntMatrix c(3, 3);
    c.setZero();
    CHECK_THROWS_AS(commutator_l1(a, c), std::invalid_argument);
}

TEST_CASE("normality_defect_l1") {
    BinaryMatrix sym = BinaryMatrix::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK(normality_defect_l1(to_int_matrix(sym)) == 0);

    CHECK(normality_defect_l1(to_int_matrix(BinaryMatrix::from_rows({{0, 0}, {1, 0}}))) == 2);

    BinaryMatrix perm = BinaryMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(normality_defect_l1(to_int_matrix(perm)) == 0);
}

TEST_CASE("diagonal_block assembles D_mu + s*A_mm") {
    auto [g, lab] = gen::separable_two_qubit();
    BlockDecomposition d = block_decompose(g, lab);
    IntMatrix b1 = diagonal_block(d, 1, Sign::laplacian);
    CHECK(b1(0, 0) == 2);
    CHECK(b1(1, 1) == 1);
    CHECK(b1(0, 1) == 0);

    auto k4 = gen::complete_graph(2, 2);
    BlockDecomposition dk = block_decompose(k4.graph, k4.labeling);
    IntMatrix bq = diagonal_block(dk, 1, Sign::signless);
    CHECK(bq(0, 0) == 3);
    CHECK(bq(0, 1) == 1);
    IntMatrix bl = diagonal_block(dk, 1, Sign::laplacian);
    CHECK(bl(0, 1) == -1);
}

TEST_CASE("check_block_conditions") {
    auto k4 = gen::complete_graph(2, 2);
    BlockConditions c = check_block_conditions(block_decompose(k4.graph, k4.labeling), Sign::laplacian);
    CHECK(c.prop1);
    CHECK(c.prop2);
    CHECK(c.prop3);
    CHECK(c.prop4);
    CHECK(c.prop5);
    CHECK(c.all());

    auto w3 = gen::werner_graph(3);
    BlockConditions cw = check_block_conditions(block_decompose(w3.graph, w3.labeling), Sign::laplacian);
    CHECK(cw.prop1);
    CHECK_FALSE(cw.prop2);

    auto final4 = gen::separable_two_qubit();
    BlockConditions cf =
        check_block_conditions(block_decompose(final4.graph, final4.labeling), Sign::laplacian);
    CHECK(cf.prop1);
    CHECK_FALSE(cf.prop4);
    CHECK_FALSE(cf.all());

    // prop1 holds identically.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto [g, lab] = gen::random_graph(3, 2, 0.5, 500 + seed);
        for (Sign s : {Sign::laplacian, Sign::signless})
            CHECK(check_block_conditions(block_decompose(g, lab), s).prop1);
    }
}

TEST_CASE("zero discord iff all five block conditions hold") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto [g, lab] = gen::random_graph(2, 3, 0.4, 900 + seed);
        if (g.total_degree() == 0) continue;
        BlockDecomposition d = block_decompose(g, lab);
        for (Sign s : {Sign::laplacian, Sign::signless})
            CHECK(is_zero_discord(g, lab, s) == check_block_conditions(d, s).all());
    }
}

TEST_CASE("validate_density") {
    auto [g, lab] = gen::complete_bipartite(3);
    BlockDecomposition d = block_decompose(g, lab);
    for (Sign s : {Sign::laplacian, Sign::signless}) {
        auto check = validate_density(density_matrix(d, s), 1e-9);
        CHECK(check.ok);
        CHECK(check.reason == "ok");
        CHECK(check.min_eigenvalue >= -1e-9);
    }

    DensityMatrix bad_trace;
    bad_trace.order = 2;
    bad_trace.denominator = 10;
    bad_trace.numerators = {5, 0, 0, 4}; // trace 9/10
    CHECK_FALSE(validate_density(bad_trace).ok);
    CHECK(validate_density(bad_trace).reason == "trace_not_one");

    DensityMatrix asym;
    asym.order = 2;
    asym.denominator = 2;
    asym.numerators = {1, 1, 0, 1};
    CHECK(validate_density(asym).reason == "not_symmetric");

    DensityMatrix indefinite;
    indefinite.order = 2;
    indefinite.denominator = 2;
    indefinite.numerators = {1, 2, 2, 1}; // eigenvalues 3/2, -1/2
    CHECK(validate_density(indefinite).reason == "not_psd");
    CHECK(validate_density(indefinite).min_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("exhaustive_equivalence: exhaustive orders") {
    auto s1 = exhaustive_equivalence(1);
    CHECK(s1.mismatches == 0);
    CHECK(s1.mode == "exhaustive");
    CHECK(s1.per_order.size() == 1);
    CHECK(s1.per_order[0].matrices == 2);

    auto s2 = exhaustive_equivalence(2);
    CHECK(s2.mismatches == 0);
    CHECK(s2.per_order.size() == 2);
    CHECK(s2.per_order[1].matrices == 16);
    CHECK(s2.per_order[1].nc1_checked == 256); // all ordered pairs
    CHECK(s2.per_order[1].nn_checked == 16);

    auto s3 = exhaustive_equivalence(3);
    CHECK(s3.mismatches == 0);
    CHECK(s3.per_order[2].matrices == 512);
    CHECK(s3.per_order[2].nc1_checked == 512LL * 512);

    CHECK_THROWS_AS(exhaustive_equivalence(0), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_equivalence(11), std::invalid_argument);
}

TEST_CASE("exhaustive_equivalence: sampled orders are seeded and clean") {
    auto s = exhaustive_equivalence(5, 300, 777);
    CHECK(s.mode == "sampled");
    CHECK(s.seed == 777);
    CHECK(s.mismatches == 0);
    CHECK(s.per_order.size() == 5);
    CHECK_FALSE(s.per_order[3].exhaustive);
    CHECK(s.per_order[3].nc1_checked == 300);

    auto again = exhaustive_equivalence(5, 300, 777);
    CHECK(again.checked == s.checked);
}

TEST_CASE("random_graph_agreement") {
    auto s = random_graph_agreement(60, 2, 3, 13);
    CHECK(s.mismatches == 0);
    CHECK(s.checked > 0);
}
