#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdg/discord.hpp"
#include "qdg/entropy.hpp"
#include "qdg/errors.hpp"
#include "qdg/generators.hpp"
#include "qdg/oracle.hpp"

using namespace qdg;
using oracle::EntropyReport;
using oracle::fixed_basis_discord;

namespace {

EntropyReport report_of(const LabeledGraph& lg, Sign s) {
    BlockDecomposition d = block_decompose(lg.graph, lg.labeling);
    return fixed_basis_discord(density_matrix(d, s), lg.labeling.m(), lg.labeling.n());
}

} // namespace

TEST_CASE("pointer state: matching between clusters has zero fixed-basis discord") {
    // Edges (v11,v21), (v12,v22): every block is diagonal, so the state is a
    // pointer state in the computational basis.
    LabeledGraph lg{build_graph(4, {{1, 3}, {2, 4}}), ClusterLabeling::natural(2, 2)};
    for (Sign s : {Sign::laplacian, Sign::signless}) {
        EntropyReport r = report_of(lg, s);
        CHECK(std::abs(r.discord_fixed_basis) < 1e-12);
        CHECK(r.s_rho == doctest::Approx(1.0));
        CHECK(r.s_rho_b == doctest::Approx(1.0));
        CHECK(r.conditional == doctest::Approx(0.0));
    }
}

TEST_CASE("separable_two_qubit: positive fixed-basis discord, frozen value") {
    EntropyReport r = report_of(gen::separable_two_qubit(), Sign::laplacian);
    CHECK(r.discord_fixed_basis == doctest::Approx(0.4736013918441846).epsilon(1e-9));
    CHECK(r.s_rho == doctest::Approx(1.3188798585163934).epsilon(1e-9));
    CHECK(r.s_rho_b == doctest::Approx(0.9182958340544896).epsilon(1e-9));
    CHECK(r.conditional == doctest::Approx(0.8741854163060885).epsilon(1e-9));
    CHECK(r.discord_fixed_basis > 1e-3);
}

TEST_CASE("zero-QD states need not have zero discord in the computational basis") {
    // The block criterion guarantees a pointer basis exists, but it is the
    // blocks' common eigenbasis, not necessarily the computational one.
    // K4 and K_{2,2} are zero-QD yet their pointer basis is the Hadamard-type
    // eigenbasis of J; values frozen from an independent numerical oracle.
    auto k4 = gen::complete_graph(2, 2);
    CHECK(is_zero_discord(k4.graph, k4.labeling, Sign::laplacian));
    EntropyReport rk4 = report_of(k4, Sign::laplacian);
    CHECK(rk4.discord_fixed_basis == doctest::Approx(0.25162916738782304).epsilon(1e-9));

    auto k22 = gen::complete_bipartite(2);
    CHECK(is_zero_discord(k22.graph, k22.labeling, Sign::signless));
    EntropyReport rk22 = report_of(k22, Sign::signless);
    CHECK(rk22.discord_fixed_basis == doctest::Approx(0.31127812445913283).epsilon(1e-9));
}

TEST_CASE("positive QD implies positive fixed-basis discord") {
    // A state with zero discord in the computational basis has diagonal
    // blocks, which satisfy every block condition; contrapositive tested on
    // random instances and the certified discordant families.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto [g, lab] = gen::random_graph(2, 3, 0.5, 2400 + seed);
        if (g.total_degree() == 0) continue;
        for (Sign s : {Sign::laplacian, Sign::signless}) {
            if (qd(g, lab, s).qd_total == 0) continue;
            BlockDecomposition d = block_decompose(g, lab);
            EntropyReport r = fixed_basis_discord(density_matrix(d, s), lab.m(), lab.n());
            CHECK(r.discord_fixed_basis > 1e-12);
        }
    }
    EntropyReport tw = report_of(gen::k33_twisted(), Sign::laplacian);
    CHECK(tw.discord_fixed_basis > 1e-3);
}

TEST_CASE("entropy sanity bounds on random states") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto [g, lab] = gen::random_graph(2, 4, 0.55, 3100 + seed);
        if (g.total_degree() == 0) continue;
        BlockDecomposition d = block_decompose(g, lab);
        for (Sign s : {Sign::laplacian, Sign::signless}) {
            EntropyReport r = fixed_basis_discord(density_matrix(d, s), 2, 4);
            CHECK(r.s_rho <= std::log2(8.0) + 1e-9);
            CHECK(r.s_rho_b <= std::log2(4.0) + 1e-9);
            CHECK(r.conditional >= -1e-12);
            CHECK(r.discord_fixed_basis >= -1e-9);
        }
    }
}

TEST_CASE("dimension and validity errors") {
    auto [g, lab] = gen::complete_bipartite(2);
    DensityMatrix rho = density_matrix(block_decompose(g, lab), Sign::laplacian);
    CHECK_THROWS_AS(fixed_basis_discord(rho, 2, 3), DimensionError);
    CHECK_THROWS_AS(fixed_basis_discord(rho, 4, 1), DimensionError);

    DensityMatrix bogus;
    bogus.order = 2;
    bogus.denominator = 10;
    bogus.numerators = {5, 0, 0, 4};
    CHECK_THROWS_AS(fixed_basis_discord(bogus, 2, 1), std::invalid_argument);
}

TEST_CASE("measurement skips zero-probability slots") {
    // Single edge (v11, v21): slot 2 of both clusters is isolated, so p_2 = 0
    // and the slot must be skipped without producing NaNs. The state itself
    // is the pure product ((|1>-|2>)/sqrt(2)) (x) |1>, so everything is 0.
    Graph g = build_graph(4, {{1, 3}});
    BlockDecomposition d = block_decompose(g, ClusterLabeling::natural(2, 2));
    DensityMatrix rho = density_matrix(d, Sign::laplacian);
    EntropyReport r = fixed_basis_discord(rho, 2, 2);
    CHECK(std::isfinite(r.conditional));
    CHECK(std::isfinite(r.discord_fixed_basis));
    CHECK(r.s_rho == doctest::Approx(0.0));
    CHECK(r.s_rho_b == doctest::Approx(0.0));
    CHECK(r.conditional == doctest::Approx(0.0));
    CHECK(std::abs(r.discord_fixed_basis) < 1e-12);
}
