#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "locwalk/errors.hpp"
#include "locwalk/groupcheck.hpp"
#include "locwalk/transfer.hpp"
#include "support.hpp"

using namespace locwalk;

namespace {

UnitaryCoin second_coin(cplx a, cplx b) { return {a, b, -std::conj(b), std::conj(a)}; }

CoinDistribution two_coin_set(cplx a, cplx b) {
    return CoinDistribution::discrete(
        {{UnitaryCoin::hadamard(), 0.5}, {second_coin(a, b), 0.5}});
}

std::array<double, 2> eig_moduli_oracle(const Mat2& m) {
    Eigen::Matrix2cd e;
    e << m.m00, m.m01, m.m10, m.m11;
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(e, false);
    std::array<double, 2> out{std::abs(solver.eigenvalues()[0]),
                              std::abs(solver.eigenvalues()[1])};
    if (out[0] < out[1]) std::swap(out[0], out[1]);
    return out;
}

}  // namespace

TEST_CASE("two-coin closed form against the eigensolver, hyperbolic and elliptic") {
    RngStream s(900);
    int hyperbolic = 0, elliptic = 0;
    while (hyperbolic < 200 || elliptic < 200) {
        const double am = 0.05 + 0.9 * s.next_double();
        const cplx a = std::polar(am, s.next_double() * 2 * M_PI);
        const cplx b = std::polar(std::sqrt(1.0 - am * am), s.next_double() * 2 * M_PI);
        const bool hyp = std::abs(a) < std::abs(b.imag());
        if (hyp && hyperbolic >= 200) continue;
        if (!hyp && elliptic >= 200) continue;
        (hyp ? hyperbolic : elliptic) += 1;

        const cplx z = std::polar(1.0, s.next_double() * 2 * M_PI);
        const Mat2 w =
            tau(UnitaryCoin::hadamard(), z).m * tau(second_coin(a, b), z).m.inverse();
        const auto oracle = eig_moduli_oracle(w);
        const auto closed = two_coin_closed_form(a, b);
        CHECK(std::abs(closed[0] - oracle[0]) < 1e-10);
        CHECK(std::abs(closed[1] - oracle[1]) < 1e-10);
        if (hyp) {
            CHECK(closed[0] > 1.0);
        } else {
            CHECK(closed[0] == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(closed[1] == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    CHECK_THROWS(two_coin_closed_form(cplx(0.5, 0.0), cplx(0.5, 0.0)));  // not unit norm
}

TEST_CASE("two-coin closed form at the spec sample point") {
    const cplx a = 0.3;
    const cplx b = cplx(0.0, std::sqrt(1.0 - 0.09));
    const auto lambdas = two_coin_closed_form(a, b);
    CHECK(lambdas[0] > 1.0);
    const cplx z = std::polar(1.0, 1.3);
    const Mat2 w = tau(UnitaryCoin::hadamard(), z).m * tau(second_coin(a, b), z).m.inverse();
    const auto oracle = eig_moduli_oracle(w);
    CHECK(std::abs(lambdas[0] - oracle[0]) < 1e-10);
}

TEST_CASE("noncompactness: two-coin certificate found and re-verifiable") {
    const cplx a = 0.3;
    const cplx b = cplx(0.0, std::sqrt(1.0 - 0.09));
    const CoinDistribution mu = two_coin_set(a, b);
    for (double phase : {0.2, 2.7}) {
        const cplx z = std::polar(1.0, phase);
        const auto cert = noncompactness_search(mu, z, 6, 500, 1);
        REQUIRE(cert.has_value());
        CHECK(cert->spectral_radius > 1.0 + 1e-9);
        CHECK(verify_certificate(*cert, z) == doctest::Approx(cert->spectral_radius).epsilon(1e-9));
        // breadth-first order: the certificate is a genuine expansion, though
        // not necessarily the largest short word
        CHECK(cert->word.size() <= 2);
    }
}

TEST_CASE("noncompactness: Haar pair certificate at every grid point") {
    for (int k = 0; k < 32; ++k) {
        const cplx z = std::polar(1.0, 2 * M_PI * k / 32.0);
        const auto cert = noncompactness_search(CoinDistribution::haar(), z, 4, 100, 2);
        REQUIRE(cert.has_value());
        CHECK(cert->spectral_radius > 1.0 + 1e-9);
        CHECK(verify_certificate(*cert, z) ==
              doctest::Approx(cert->spectral_radius).epsilon(1e-9));
        CHECK(cert->word.size() == 2);
    }
}

TEST_CASE("noncompactness: single elliptic coin stays inconclusive") {
    // Hadamard inside its band: the generated group is a bounded power orbit
    const cplx z = std::polar(1.0, 0.3);
    const Mat2 t = tau(UnitaryCoin::hadamard(), z).m;
    // bounded-powers oracle: all powers up to 2^12 stay bounded
    Mat2 p = Mat2::identity();
    double worst = 0.0;
    for (int k = 0; k < 4096; ++k) {
        p = t * p;
        worst = std::max(worst, mat2_norm(p));
    }
    CHECK(worst < 50.0);
    const auto cert = noncompactness_search(
        CoinDistribution::fixed(UnitaryCoin::hadamard()), z, 6, 2000, 3);
    CHECK(!cert.has_value());
}

TEST_CASE("flip weight rejected in searches") {
    const CoinDistribution bad = CoinDistribution::discrete(
        {{UnitaryCoin::flip(), 0.2}, {UnitaryCoin::hadamard(), 0.8}});
    CHECK_THROWS_AS(noncompactness_search(bad, 1.0, 4, 10, 1), FlipEncounteredError);
    CHECK_THROWS_AS(irreducibility_orbit_test(bad, 1.0, 10, 1), FlipEncounteredError);
}

TEST_CASE("irreducibility: Haar witness at every grid point") {
    for (int k = 0; k < 32; ++k) {
        const cplx z = std::polar(1.0, 2 * M_PI * k / 32.0);
        const IrreducibilityResult res =
            irreducibility_orbit_test(CoinDistribution::haar(), z, 64, 4);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->min_pairwise_delta >= 1e-6);
        // witness points are pairwise distinct
        const auto& pts = res.witness->points;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(projective_distance(pts[static_cast<size_t>(i)],
                                          pts[static_cast<size_t>(j)]) >= 1e-6);
    }
}

TEST_CASE("irreducibility: two-coin set yields a witness and an exceptional-z proximity") {
    const cplx a = 0.3;
    const cplx b = cplx(0.0, std::sqrt(1.0 - 0.09));
    const IrreducibilityResult res =
        irreducibility_orbit_test(two_coin_set(a, b), std::polar(1.0, 0.9), 64, 5);
    REQUIRE(res.witness.has_value());
    CHECK(std::isfinite(res.exceptional_proximity));
    CHECK(res.exceptional_proximity >= 0.0);
}

TEST_CASE("irreducibility: single coin is inconclusive at its eigenvector starts") {
    const IrreducibilityResult res = irreducibility_orbit_test(
        CoinDistribution::fixed(UnitaryCoin::hadamard()), std::polar(1.0, 0.3), 64, 6);
    CHECK(!res.witness.has_value());
}

TEST_CASE("zeta integrability: discrete exact sums") {
    const CoinDistribution mu = two_coin_set(0.3, cplx(0.0, std::sqrt(1.0 - 0.09)));
    for (double zeta : {0.5, 1.0, 3.0}) {
        const ZetaResult res = zeta_integrability(mu, zeta);
        CHECK(res.finite);
        // ‖τ(U)‖ = (1 + |c|)/|a| exactly for each atom
        const double h = std::pow((1 + 1 / std::sqrt(2.0)) / (1 / std::sqrt(2.0)), zeta);
        const double x = std::pow((1 + std::sqrt(1.0 - 0.09)) / 0.3, zeta);
        CHECK(res.value == doctest::Approx(0.5 * h + 0.5 * x).epsilon(1e-12));
    }
    const CoinDistribution flips = CoinDistribution::fixed(UnitaryCoin::flip());
    CHECK(!zeta_integrability(flips, 0.5).finite);
}

TEST_CASE("zeta integrability: Haar finite below 1, divergent at 1 and above") {
    const ZetaResult half = zeta_integrability(CoinDistribution::haar(), 0.5);
    REQUIRE(half.finite);

    // Monte Carlo cross-check of the bound integral (θ uniform on [0, π])
    RngStream s(77);
    double acc = 0.0;
    const int n = 1000000;
    for (int k = 0; k < n; ++k)
        acc += std::pow(2.0 / std::sin(M_PI * s.next_double_pos()), 0.5);
    const double mc = acc / n;
    CHECK(std::abs(half.value - mc) / mc < 0.01);

    CHECK(!zeta_integrability(CoinDistribution::haar(), 1.0).finite);
    CHECK(!zeta_integrability(CoinDistribution::haar(), 1.5).finite);
    CHECK(zeta_integrability(CoinDistribution::haar(), 0.9).finite);

    // mixture: finite iff every component is finite
    const CoinDistribution mix = CoinDistribution::mixture(
        {{CoinDistribution::haar(), 0.5},
         {CoinDistribution::fixed(UnitaryCoin::hadamard()), 0.5}});
    CHECK(zeta_integrability(mix, 0.5).finite);
    CHECK(!zeta_integrability(mix, 1.2).finite);
}

TEST_CASE("hypothesis report aggregates all three verdicts") {
    const HypothesisReport rep =
        hypothesis_report(CoinDistribution::haar(), std::polar(1.0, 0.25), 0.5, 6, 64, 9);
    CHECK(rep.noncompact.has_value());
    CHECK(rep.irreducible.witness.has_value());
    CHECK(rep.zeta.finite);
    CHECK(rep.criterion == "projective-orbit(>2 points)");
}
