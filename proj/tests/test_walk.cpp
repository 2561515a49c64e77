#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <map>

#include "locwalk/errors.hpp"
#include "locwalk/restriction.hpp"
#include "locwalk/walk.hpp"

using namespace locwalk;

namespace {

/// Embeds a walk state into the f-index coordinates of a finite restriction.
Eigen::VectorXcd embed(const FiniteWalk& fw, const WalkState& st) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(fw.dim());
    for (long long x = st.x_min; x <= st.x_max(); ++x)
        for (int spin : {spin_minus, spin_plus}) {
            const long long f = f_index(x, spin);
            if (fw.holds_f(f)) v[fw.index_of(f)] = st.amplitude_at(x, spin);
        }
    return v;
}

}  // namespace

TEST_CASE("identity coins produce deterministic transport") {
    DisorderRealization r(CoinDistribution::fixed(UnitaryCoin::identity()), 1);
    WalkState st = localized_state(0, spin_plus);
    CoinWindow coins(r);
    for (int t = 0; t < 7; ++t) step_inplace(st, coins);
    CHECK(std::abs(st.amplitude_at(7, spin_plus) - cplx(1.0)) < 1e-14);
    CHECK(variance(st) == doctest::Approx(0.0));

    WalkState down = localized_state(0, spin_minus);
    for (int t = 0; t < 5; ++t) step_inplace(down, coins);
    CHECK(std::abs(down.amplitude_at(-5, spin_minus) - cplx(1.0)) < 1e-14);
}

TEST_CASE("norm is preserved over long Haar evolutions") {
    DisorderRealization r(CoinDistribution::haar(), 21);
    WalkState st = localized_state(0, spin_plus);
    CoinWindow coins(r);
    for (int t = 0; t < 1000; ++t) step_inplace(st, coins);
    CHECK(std::abs(st.norm() - 1.0) < 1e-9);
}

TEST_CASE("one step against the dense finite restriction") {
    DisorderRealization r(CoinDistribution::fixed(UnitaryCoin::hadamard()), 1);
    const FiniteWalk fw = build_finite_walk(r, 4);
    WalkState st = localized_state(0, spin_plus);
    const Eigen::VectorXcd before = embed(fw, st);
    CoinWindow coins(r);
    step_inplace(st, coins);
    const Eigen::VectorXcd expected = fw.matrix() * before;
    const Eigen::VectorXcd after = embed(fw, st);
    CHECK((expected - after).norm() < 1e-12);
}

TEST_CASE("windowed evolution equals dense W(N)^t inside the light cone") {
    DisorderRealization r(CoinDistribution::haar(), 33);
    const int N = 12;
    const FiniteWalk fw = build_finite_walk(r, N);
    WalkState st = localized_state(0, spin_plus);
    Eigen::VectorXcd dense = embed(fw, st);
    CoinWindow coins(r);
    for (int t = 1; t <= N / 2; ++t) {
        step_inplace(st, coins);
        dense = fw.matrix() * dense;
        CHECK((dense - embed(fw, st)).norm() < 1e-10);
    }
}

TEST_CASE("amplitude: time zero, light cone zero, unitarity") {
    DisorderRealization r(CoinDistribution::haar(), 5);
    CHECK(amplitude(r, 2, spin_minus, 2, spin_minus, 0) == cplx(1.0));
    CHECK(amplitude(r, 2, spin_minus, 2, spin_plus, 0) == cplx(0.0));
    CHECK(amplitude(r, 0, spin_plus, 6, spin_plus, 5) == cplx(0.0));   // beyond cone, exact
    CHECK(amplitude(r, 0, spin_plus, -8, spin_minus, 7) == cplx(0.0));
}

TEST_CASE("sup_amplitude: ballistic transit and horizon check") {
    DisorderRealization r(CoinDistribution::fixed(UnitaryCoin::identity()), 1);
    CHECK(sup_amplitude(r, 0, spin_plus, 3, spin_plus, 5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(sup_amplitude(r, 0, spin_plus, 9, spin_plus, 5),
                    InsufficientHorizonError);
}

TEST_CASE("a flip next door blocks transmission exactly") {
    DisorderRealization r(CoinDistribution::haar(), 14,
                          std::map<long long, UnitaryCoin>{{1, UnitaryCoin::flip(0.3)}});
    for (long long y : {2LL, 3LL, 5LL})
        for (int j : {spin_minus, spin_plus})
            CHECK(sup_amplitude(r, 0, spin_plus, y, j, 50) == 0.0);
    // the flip site itself is reachable, but only in the reflected component
    CHECK(sup_amplitude(r, 0, spin_plus, 1, spin_minus, 50) > 0.0);
    CHECK(sup_amplitude(r, 0, spin_plus, 1, spin_plus, 50) == 0.0);
}

TEST_CASE("flip pair confines all amplitude exactly") {
    DisorderRealization r(CoinDistribution::haar(), 15,
                          std::map<long long, UnitaryCoin>{{-4, UnitaryCoin::flip()},
                                                           {5, UnitaryCoin::flip(1.1)}});
    WalkState st = localized_state(0, spin_plus);
    CoinWindow coins(r);
    for (int t = 0; t < 300; ++t) {
        step_inplace(st, coins);
        for (long long x = st.x_min; x <= st.x_max(); ++x) {
            if (x >= -4 && x <= 5) continue;
            CHECK(st.amplitude_at(x, spin_minus) == cplx(0.0));
            CHECK(st.amplitude_at(x, spin_plus) == cplx(0.0));
        }
    }
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
}

TEST_CASE("variance: point mass zero, Hadamard walk is ballistic") {
    CHECK(variance(localized_state(0, spin_plus)) == 0.0);

    DisorderRealization r(CoinDistribution::fixed(UnitaryCoin::hadamard()), 1);
    WalkState st = localized_state(0, spin_plus);
    CoinWindow coins(r);
    double var_t = 0.0, var_2t = 0.0;
    for (int t = 1; t <= 400; ++t) {
        step_inplace(st, coins);
        if (t == 200) var_t = variance(st);
        if (t == 400) var_2t = variance(st);
    }
    const double ratio = var_2t / var_t;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.3);
}

TEST_CASE("localization profile: distance zero is exactly 1, flips kill distance >= 2") {
    const LocalizationProfile zero =
        localization_profile(CoinDistribution::haar(), {0}, 10, 3, 1);
    CHECK(zero.mean_sup_amplitude[0] == 1.0);

    const LocalizationProfile flipped = localization_profile(
        CoinDistribution::fixed(UnitaryCoin::flip()), {2, 3, 4}, 30, 5, 2);
    for (double v : flipped.mean_sup_amplitude) CHECK(v == 0.0);
}

TEST_CASE("localization profile: Haar disorder decays with distance") {
    const LocalizationProfile prof =
        localization_profile(CoinDistribution::haar(), {5, 10, 15}, 60, 100, 3);
    CHECK(prof.mean_sup_amplitude[0] > prof.mean_sup_amplitude[1]);
    CHECK(prof.mean_sup_amplitude[1] > prof.mean_sup_amplitude[2]);
    for (double se : prof.stderr_) CHECK(se >= 0.0);
    CHECK_THROWS_AS(localization_profile(CoinDistribution::haar(), {40}, 20, 2, 1),
                    InsufficientHorizonError);
}
