#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locwalk/lyapunov.hpp"
#include "locwalk/parallel.hpp"
#include "locwalk/walk.hpp"

using namespace locwalk;

// Every ensemble driver fills per-realization slots and reduces in index
// order, so the serial path (threads = 1) and the OpenMP path must agree
// bit for bit.

TEST_CASE("localization profile: serial and parallel runs are bit-identical") {
    const std::vector<long long> distances{2, 5, 9};
    const LocalizationProfile serial =
        localization_profile(CoinDistribution::haar(), distances, 40, 24, 7, /*threads=*/1);
    const LocalizationProfile parallel =
        localization_profile(CoinDistribution::haar(), distances, 40, 24, 7, /*threads=*/4);
    for (size_t k = 0; k < distances.size(); ++k) {
        CHECK(serial.mean_sup_amplitude[k] == parallel.mean_sup_amplitude[k]);
        CHECK(serial.stderr_[k] == parallel.stderr_[k]);
    }
}

TEST_CASE("lyapunov estimate: serial and parallel runs are bit-identical") {
    const cplx z = std::polar(1.0, 0.8);
    const LyapunovEstimate serial =
        estimate_lyapunov(CoinDistribution::haar(), z, 2000, 16, 5, /*threads=*/1);
    const LyapunovEstimate parallel =
        estimate_lyapunov(CoinDistribution::haar(), z, 2000, 16, 5, /*threads=*/4);
    CHECK(serial.gamma_hat == parallel.gamma_hat);
    CHECK(serial.stderr_ == parallel.stderr_);
}

TEST_CASE("density of states: serial and parallel runs are bit-identical") {
    const DOSHistogram serial =
        density_of_states(CoinDistribution::haar(), 24, 8, 64, 11, /*threads=*/1);
    const DOSHistogram parallel =
        density_of_states(CoinDistribution::haar(), 24, 8, 64, 11, /*threads=*/4);
    for (size_t b = 0; b < serial.masses.size(); ++b) {
        CHECK(serial.masses[b] == parallel.masses[b]);
        CHECK(serial.stderr_[b] == parallel.stderr_[b]);
    }
}

TEST_CASE("effective_threads resolves requests") {
    CHECK(effective_threads(3) == 3);
    CHECK(effective_threads(0) >= 1);
}
