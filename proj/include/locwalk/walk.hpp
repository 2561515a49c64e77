#pragma once

#include <cstdint>
#include <vector>

#include "locwalk/coins.hpp"
#include "locwalk/findex.hpp"
#include "locwalk/mat2.hpp"

namespace locwalk {

/// State of the walk on a growing window. Amplitudes are stored two per site
/// (e_−, e_+); everything outside the window is exactly zero, which the
/// strict light cone guarantees for states started inside it.
struct WalkState {
    long long x_min = 0;
    long long time = 0;
    std::vector<cplx> amp;  // 2 * window length, [2*(x - x_min)] = e_−

    long long x_max() const { return x_min + static_cast<long long>(amp.size()) / 2 - 1; }
    cplx amplitude_at(long long site, int spin) const;
    double norm() const;
};

/// δ_{x0} ⊗ e_spin.
WalkState localized_state(long long x0, int spin);

/// One application of W = U·S; the window grows by one site on each side.
WalkState step(const WalkState& state, const DisorderRealization& r);

/// In-place variant used by the evolution loops; the coin cache avoids
/// re-deriving per-site streams every time step.
void step_inplace(WalkState& state, CoinWindow& coins);

/// ⟨δ_y ⊗ e_j, W_ω^t δ_x ⊗ e_i⟩; exactly zero for |x − y| > t.
cplx amplitude(const DisorderRealization& r, long long x, int i, long long y, int j,
               long long t);

/// max over t in [0, T] of |amplitude|; raises InsufficientHorizonError when
/// T < |x − y|.
double sup_amplitude(const DisorderRealization& r, long long x, int i, long long y, int j,
                     long long T);

/// Position variance Σ x²p(x) − (Σ x p(x))² of the state's site marginal.
double variance(const WalkState& state);

struct LocalizationProfile {
    std::vector<long long> distances;
    std::vector<double> mean_sup_amplitude;  // E over realizations of sup_t site amplitude
    std::vector<double> stderr_;
    int realization_count = 0;
    long long horizon = 0;
};

/// Monte Carlo estimate of the tunneling envelope: walkers start at δ_0 ⊗ e_+
/// and for each requested distance d the sup over t ≤ T of the amplitude norm
/// at sites ±d is averaged (both sides pooled per realization).
LocalizationProfile localization_profile(const CoinDistribution& mu,
                                         const std::vector<long long>& distances, long long T,
                                         int realizations, std::uint64_t seed, int threads = 0);

}  // namespace locwalk
