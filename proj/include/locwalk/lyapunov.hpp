#pragma once

#include <cstdint>
#include <vector>

#include "locwalk/coins.hpp"
#include "locwalk/mat2.hpp"

namespace locwalk {

struct LyapunovEstimate {
    cplx z;
    double gamma_hat = 0.0;   // per-matrix log growth rate
    double stderr_ = 0.0;     // spread over realizations
    long long chain_length = 0;
    int realizations = 0;
};

/// (1/n)·log‖T_n(z)…T_1(z)·v‖ averaged over independent chains, with the
/// running norm renormalized every `renorm_every` multiplications (the
/// estimate is cadence independent; 32 keeps e^{32γ} far from overflow).
/// Raises FlipEncounteredError when the distribution carries flip weight.
LyapunovEstimate estimate_lyapunov(const CoinDistribution& mu, cplx z, long long chain_length,
                                   int realizations, std::uint64_t seed, int threads = 0,
                                   int renorm_every = 32, Vec2 start = Vec2{1.0, 0.0});

/// Directions of g_k·…·g_1·v0 for k in (burn_in, burn_in + samples], phase
/// canonicalized. Their empirical law approximates the invariant measure of
/// the transfer chain at z.
std::vector<ProjectivePoint> invariant_measure_sample(const CoinDistribution& mu, cplx z,
                                                      long long burn_in, long long samples,
                                                      std::uint64_t seed);

/// Monte Carlo value of ν(Φ_z) with Φ_z(x̄) = E[log(‖g x‖/‖x‖)], evaluated
/// with `draws_per_sample` fresh coin draws per direction.
double lyapunov_via_invariant(const CoinDistribution& mu, cplx z,
                              const std::vector<ProjectivePoint>& nu_samples,
                              std::uint64_t seed, int draws_per_sample = 8);

/// Same estimator replicated over independent chains so the spread yields an
/// honest standard error.
LyapunovEstimate lyapunov_via_invariant_mc(const CoinDistribution& mu, cplx z, int chains,
                                           long long burn_in, long long samples_per_chain,
                                           std::uint64_t seed, int threads = 0);

struct DOSHistogram {
    std::vector<double> bin_edges;  // bins + 1 phases partitioning [0, 2π)
    std::vector<double> masses;     // nonnegative, summing to 1
    std::vector<double> stderr_;    // across realizations
    int N_used = 0;
    int realizations = 0;

    double bin_width() const { return bin_edges[1] - bin_edges[0]; }
    double bin_center(size_t k) const { return 0.5 * (bin_edges[k] + bin_edges[k + 1]); }
};

/// Pooled eigenphase histogram of W(N) over disorder realizations.
DOSHistogram density_of_states(const CoinDistribution& mu, int N, int realizations, int bins,
                               std::uint64_t seed, int threads = 0, double eta_L = 0.0,
                               double eta_R = 0.0);

struct IDSCurve {
    std::vector<double> phases;  // right bin edges
    std::vector<double> values;  // nondecreasing, ending at 1
};

IDSCurve integrated_dos(const DOSHistogram& hist);

struct HoelderFit {
    std::vector<double> scale;      // phase separations probed
    std::vector<double> increment;  // worst (IDS) or mean (γ) increment at that scale
    double exponent = 0.0;          // slope of log increment vs log scale
    double r2 = 0.0;
};

/// Multi-scale increment probe of the IDS continuity modulus.
HoelderFit ids_hoelder_probe(const IDSCurve& ids);

struct ThoulessValue {
    double kernel = 0.0;     // ∫ log|z − e^{iλ}| dϑ(λ)
    double coin_term = 0.0;  // E[log|a|]
    double log_abs_z = 0.0;
    double value = 0.0;      // 2·kernel − coin_term − log|z|
};

/// Quadrature of the log kernel against the eigenphase histogram, combined so
/// that the result equals the per-matrix Lyapunov exponent in the large-N
/// limit. Raises KernelSingularityError when z sits on the circle within one
/// bin of a histogram atom.
ThoulessValue thouless_rhs(const DOSHistogram& hist, const CoinDistribution& mu, cplx z);

/// |z| = 1 evaluation by Richardson extrapolation from |z| = 1 + ε,
/// ε ∈ {0.02, 0.01, 0.005}.
ThoulessValue thouless_rhs_circle(const DOSHistogram& hist, const CoinDistribution& mu,
                                  double phase);

struct GammaModulusProbe {
    std::vector<double> phases;
    std::vector<double> gamma;
    std::vector<double> stderr_;
    HoelderFit fit;  // |Δγ| vs phase separation
};

/// Continuity modulus of γ along the unit circle on the given phase grid.
GammaModulusProbe hoelder_probe_gamma(const CoinDistribution& mu,
                                      const std::vector<double>& phases, long long chain_length,
                                      int realizations, std::uint64_t seed, int threads = 0);

}  // namespace locwalk
