#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "locwalk/coins.hpp"
#include "locwalk/dense.hpp"
#include "locwalk/findex.hpp"

namespace locwalk {

/// Eigendecomposition of a finite restriction, plus helpers to read spectral
/// measures out of it.
struct SpectralData {
    Eigen::VectorXcd eigenvalues;   // unit modulus, sorted by phase
    Eigen::MatrixXcd eigenvectors;  // orthonormal columns
};

/// The unitary restriction of the walk to sites −N..N with reflective
/// boundary coins (phase·X) at ±(N+1). The matrix acts on f-indices
/// −2N−1 .. 2N+2 and has dimension 4(N+1).
class FiniteWalk {
public:
    FiniteWalk(int N, double eta_L, double eta_R, std::vector<UnitaryCoin> coins);

    int N() const { return n_; }
    double eta_L() const { return eta_l_; }
    double eta_R() const { return eta_r_; }
    int dim() const { return 4 * (n_ + 1); }

    /// Coin at a retained site in [−N, N]; ±(N+1) yield the boundary flips.
    const UnitaryCoin& coin(long long site) const;

    long long f_min() const { return -2 * n_ - 1; }
    long long f_max() const { return 2 * n_ + 2; }
    bool holds_f(long long f) const { return f >= f_min() && f <= f_max(); }
    int index_of(long long f) const { return static_cast<int>(f - f_min()); }

    const Eigen::MatrixXcd& matrix() const { return mat_; }

    /// Dense eigendecomposition; idempotent, call before spectral queries.
    void diagonalize();
    bool diagonalized() const { return spectrum_.has_value(); }
    const SpectralData& spectrum() const;

private:
    int n_;
    double eta_l_, eta_r_;
    std::vector<UnitaryCoin> coins_;       // sites −N..N
    UnitaryCoin boundary_l_, boundary_r_;  // flips at ∓(N+1)
    Eigen::MatrixXcd mat_;
    std::optional<SpectralData> spectrum_;
};

FiniteWalk build_finite_walk(const DisorderRealization& r, int N, double eta_L = 0.0,
                             double eta_R = 0.0);

/// Spectral measure slice ρ^{(x,i),(y,j)}: one complex mass per distinct
/// eigenvalue, masses at eigenvalues closer than 1e-9 in phase merged.
struct SpectralSlice {
    std::vector<cplx> points;  // distinct eigenvalues
    std::vector<cplx> masses;  // ⟨δ_y⊗e_j, P_λ δ_x⊗e_i⟩
};

/// Raises SiteOutOfRangeError when an (site, spin) pair falls outside the
/// retained f-index window.
SpectralSlice spectral_measure(const FiniteWalk& fw, long long x, int i, long long y, int j);

/// (1/(T+1)) Σ_{t≤T} |ρ̂(t)|² for ρ̂(t) = Σ_λ λ^t ρ({λ}).
double wiener_time_average(const SpectralSlice& slice, long long T);

/// Σ_λ |ρ({λ})|².
double wiener_point_mass_sum(const SpectralSlice& slice);

/// Returns (time average, point-mass sum); the two converge to each other as
/// T grows.
std::pair<double, double> wiener_average(const FiniteWalk& fw, long long x, int i, long long y,
                                         int j, long long T);

/// Per-eigenvector spatial envelope relative to its peak site.
struct EigenfunctionEnvelope {
    long long peak_site = 0;
    std::vector<double> by_distance;  // index d: max over sites at |x−peak| = d, peak-normalized
};

std::vector<EigenfunctionEnvelope> eigenfunction_decay(const FiniteWalk& fw);

/// Site-marginal participation ratio of each eigenvector.
std::vector<double> participation_ratios(const FiniteWalk& fw);

}  // namespace locwalk
