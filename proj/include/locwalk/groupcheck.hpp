#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locwalk/coins.hpp"
#include "locwalk/mat2.hpp"

namespace locwalk {

/// One factor of a certificate word: τ_z(coin) raised to ±1.
struct WordFactor {
    UnitaryCoin coin;
    int power;  // +1 or −1
};

struct NoncompactCertificate {
    std::vector<WordFactor> word;  // applied right to left
    double spectral_radius = 0.0;  // > 1 + 1e-9
};

/// Searches for a word of transfer matrices with spectral radius > 1.
/// Discrete support is enumerated breadth-first over atoms and inverses; a
/// continuous component yields a deterministic two-factor certificate from
/// the image-set parametrization (same phases, different diagonal ratio).
/// Absence of a certificate is reported as nullopt, never as compactness.
std::optional<NoncompactCertificate> noncompactness_search(const CoinDistribution& mu, cplx z,
                                                           int max_word_length, int trials,
                                                           std::uint64_t seed);

/// Rebuilds the stored word at z and returns its spectral radius.
double verify_certificate(const NoncompactCertificate& cert, cplx z);

/// |λ±| of τ_z(H)·τ_z(X)⁻¹ for the Hadamard/two-coin pair, X = ((a, b),
/// (−b̄, ā)): |i·Im b ± √(|a|² − (Im b)²)| / |a|, complex square root when
/// |a| < |Im b|. Returned sorted descending; z-independent.
std::array<double, 2> two_coin_closed_form(cplx a, cplx b);

struct OrbitWitness {
    ProjectivePoint start;
    std::array<ProjectivePoint, 3> points;  // pairwise δ >= 1e-6
    double min_pairwise_delta = 0.0;
    int starts_tested = 0;
};

struct IrreducibilityResult {
    std::optional<OrbitWitness> witness;
    /// Discrete two-atom sets only: smallest projective distance between the
    /// eigenvectors of T_1·T_2⁻¹ and of T_1⁻¹·T_2; small values warn that z
    /// is near the exceptional set. NaN when not applicable.
    double exceptional_proximity = std::numeric_limits<double>::quiet_NaN();
};

/// Certifies the >2-point projective-orbit criterion for strong
/// irreducibility: every tested start (random plus the structured eigenvector
/// starts) must reach three pairwise-distinct orbit points.
IrreducibilityResult irreducibility_orbit_test(const CoinDistribution& mu, cplx z, int trials,
                                               std::uint64_t seed);

struct ZetaResult {
    bool finite = false;
    double zeta = 0.0;
    /// For atom sets the exact Σ w‖τ(U)‖^ζ; for Haar components the
    /// norm-bound expectation 2^ζ·(1/π)∫₀^π |sin θ|^{−ζ} dθ (finite iff ζ < 1).
    double value = std::numeric_limits<double>::quiet_NaN();
};

/// Certifies E‖τ_θ(U)‖^ζ < ∞ or flags divergence under mesh refinement.
/// The transfer-matrix norm at |θ| = 1 does not depend on θ.
ZetaResult zeta_integrability(const CoinDistribution& mu, double zeta);

struct HypothesisReport {
    cplx z;
    std::optional<NoncompactCertificate> noncompact;
    IrreducibilityResult irreducible;
    ZetaResult zeta;
    std::string criterion = "projective-orbit(>2 points)";
};

HypothesisReport hypothesis_report(const CoinDistribution& mu, cplx z, double zeta,
                                   int max_word_length, int trials, std::uint64_t seed);

}  // namespace locwalk
