#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "locwalk/mat2.hpp"
#include "locwalk/rng.hpp"

namespace locwalk {

/// Threshold below which a diagonal entry counts as an exact flip.
inline constexpr double kFlipThreshold = 1e-14;

/// A 2x2 unitary ((a, b), (c, d)); unitarity is enforced on construction
/// to within 1e-12.
class UnitaryCoin {
public:
    UnitaryCoin(cplx a, cplx b, cplx c, cplx d);
    explicit UnitaryCoin(const Mat2& m) : UnitaryCoin(m.m00, m.m01, m.m10, m.m11) {}

    cplx a() const { return m_.m00; }
    cplx b() const { return m_.m01; }
    cplx c() const { return m_.m10; }
    cplx d() const { return m_.m11; }
    const Mat2& mat() const { return m_; }
    cplx det() const { return m_.det(); }

    /// True when a diagonal entry vanishes; such coins reflect the walker.
    bool is_flip() const;

    static UnitaryCoin identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static UnitaryCoin hadamard();
    /// Pauli X times a phase; the reflective boundary coin.
    static UnitaryCoin flip(double eta = 0.0);

private:
    Mat2 m_;
};

/// Draw from the Haar measure on U(2): Gaussian 2x2 matrix, Gram-Schmidt on
/// the columns, triangular factor's diagonal made positive.
UnitaryCoin sample_haar(RngStream& stream);

/// Single-site coin law: fixed coin, Haar, finite atom set, or a mixture.
class CoinDistribution {
public:
    enum class Kind { fixed, haar, discrete, mixture };

    static CoinDistribution fixed(UnitaryCoin coin);
    static CoinDistribution haar();
    static CoinDistribution discrete(std::vector<std::pair<UnitaryCoin, double>> atoms);
    static CoinDistribution mixture(std::vector<std::pair<CoinDistribution, double>> parts);

    Kind kind() const { return kind_; }
    const UnitaryCoin& fixed_coin() const { return atoms_.front().first; }
    const std::vector<std::pair<UnitaryCoin, double>>& atoms() const { return atoms_; }
    const std::vector<std::pair<CoinDistribution, double>>& parts() const { return parts_; }

    UnitaryCoin sample(RngStream& stream) const;

    /// Weight of coins with a vanishing diagonal entry (1 − μ(U_ND)).
    double reflectivity() const;

    /// True when a Haar component carries positive weight.
    bool has_continuous_part() const;

    /// E[log|a|]; exact for Haar (−1/2) and for atom sets.
    /// Raises FlipEncounteredError when flips carry positive weight.
    double mean_log_abs_a() const;

private:
    CoinDistribution() = default;
    Kind kind_ = Kind::haar;
    std::vector<std::pair<UnitaryCoin, double>> atoms_;   // fixed uses one entry
    std::vector<std::pair<CoinDistribution, double>> parts_;
};

/// One disorder sample ω: a deterministic, seed-indexed coin per lattice site.
/// coin_at is pure in (master_seed, x) and safe to call concurrently.
class DisorderRealization {
public:
    DisorderRealization(CoinDistribution distribution, std::uint64_t master_seed)
        : dist_(std::move(distribution)), seed_(master_seed) {}

    /// Same realization with fixed coins planted at selected sites.
    DisorderRealization(CoinDistribution distribution, std::uint64_t master_seed,
                        std::map<long long, UnitaryCoin> overrides)
        : dist_(std::move(distribution)), seed_(master_seed), overrides_(std::move(overrides)) {}

    UnitaryCoin coin_at(long long x) const;

    const CoinDistribution& distribution() const { return dist_; }
    std::uint64_t master_seed() const { return seed_; }

private:
    CoinDistribution dist_;
    std::uint64_t seed_;
    std::map<long long, UnitaryCoin> overrides_;
};

/// Lazy per-site cache in front of a realization; evolution loops query each
/// site once instead of re-deriving the stream every time step.
class CoinWindow {
public:
    explicit CoinWindow(const DisorderRealization& r) : r_(&r) {}
    const UnitaryCoin& at(long long x);

private:
    const DisorderRealization* r_;
    std::vector<std::optional<UnitaryCoin>> pos_, neg_;  // x >= 0 / x < 0
};

}  // namespace locwalk
