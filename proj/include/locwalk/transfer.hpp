#pragma once

#include <vector>

#include "locwalk/coins.hpp"
#include "locwalk/findex.hpp"
#include "locwalk/mat2.hpp"
#include "locwalk/restriction.hpp"

namespace locwalk {

/// Element of SL_T (|det| = 1) attached to a spectral parameter z.
struct TransferMatrix {
    Mat2 m;
    cplx z;
};

/// Vector with components of equal modulus; the set is invariant under
/// transfer matrices at |z| = 1.
class PlaneVector {
public:
    explicit PlaneVector(Vec2 v);
    const Vec2& vec() const { return v_; }
    /// ||v0| − |v1|| of the unit representative.
    double residual() const;

private:
    Vec2 v_;
};

/// T(z) = (1/a)·((det U / z, c), (−b, z)). Raises FlipCoinError for |a| ~ 0
/// (site −1 when no site is known) and rejects z = 0.
TransferMatrix tau(const UnitaryCoin& u, cplx z, long long site = -1);

/// Inverse map: recovers the coin from a transfer matrix in the image set.
/// Raises SingularCornerError when the lower-right entry vanishes and
/// NotUnitaryError when the input is not in the image of τ_z.
UnitaryCoin tau_inv(const TransferMatrix& t);

/// Ordered product T_{x_hi}(z)·…·T_{x_lo}(z); empty ranges (x_hi < x_lo)
/// give the identity. Raises FlipCoinError with the offending site.
Mat2 transfer_product(const DisorderRealization& r, cplx z, long long x_lo, long long x_hi);

/// Product with the running norm carried in log scale: value = m·exp(log_scale).
struct ScaledMat2 {
    Mat2 m;               // Frobenius norm kept near 1
    double log_scale = 0.0;
};

ScaledMat2 transfer_product_scaled(const DisorderRealization& r, cplx z, long long x_lo,
                                   long long x_hi);

/// Applies T to a plane vector at |z| = 1 and returns the (normalized) image,
/// which is again a plane vector. Raises OffCircleError for |z| ≠ 1.
PlaneVector plane_check(const TransferMatrix& t, const PlaneVector& v);

/// |(W(N) − z)^{-1}(n, m)| computed from boundary-compatible transfer
/// sequences: |φ∓(n)·φ±(m̂)| / |z·det B|. Valid for any z off the spectrum;
/// n may be any retained f-index, m must have its pair inside [−N, N].
/// Raises NearSpectrumError when dist(z, spectrum) <= 1e-8 and FlipCoinError
/// when a coin in range is a flip.
double resolvent_entry_via_transfer(const FiniteWalk& fw, cplx z, long long n, long long m);

/// p_N(z) = z^{2N+1}·(−1, z e^{−iη_R})·T_N…T_{−N}·(1, z e^{−iη_L})ᵀ, a degree
/// 4(N+1) polynomial whose roots are exactly the eigenvalues of W(N).
cplx spectral_polynomial_eval(const FiniteWalk& fw, cplx z);

/// log|p_N(z)| and the phase; usable where the plain value would overflow.
struct LogPolyValue {
    double log_abs;
    double phase;
};
LogPolyValue spectral_polynomial_eval_log(const FiniteWalk& fw, cplx z);

/// C_N = e^{−i(η_L+η_R)}·(Π_{l=−N}^N a_l)^{−1}, the z^{4(N+1)} coefficient.
cplx leading_coefficient(const FiniteWalk& fw);

/// Internal: the two boundary-compatible pair sequences Γ∓(x) with log
/// scales, Γ−(−N) ∝ (1, z·e^{−iη_L}) extended right, Γ+(N+1) ∝ (z·e^{−iη_R}, 1)
/// extended left. Exposed for tests.
struct CompatiblePairs {
    std::vector<Vec2> minus, plus;        // index x + N, pairs x = −N .. N+1
    std::vector<double> log_minus, log_plus;
    long long x_lo;                       // = −N
};
CompatiblePairs boundary_compatible_pairs(const FiniteWalk& fw, cplx z);

}  // namespace locwalk
