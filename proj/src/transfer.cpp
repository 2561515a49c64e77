#include "locwalk/transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "locwalk/errors.hpp"

namespace locwalk {

PlaneVector::PlaneVector(Vec2 v) : v_(v) {
    const double n = v_.norm();
    if (!(n > 0.0)) throw std::invalid_argument("PlaneVector: zero vector");
    v_ = v_ / n;
    if (residual() > 1e-12)
        throw std::invalid_argument("PlaneVector: component moduli differ");
}

double PlaneVector::residual() const { return std::abs(std::abs(v_.x0) - std::abs(v_.x1)); }

TransferMatrix tau(const UnitaryCoin& u, cplx z, long long site) {
    if (z == cplx(0.0)) throw std::invalid_argument("tau: z must be nonzero");
    if (u.is_flip()) throw FlipCoinError("tau", site);
    const cplx inv_a = 1.0 / u.a();
    return TransferMatrix{Mat2{u.det() / z * inv_a, u.c() * inv_a, -u.b() * inv_a, z * inv_a}, z};
}

UnitaryCoin tau_inv(const TransferMatrix& t) {
    const cplx y = t.m.m11;
    if (std::abs(y) <= 1e-14) throw SingularCornerError("tau_inv");
    const cplx s = t.z / y;
    // UnitaryCoin's constructor rejects results outside the image set
    return UnitaryCoin{s, -s * t.m.m10, s * t.m.m01, s * t.m.det()};
}

Mat2 transfer_product(const DisorderRealization& r, cplx z, long long x_lo, long long x_hi) {
    Mat2 acc = Mat2::identity();
    for (long long x = x_lo; x <= x_hi; ++x) {
        const UnitaryCoin u = r.coin_at(x);
        if (u.is_flip()) throw FlipCoinError("transfer_product", x);
        acc = tau(u, z, x).m * acc;
    }
    return acc;
}

ScaledMat2 transfer_product_scaled(const DisorderRealization& r, cplx z, long long x_lo,
                                   long long x_hi) {
    ScaledMat2 acc{Mat2::identity(), 0.0};
    int since_rescale = 0;
    for (long long x = x_lo; x <= x_hi; ++x) {
        const UnitaryCoin u = r.coin_at(x);
        if (u.is_flip()) throw FlipCoinError("transfer_product", x);
        acc.m = tau(u, z, x).m * acc.m;
        if (++since_rescale == 32) {
            const double s = acc.m.frobenius();
            acc.m = acc.m * cplx(1.0 / s);
            acc.log_scale += std::log(s);
            since_rescale = 0;
        }
    }
    return acc;
}

PlaneVector plane_check(const TransferMatrix& t, const PlaneVector& v) {
    const double abs_z = std::abs(t.z);
    if (std::abs(abs_z - 1.0) > 1e-12) throw OffCircleError("plane_check", abs_z);
    return PlaneVector(t.m * v.vec());
}

CompatiblePairs boundary_compatible_pairs(const FiniteWalk& fw, cplx z) {
    const int N = fw.N();
    const size_t count = static_cast<size_t>(2 * N + 2);  // pairs −N .. N+1
    CompatiblePairs seq;
    seq.x_lo = -N;
    seq.minus.resize(count);
    seq.plus.resize(count);
    seq.log_minus.assign(count, 0.0);
    seq.log_plus.assign(count, 0.0);

    std::vector<Mat2> T(static_cast<size_t>(2 * N + 1));
    for (long long x = -N; x <= N; ++x) {
        const UnitaryCoin& u = fw.coin(x);
        if (u.is_flip()) throw FlipCoinError("boundary_compatible_pairs", x);
        T[static_cast<size_t>(x + N)] = tau(u, z, x).m;
    }

    auto renorm = [](Vec2& v, double& log_scale) {
        const double n = v.norm();
        v = v / n;
        log_scale += std::log(n);
    };

    // left-compatible: pair −N holds (φ(−2N−1), φ(−2N)) ∝ (1, z·e^{−iη_L})
    Vec2 vm{1.0, z * std::polar(1.0, -fw.eta_L())};
    double lm = 0.0;
    renorm(vm, lm);
    seq.minus[0] = vm;
    seq.log_minus[0] = lm;
    for (long long x = -N; x <= N; ++x) {
        vm = T[static_cast<size_t>(x + N)] * vm;
        renorm(vm, lm);
        seq.minus[static_cast<size_t>(x + N + 1)] = vm;
        seq.log_minus[static_cast<size_t>(x + N + 1)] = lm;
    }

    // right-compatible: pair N+1 holds (φ(2N+1), φ(2N+2)) ∝ (z·e^{−iη_R}, 1)
    Vec2 vp{z * std::polar(1.0, -fw.eta_R()), 1.0};
    double lp = 0.0;
    renorm(vp, lp);
    seq.plus[count - 1] = vp;
    seq.log_plus[count - 1] = lp;
    for (long long x = N; x >= -N; --x) {
        vp = T[static_cast<size_t>(x + N)].inverse() * vp;
        renorm(vp, lp);
        seq.plus[static_cast<size_t>(x + N)] = vp;
        seq.log_plus[static_cast<size_t>(x + N)] = lp;
    }
    return seq;
}

double resolvent_entry_via_transfer(const FiniteWalk& fw, cplx z, long long n, long long m) {
    // column group: m ∈ {2y, 2y+1}; the matching rows need the coin at y
    const long long y = site_of(m);
    if (!fw.holds_f(n) || y < -fw.N() || y > fw.N())
        throw SiteOutOfRangeError("resolvent_entry_via_transfer", y);

    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < fw.spectrum().eigenvalues.size(); ++k)
        dist = std::min(dist, std::abs(fw.spectrum().eigenvalues[k] - z));
    if (dist <= 1e-8) throw NearSpectrumError("resolvent_entry_via_transfer", dist);

    const CompatiblePairs seq = boundary_compatible_pairs(fw, z);
    auto comp = [&](const std::vector<Vec2>& pairs, const std::vector<double>& logs,
                    long long f) -> std::pair<double, double> {
        const size_t idx = static_cast<size_t>(pair_of(f) - seq.x_lo);
        const Vec2& v = pairs[idx];
        const double a = std::abs(pair_slot(f) == 0 ? v.x0 : v.x1);
        return {a, logs[idx]};
    };

    // |det B| is pair-independent; evaluate it at m's pair for best accuracy
    const size_t iy = static_cast<size_t>(y - seq.x_lo);
    const cplx detB =
        seq.minus[iy].x0 * seq.plus[iy].x1 - seq.plus[iy].x0 * seq.minus[iy].x1;
    const double log_den =
        std::log(std::abs(z)) + std::log(std::abs(detB)) + seq.log_minus[iy] + seq.log_plus[iy];

    const long long mhat = companion_index(m);
    double a1, l1, a2, l2;
    if (n <= 2 * y) {
        std::tie(a1, l1) = comp(seq.minus, seq.log_minus, n);
        std::tie(a2, l2) = comp(seq.plus, seq.log_plus, mhat);
    } else {
        std::tie(a1, l1) = comp(seq.plus, seq.log_plus, n);
        std::tie(a2, l2) = comp(seq.minus, seq.log_minus, mhat);
    }
    if (a1 == 0.0 || a2 == 0.0) return 0.0;
    return std::exp(std::log(a1) + l1 + std::log(a2) + l2 - log_den);
}

namespace {

/// Bilinear pairing ((−1, z·e^{−iη_R}), M·(1, z·e^{−iη_L})) scaled by z^{2N+1};
/// the formal conjugate of the right-edge orthogonal vector, so the result is
/// a polynomial in z rather than a sesquilinear form.
std::pair<cplx, double> specpoly_core(const FiniteWalk& fw, cplx z) {
    if (z == cplx(0.0)) throw std::invalid_argument("spectral_polynomial_eval: z must be nonzero");
    const int N = fw.N();
    ScaledMat2 prod{Mat2::identity(), 0.0};
    int since = 0;
    for (long long x = -N; x <= N; ++x) {
        const UnitaryCoin& u = fw.coin(x);
        if (u.is_flip()) throw FlipCoinError("spectral_polynomial_eval", x);
        prod.m = tau(u, z, x).m * prod.m;
        if (++since == 32) {
            const double s = prod.m.frobenius();
            prod.m = prod.m * cplx(1.0 / s);
            prod.log_scale += std::log(s);
            since = 0;
        }
    }
    const Vec2 right{1.0, z * std::polar(1.0, -fw.eta_L())};
    const Vec2 mid = prod.m * right;
    const cplx pairing = -mid.x0 + z * std::polar(1.0, -fw.eta_R()) * mid.x1;
    const double log_scale =
        prod.log_scale + static_cast<double>(2 * N + 1) * std::log(std::abs(z));
    const cplx phase_part = std::pow(z / std::abs(z), 2 * N + 1) * pairing;
    return {phase_part, log_scale};
}

}  // namespace

cplx spectral_polynomial_eval(const FiniteWalk& fw, cplx z) {
    const auto [value, log_scale] = specpoly_core(fw, z);
    return value * std::exp(log_scale);
}

LogPolyValue spectral_polynomial_eval_log(const FiniteWalk& fw, cplx z) {
    const auto [value, log_scale] = specpoly_core(fw, z);
    return {std::log(std::abs(value)) + log_scale, std::arg(value)};
}

cplx leading_coefficient(const FiniteWalk& fw) {
    cplx prod = 1.0;
    for (long long x = -fw.N(); x <= fw.N(); ++x) {
        const UnitaryCoin& u = fw.coin(x);
        if (u.is_flip()) throw FlipCoinError("leading_coefficient", x);
        prod *= u.a();
    }
    return std::polar(1.0, -(fw.eta_L() + fw.eta_R())) / prod;
}

}  // namespace locwalk
