#include "locwalk/mat2.hpp"

#include <algorithm>
#include <stdexcept>

namespace locwalk {

namespace {

double phase_in_2pi(const cplx& z) {
    double p = std::arg(z);
    if (p < 0.0) p += 2.0 * M_PI;
    return p;
}

Vec2 normalized(const Vec2& v) {
    const double n = v.norm();
    return {v.x0 / n, v.x1 / n};
}

}  // namespace

bool Mat2::finite() const {
    auto ok = [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return ok(m00) && ok(m01) && ok(m10) && ok(m11);
}

Mat2 Mat2::inverse() const {
    const cplx d = det();
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

EigResult mat2_eig(const Mat2& m) {
    if (!m.finite()) throw std::invalid_argument("mat2_eig: non-finite entries");

    const cplx tr = m.trace();
    const cplx dt = m.det();
    const cplx disc = std::sqrt(tr * tr - 4.0 * dt);
    cplx l0 = 0.5 * (tr + disc);
    cplx l1 = 0.5 * (tr - disc);
    // larger root first, then the companion via λ0·λ1 = det for accuracy
    if (std::abs(l1) > std::abs(l0)) std::swap(l0, l1);
    if (std::abs(l0) > 0.0) l1 = dt / l0;

    if (std::abs(l0) - std::abs(l1) < 1e-14 * (std::abs(l0) + 1.0) &&
        phase_in_2pi(l1) < phase_in_2pi(l0)) {
        std::swap(l0, l1);
    }

    auto eigenvector = [&](const cplx& lambda) -> Vec2 {
        // each row r of (m - λ) satisfies r·v = 0, so v ∝ (−r1, r0); use the
        // larger row
        const Vec2 r0{m.m00 - lambda, m.m01};
        const Vec2 r1{m.m10, m.m11 - lambda};
        const Vec2& r = (r0.norm() >= r1.norm()) ? r0 : r1;
        if (r.norm() == 0.0) return {1.0, 0.0};  // scalar matrix
        return normalized({-r.x1, r.x0});
    };

    EigResult res;
    res.values = {l0, l1};
    res.vectors[0] = eigenvector(l0);
    res.vectors[1] = eigenvector(l1);

    const double scale = m.frobenius() + 1.0;
    if (std::abs(l0 - l1) < 1e-12 * scale) {
        // repeated eigenvalue: defective unless (m - λ) vanishes
        const Mat2 shifted{m.m00 - l0, m.m01, m.m10, m.m11 - l0};
        if (shifted.frobenius() > 1e-12 * scale) {
            res.defective = true;
            res.vectors[1] = res.vectors[0];
        }
    }
    return res;
}

std::array<double, 2> mat2_singular_values(const Mat2& m) {
    if (!m.finite()) throw std::invalid_argument("mat2_singular_values: non-finite entries");
    // eigenvalues of m†m from trace/det; σ2 via σ1σ2 = |det| to avoid cancellation
    const double t = std::norm(m.m00) + std::norm(m.m01) + std::norm(m.m10) + std::norm(m.m11);
    const double d = std::abs(m.det());
    const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * d * d));
    const double s1 = std::sqrt(0.5 * (t + disc));
    const double s2 = (s1 > 0.0) ? d / s1 : 0.0;
    return {s1, s2};
}

double mat2_norm(const Mat2& m) { return mat2_singular_values(m)[0]; }

double mat2_spectral_radius(const Mat2& m) {
    const auto e = mat2_eig(m);
    return std::max(std::abs(e.values[0]), std::abs(e.values[1]));
}

ProjectivePoint::ProjectivePoint(Vec2 v) : v_(v) {
    const double n = v_.norm();
    if (!(n > 0.0)) throw std::invalid_argument("ProjectivePoint: zero vector");
    v_ = v_ / n;
    const cplx lead = (std::abs(v_.x0) > 1e-14) ? v_.x0 : v_.x1;
    const cplx phase = std::conj(lead) / std::abs(lead);
    v_ = v_ * phase;
}

double projective_distance(const Vec2& x, const Vec2& y) {
    const double num = std::abs(x.x0 * y.x1 - x.x1 * y.x0);
    return num / (x.norm() * y.norm());
}

double projective_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
    return projective_distance(x.rep(), y.rep());
}

}  // namespace locwalk
