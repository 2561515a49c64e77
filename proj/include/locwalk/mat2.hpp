#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace locwalk {

using cplx = std::complex<double>;

struct Vec2 {
    cplx x0{}, x1{};

    double norm() const { return std::sqrt(std::norm(x0) + std::norm(x1)); }
    Vec2 operator*(const cplx& s) const { return {x0 * s, x1 * s}; }
    Vec2 operator/(double s) const { return {x0 / s, x1 / s}; }
};

/// Inner product, antilinear in the first argument.
inline cplx cdot(const Vec2& u, const Vec2& v) {
    return std::conj(u.x0) * v.x0 + std::conj(u.x1) * v.x1;
}

/// 2x2 complex matrix, row-major (m00 m01 / m10 m11).
struct Mat2 {
    cplx m00{}, m01{}, m10{}, m11{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx det() const { return m00 * m11 - m01 * m10; }
    cplx trace() const { return m00 + m11; }
    double frobenius() const {
        return std::sqrt(std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11));
    }
    bool finite() const;

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    Mat2 inverse() const;

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Vec2 operator*(const Vec2& v) const {
        return {m00 * v.x0 + m01 * v.x1, m10 * v.x0 + m11 * v.x1};
    }
    Mat2 operator*(const cplx& s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }
    Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
};

struct EigResult {
    std::array<cplx, 2> values;   // ordered: |λ0| >= |λ1|, ties by ascending phase in [0, 2π)
    std::array<Vec2, 2> vectors;  // unit eigenvectors; vectors[1] == vectors[0] when defective
    bool defective = false;
};

/// Closed-form eigendecomposition from trace and determinant.
EigResult mat2_eig(const Mat2& m);

/// Singular values (σ1 >= σ2 >= 0); σ1·σ2 = |det m| holds to rounding.
std::array<double, 2> mat2_singular_values(const Mat2& m);

/// Operator norm = largest singular value.
double mat2_norm(const Mat2& m);

/// Spectral radius from the closed-form eigenvalues.
double mat2_spectral_radius(const Mat2& m);

/// Point of the complex projective line, stored as a unit representative with
/// the first component of modulus > 1e-14 made real and positive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(Vec2 v);
    const Vec2& rep() const { return v_; }

private:
    Vec2 v_;
};

/// δ(x̄, ȳ) = |det(x, y)| / (‖x‖‖y‖); zero iff equal projective points, 1 when orthogonal.
double projective_distance(const ProjectivePoint& x, const ProjectivePoint& y);

/// Same distance on raw (not necessarily normalized) vectors.
double projective_distance(const Vec2& x, const Vec2& y);

}  // namespace locwalk
