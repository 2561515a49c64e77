#include "locwalk/dense.hpp"

#include <complex>
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "locwalk/errors.hpp"

extern "C" void openblas_set_num_threads(int);

namespace locwalk {

namespace {
// realization-level parallelism owns the cores; keep BLAS single-threaded
const bool blas_single_threaded = [] {
    openblas_set_num_threads(1);
    return true;
}();
}  // namespace

double phase_2pi(std::complex<double> z) {
    double p = std::arg(z);
    if (p < 0.0) p += 2.0 * M_PI;
    if (p >= 2.0 * M_PI) p -= 2.0 * M_PI;
    return p;
}

namespace {

void require_unitary(const Eigen::MatrixXcd& m, const char* op) {
    if (m.rows() != m.cols() || m.rows() > 4096) throw NotUnitaryError(op, -1.0);
    const double residual =
        (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
    if (!(residual <= 1e-8)) throw NotUnitaryError(op, residual);
}

/// Schur decomposition via LAPACK. A unitary matrix is normal, so the Schur
/// form is diagonal and the Schur basis is an orthonormal eigenbasis.
void schur(const Eigen::MatrixXcd& m, bool vectors, Eigen::VectorXcd& values,
           Eigen::MatrixXcd& basis) {
    const lapack_int n = static_cast<lapack_int>(m.rows());
    Eigen::MatrixXcd a = m;  // overwritten with T
    values.resize(n);
    if (vectors) basis.resize(n, n);
    lapack_int sdim = 0;
    const lapack_int info = LAPACKE_zgees(
        LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'N', nullptr, n, a.data(), n, &sdim,
        values.data(), vectors ? basis.data() : nullptr, vectors ? n : 1);
    if (info != 0) throw std::runtime_error("unitary_eig: zgees failed");
}

}  // namespace

UnitaryEig unitary_eig(const Eigen::MatrixXcd& m) {
    require_unitary(m, "unitary_eig");
    Eigen::VectorXcd values;
    Eigen::MatrixXcd basis;
    schur(m, true, values, basis);

    const Eigen::Index d = m.rows();
    std::vector<Eigen::Index> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return phase_2pi(values[a]) < phase_2pi(values[b]);
    });

    UnitaryEig out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        out.eigenvalues[k] = values[order[static_cast<size_t>(k)]];
        out.eigenvectors.col(k) = basis.col(order[static_cast<size_t>(k)]);
    }
    return out;
}

Eigen::VectorXcd unitary_eigvals(const Eigen::MatrixXcd& m) {
    require_unitary(m, "unitary_eigvals");
    Eigen::VectorXcd values;
    Eigen::MatrixXcd unused;
    schur(m, false, values, unused);
    std::sort(values.data(), values.data() + values.size(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return phase_2pi(a) < phase_2pi(b);
              });
    return values;
}

}  // namespace locwalk
