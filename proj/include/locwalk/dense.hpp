#pragma once

#include <Eigen/Dense>
#include <complex>

namespace locwalk {

struct UnitaryEig {
    Eigen::VectorXcd eigenvalues;  // unit modulus, sorted by phase in [0, 2π)
    Eigen::MatrixXcd eigenvectors; // orthonormal columns, matching order
};

/// Eigendecomposition of a dense unitary matrix (d <= 4096). Raises
/// NotUnitaryError if ‖M†M − I‖ exceeds 1e-8.
UnitaryEig unitary_eig(const Eigen::MatrixXcd& m);

/// Eigenvalues only; cheaper when the vectors are not needed.
Eigen::VectorXcd unitary_eigvals(const Eigen::MatrixXcd& m);

/// Phase of z mapped to [0, 2π).
double phase_2pi(std::complex<double> z);

}  // namespace locwalk
