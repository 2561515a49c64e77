#pragma once

#include <stdexcept>
#include <string>

namespace locwalk {

/// Base class for all numerical-precondition failures raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string op, const std::string& what)
        : std::runtime_error(op + ": " + what), op_(std::move(op)) {}
    const std::string& operation() const { return op_; }

private:
    std::string op_;
};

struct NotUnitaryError : Error {
    NotUnitaryError(const std::string& op, double residual)
        : Error(op, "matrix is not unitary (residual " + std::to_string(residual) + ")") {}
};

struct FlipCoinError : Error {
    FlipCoinError(const std::string& op, long long site)
        : Error(op, "flip coin (|a| ~ 0) at site " + std::to_string(site)), site(site) {}
    long long site;
};

struct SingularCornerError : Error {
    explicit SingularCornerError(const std::string& op)
        : Error(op, "lower-right entry vanishes, inverse map undefined") {}
};

struct OffCircleError : Error {
    OffCircleError(const std::string& op, double abs_z)
        : Error(op, "|z| = " + std::to_string(abs_z) + " is not on the unit circle") {}
};

struct NearSpectrumError : Error {
    NearSpectrumError(const std::string& op, double dist)
        : Error(op, "z is within " + std::to_string(dist) + " of the spectrum") {}
};

struct SiteOutOfRangeError : Error {
    SiteOutOfRangeError(const std::string& op, long long site)
        : Error(op, "site " + std::to_string(site) + " outside the retained lattice window") {}
};

struct InsufficientHorizonError : Error {
    InsufficientHorizonError(const std::string& op, long long horizon, long long needed)
        : Error(op, "horizon " + std::to_string(horizon) + " < required " + std::to_string(needed)) {}
};

struct FlipEncounteredError : Error {
    FlipEncounteredError(const std::string& op)
        : Error(op, "distribution has positive flip weight; transfer chain undefined") {}
};

struct KernelSingularityError : Error {
    explicit KernelSingularityError(const std::string& op)
        : Error(op, "z coincides with a histogram atom on the unit circle") {}
};

}  // namespace locwalk
