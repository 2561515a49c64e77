#include "locwalk/coins.hpp"

#include <cmath>
#include <stdexcept>

#include "locwalk/errors.hpp"

namespace locwalk {

UnitaryCoin::UnitaryCoin(cplx a, cplx b, cplx c, cplx d) : m_{a, b, c, d} {
    const Mat2 gram = m_.adjoint() * m_;
    const Mat2 dev{gram.m00 - 1.0, gram.m01, gram.m10, gram.m11 - 1.0};
    const double residual = dev.frobenius();
    if (!(residual <= 1e-12)) throw NotUnitaryError("UnitaryCoin", residual);
}

bool UnitaryCoin::is_flip() const {
    return std::abs(a()) <= kFlipThreshold || std::abs(d()) <= kFlipThreshold;
}

UnitaryCoin UnitaryCoin::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

UnitaryCoin UnitaryCoin::flip(double eta) {
    const cplx p = std::polar(1.0, eta);
    return {0.0, p, p, 0.0};
}

UnitaryCoin sample_haar(RngStream& stream) {
    const auto g = [&] { return cplx(stream.next_gaussian(), stream.next_gaussian()); };
    const Vec2 g0{g(), g()};
    const Vec2 g1{g(), g()};
    const double n0 = g0.norm();
    const Vec2 q0 = g0 / n0;
    const cplx proj = cdot(q0, g1);
    const Vec2 r{g1.x0 - proj * q0.x0, g1.x1 - proj * q0.x1};
    const Vec2 q1 = r / r.norm();
    // Gram-Schmidt already leaves the triangular factor's diagonal positive,
    // which pins the phase convention.
    return UnitaryCoin{q0.x0, q1.x0, q0.x1, q1.x1};
}

namespace {

void check_weights(const std::vector<double>& w) {
    double total = 0.0;
    for (double x : w) {
        if (!(x > 0.0)) throw std::invalid_argument("CoinDistribution: weights must be positive");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("CoinDistribution: weights must sum to 1");
}

}  // namespace

CoinDistribution CoinDistribution::fixed(UnitaryCoin coin) {
    CoinDistribution d;
    d.kind_ = Kind::fixed;
    d.atoms_.emplace_back(coin, 1.0);
    return d;
}

CoinDistribution CoinDistribution::haar() {
    CoinDistribution d;
    d.kind_ = Kind::haar;
    return d;
}

CoinDistribution CoinDistribution::discrete(std::vector<std::pair<UnitaryCoin, double>> atoms) {
    if (atoms.empty()) throw std::invalid_argument("CoinDistribution: empty atom list");
    std::vector<double> w;
    for (const auto& [coin, weight] : atoms) w.push_back(weight);
    check_weights(w);
    CoinDistribution d;
    d.kind_ = Kind::discrete;
    d.atoms_ = std::move(atoms);
    return d;
}

CoinDistribution CoinDistribution::mixture(
    std::vector<std::pair<CoinDistribution, double>> parts) {
    if (parts.empty()) throw std::invalid_argument("CoinDistribution: empty mixture");
    std::vector<double> w;
    for (const auto& [part, weight] : parts) w.push_back(weight);
    check_weights(w);
    CoinDistribution d;
    d.kind_ = Kind::mixture;
    d.parts_ = std::move(parts);
    return d;
}

UnitaryCoin CoinDistribution::sample(RngStream& stream) const {
    switch (kind_) {
        case Kind::fixed:
            return atoms_.front().first;
        case Kind::haar:
            return sample_haar(stream);
        case Kind::discrete: {
            const double u = stream.next_double();
            double cum = 0.0;
            for (const auto& [coin, weight] : atoms_) {
                cum += weight;
                if (u < cum) return coin;
            }
            return atoms_.back().first;
        }
        case Kind::mixture: {
            const double u = stream.next_double();
            double cum = 0.0;
            for (const auto& [part, weight] : parts_) {
                cum += weight;
                if (u < cum) return part.sample(stream);
            }
            return parts_.back().first.sample(stream);
        }
    }
    throw std::logic_error("CoinDistribution: bad kind");
}

double CoinDistribution::reflectivity() const {
    switch (kind_) {
        case Kind::haar:
            return 0.0;  // flips are a null set for the continuous law
        case Kind::fixed:
        case Kind::discrete: {
            double p = 0.0;
            for (const auto& [coin, weight] : atoms_)
                if (coin.is_flip()) p += weight;
            return p;
        }
        case Kind::mixture: {
            double p = 0.0;
            for (const auto& [part, weight] : parts_) p += weight * part.reflectivity();
            return p;
        }
    }
    throw std::logic_error("CoinDistribution: bad kind");
}

bool CoinDistribution::has_continuous_part() const {
    if (kind_ == Kind::haar) return true;
    if (kind_ == Kind::mixture)
        for (const auto& [part, weight] : parts_)
            if (part.has_continuous_part()) return true;
    return false;
}

double CoinDistribution::mean_log_abs_a() const {
    switch (kind_) {
        case Kind::haar:
            // |a|^2 is uniform on [0,1], so E[log|a|] = (1/2)∫₀¹ log s ds = −1/2.
            return -0.5;
        case Kind::fixed:
        case Kind::discrete: {
            double v = 0.0;
            for (const auto& [coin, weight] : atoms_) {
                if (coin.is_flip()) throw FlipEncounteredError("mean_log_abs_a");
                v += weight * std::log(std::abs(coin.a()));
            }
            return v;
        }
        case Kind::mixture: {
            double v = 0.0;
            for (const auto& [part, weight] : parts_) v += weight * part.mean_log_abs_a();
            return v;
        }
    }
    throw std::logic_error("CoinDistribution: bad kind");
}

UnitaryCoin DisorderRealization::coin_at(long long x) const {
    if (!overrides_.empty()) {
        const auto it = overrides_.find(x);
        if (it != overrides_.end()) return it->second;
    }
    RngStream stream = site_stream(seed_, x);
    return dist_.sample(stream);
}

const UnitaryCoin& CoinWindow::at(long long x) {
    auto& side = (x >= 0) ? pos_ : neg_;
    const size_t idx = static_cast<size_t>((x >= 0) ? x : -x - 1);
    if (idx >= side.size()) side.resize(idx + 1);
    if (!side[idx]) side[idx] = r_->coin_at(x);
    return *side[idx];
}

}  // namespace locwalk
