#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "locwalk/mat2.hpp"
#include "locwalk/rng.hpp"

namespace testsupport {

using locwalk::cplx;
using locwalk::Mat2;
using locwalk::RngStream;
using locwalk::Vec2;

inline Mat2 random_mat2(RngStream& s, double scale = 1.0) {
    auto g = [&] { return cplx(s.next_gaussian(), s.next_gaussian()) * scale; };
    return Mat2{g(), g(), g(), g()};
}

inline Vec2 random_vec2(RngStream& s) {
    return Vec2{cplx(s.next_gaussian(), s.next_gaussian()),
                cplx(s.next_gaussian(), s.next_gaussian())};
}

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double worst = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        worst = std::max(worst, std::abs(f - static_cast<double>(i) / n));
        worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return worst;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        worst = std::max(worst, std::abs(fa - fb));
    }
    return worst;
}

}  // namespace testsupport
