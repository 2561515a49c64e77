#include "locwalk/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "locwalk/dense.hpp"
#include "locwalk/errors.hpp"
#include "locwalk/parallel.hpp"
#include "locwalk/restriction.hpp"
#include "locwalk/transfer.hpp"

namespace locwalk {

namespace {

void require_no_flips(const CoinDistribution& mu, const char* op) {
    if (mu.reflectivity() > 0.0) throw FlipEncounteredError(op);
}

struct MeanStderr {
    double mean = 0.0;
    double se = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
    MeanStderr out;
    const size_t n = xs.size();
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(n);
    if (n > 1) {
        double var = 0.0;
        for (double x : xs) var += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(var / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    return out;
}

double chain_log_growth(const CoinDistribution& mu, cplx z, long long n, RngStream& stream,
                        Vec2 v, int renorm_every) {
    double acc = 0.0;
    {
        const double s = v.norm();
        v = v / s;
    }
    int since = 0;
    for (long long i = 0; i < n; ++i) {
        const UnitaryCoin u = mu.sample(stream);
        v = tau(u, z).m * v;
        if (++since == renorm_every) {
            const double s = v.norm();
            acc += std::log(s);
            v = v / s;
            since = 0;
        }
    }
    acc += std::log(v.norm());
    return acc / static_cast<double>(n);
}

/// Slope and R² of y against x by least squares.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, r2};
}

}  // namespace

LyapunovEstimate estimate_lyapunov(const CoinDistribution& mu, cplx z, long long chain_length,
                                   int realizations, std::uint64_t seed, int threads,
                                   int renorm_every, Vec2 start) {
    require_no_flips(mu, "estimate_lyapunov");
    if (chain_length < 1 || realizations < 1 || renorm_every < 1)
        throw std::invalid_argument("estimate_lyapunov: positive chain length and realizations");

    std::vector<double> per_real(static_cast<size_t>(realizations), 0.0);
    for_each_index(realizations, threads, [&](long long i) {
        RngStream stream(realization_seed(seed, static_cast<std::uint64_t>(i)));
        per_real[static_cast<size_t>(i)] =
            chain_log_growth(mu, z, chain_length, stream, start, renorm_every);
    });

    const MeanStderr ms = mean_stderr(per_real);
    return LyapunovEstimate{z, ms.mean, ms.se, chain_length, realizations};
}

std::vector<ProjectivePoint> invariant_measure_sample(const CoinDistribution& mu, cplx z,
                                                      long long burn_in, long long samples,
                                                      std::uint64_t seed) {
    require_no_flips(mu, "invariant_measure_sample");
    RngStream stream(stream_key(seed, stream_tag::scratch, 0));
    Vec2 v{1.0, 0.0};
    std::vector<ProjectivePoint> out;
    out.reserve(static_cast<size_t>(samples));
    for (long long k = 0; k < burn_in + samples; ++k) {
        const UnitaryCoin u = mu.sample(stream);
        v = tau(u, z).m * v;
        const double s = v.norm();
        v = v / s;
        if (k >= burn_in) out.emplace_back(v);
    }
    return out;
}

double lyapunov_via_invariant(const CoinDistribution& mu, cplx z,
                              const std::vector<ProjectivePoint>& nu_samples,
                              std::uint64_t seed, int draws_per_sample) {
    require_no_flips(mu, "lyapunov_via_invariant");
    if (nu_samples.empty())
        throw std::invalid_argument("lyapunov_via_invariant: empty sample set");
    RngStream stream(stream_key(seed, stream_tag::scratch, 1));
    double acc = 0.0;
    for (const ProjectivePoint& p : nu_samples) {
        double phi = 0.0;
        for (int d = 0; d < draws_per_sample; ++d) {
            const UnitaryCoin u = mu.sample(stream);
            phi += std::log((tau(u, z).m * p.rep()).norm());
        }
        acc += phi / draws_per_sample;
    }
    return acc / static_cast<double>(nu_samples.size());
}

LyapunovEstimate lyapunov_via_invariant_mc(const CoinDistribution& mu, cplx z, int chains,
                                           long long burn_in, long long samples_per_chain,
                                           std::uint64_t seed, int threads) {
    require_no_flips(mu, "lyapunov_via_invariant");
    std::vector<double> per_chain(static_cast<size_t>(chains), 0.0);
    for_each_index(chains, threads, [&](long long c) {
        const std::uint64_t sub = realization_seed(seed, static_cast<std::uint64_t>(c));
        const auto pts = invariant_measure_sample(mu, z, burn_in, samples_per_chain, sub);
        per_chain[static_cast<size_t>(c)] = lyapunov_via_invariant(mu, z, pts, sub ^ 0x517f, 8);
    });
    const MeanStderr ms = mean_stderr(per_chain);
    return LyapunovEstimate{z, ms.mean, ms.se, samples_per_chain, chains};
}

DOSHistogram density_of_states(const CoinDistribution& mu, int N, int realizations, int bins,
                               std::uint64_t seed, int threads, double eta_L, double eta_R) {
    if (N < 4) throw std::invalid_argument("density_of_states: N must be >= 4");
    if (bins < 1 || realizations < 1)
        throw std::invalid_argument("density_of_states: positive bins and realizations");

    const double width = 2.0 * M_PI / bins;
    std::vector<std::vector<double>> per_real(static_cast<size_t>(realizations),
                                              std::vector<double>(static_cast<size_t>(bins), 0.0));
    for_each_index(realizations, threads, [&](long long i) {
        DisorderRealization r(mu, realization_seed(seed, static_cast<std::uint64_t>(i)));
        const FiniteWalk fw = build_finite_walk(r, N, eta_L, eta_R);
        const Eigen::VectorXcd vals = unitary_eigvals(fw.matrix());
        auto& hist = per_real[static_cast<size_t>(i)];
        for (Eigen::Index k = 0; k < vals.size(); ++k) {
            int b = static_cast<int>(phase_2pi(vals[k]) / width);
            b = std::clamp(b, 0, bins - 1);
            hist[static_cast<size_t>(b)] += 1.0 / static_cast<double>(vals.size());
        }
    });

    DOSHistogram out;
    out.N_used = N;
    out.realizations = realizations;
    out.bin_edges.resize(static_cast<size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b) out.bin_edges[static_cast<size_t>(b)] = b * width;
    out.masses.assign(static_cast<size_t>(bins), 0.0);
    out.stderr_.assign(static_cast<size_t>(bins), 0.0);
    for (int b = 0; b < bins; ++b) {
        std::vector<double> xs(static_cast<size_t>(realizations));
        for (int i = 0; i < realizations; ++i)
            xs[static_cast<size_t>(i)] = per_real[static_cast<size_t>(i)][static_cast<size_t>(b)];
        const MeanStderr ms = mean_stderr(xs);
        out.masses[static_cast<size_t>(b)] = ms.mean;
        out.stderr_[static_cast<size_t>(b)] = ms.se;
    }
    // normalize away the O(eps) rounding drift so downstream cumulative sums end at 1
    double total = 0.0;
    for (double m : out.masses) total += m;
    for (double& m : out.masses) m /= total;
    return out;
}

IDSCurve integrated_dos(const DOSHistogram& hist) {
    IDSCurve ids;
    const size_t bins = hist.masses.size();
    ids.phases.resize(bins);
    ids.values.resize(bins);
    double acc = 0.0;
    for (size_t b = 0; b < bins; ++b) {
        acc += hist.masses[b];
        ids.phases[b] = hist.bin_edges[b + 1];
        ids.values[b] = std::min(acc, 1.0);
    }
    ids.values.back() = 1.0;
    return ids;
}

HoelderFit ids_hoelder_probe(const IDSCurve& ids) {
    const size_t n = ids.values.size();
    const double dphi = ids.phases[1] - ids.phases[0];
    HoelderFit fit;
    for (size_t w = 1; w < n / 2; w *= 2) {
        double worst = 0.0;
        for (size_t b = 0; b + w < n; ++b)
            worst = std::max(worst, ids.values[b + w] - ids.values[b]);
        fit.scale.push_back(static_cast<double>(w) * dphi);
        fit.increment.push_back(worst);
    }
    std::vector<double> lx, ly;
    for (size_t k = 0; k < fit.scale.size(); ++k) {
        if (fit.increment[k] <= 0.0) continue;
        lx.push_back(std::log(fit.scale[k]));
        ly.push_back(std::log(fit.increment[k]));
    }
    if (lx.size() >= 2) std::tie(fit.exponent, fit.r2) = fit_line(lx, ly);
    return fit;
}

ThoulessValue thouless_rhs(const DOSHistogram& hist, const CoinDistribution& mu, cplx z) {
    const double abs_z = std::abs(z);
    const double phase = phase_2pi(z);
    const size_t bins = hist.masses.size();
    if (std::abs(abs_z - 1.0) < 1e-12) {
        // on the circle the kernel is singular at the atoms; demand one bin
        // of clearance from every bin center
        for (size_t b = 0; b < bins; ++b) {
            double d = std::abs(phase - hist.bin_center(b));
            d = std::min(d, 2.0 * M_PI - d);
            if (d < hist.bin_width() && hist.masses[b] > 0.0)
                throw KernelSingularityError("thouless_rhs");
        }
    }
    ThoulessValue out;
    for (size_t b = 0; b < bins; ++b) {
        if (hist.masses[b] == 0.0) continue;
        out.kernel +=
            hist.masses[b] * std::log(std::abs(z - std::polar(1.0, hist.bin_center(b))));
    }
    out.coin_term = mu.mean_log_abs_a();
    out.log_abs_z = std::log(abs_z);
    out.value = 2.0 * out.kernel - out.coin_term - out.log_abs_z;
    return out;
}

ThoulessValue thouless_rhs_circle(const DOSHistogram& hist, const CoinDistribution& mu,
                                  double phase) {
    // Richardson step from ε and ε/2 assuming an O(ε) boundary term; average
    // the two extrapolants from {0.02, 0.01, 0.005}.
    const double eps[3] = {0.02, 0.01, 0.005};
    ThoulessValue v[3];
    for (int k = 0; k < 3; ++k)
        v[k] = thouless_rhs(hist, mu, std::polar(1.0 + eps[k], phase));
    ThoulessValue out;
    auto extrap = [](double f1, double f2) { return 2.0 * f2 - f1; };
    out.kernel = 0.5 * (extrap(v[0].kernel, v[1].kernel) + extrap(v[1].kernel, v[2].kernel));
    out.coin_term = v[0].coin_term;
    out.log_abs_z = 0.0;
    out.value = 2.0 * out.kernel - out.coin_term;
    return out;
}

GammaModulusProbe hoelder_probe_gamma(const CoinDistribution& mu,
                                      const std::vector<double>& phases, long long chain_length,
                                      int realizations, std::uint64_t seed, int threads) {
    if (phases.size() < 8) throw std::invalid_argument("hoelder_probe_gamma: need >= 8 phases");
    GammaModulusProbe probe;
    probe.phases = phases;
    probe.gamma.resize(phases.size());
    probe.stderr_.resize(phases.size());
    for (size_t k = 0; k < phases.size(); ++k) {
        const LyapunovEstimate est = estimate_lyapunov(mu, std::polar(1.0, phases[k]),
                                                       chain_length, realizations, seed, threads);
        probe.gamma[k] = est.gamma_hat;
        probe.stderr_[k] = est.stderr_;
    }
    for (size_t s = 1; s < phases.size() / 2; s *= 2) {
        double acc = 0.0;
        size_t count = 0;
        for (size_t k = 0; k + s < phases.size(); ++k) {
            acc += std::abs(probe.gamma[k + s] - probe.gamma[k]);
            ++count;
        }
        probe.fit.scale.push_back(std::abs(phases[s] - phases[0]));
        probe.fit.increment.push_back(acc / static_cast<double>(count));
    }
    std::vector<double> lx, ly;
    for (size_t k = 0; k < probe.fit.scale.size(); ++k) {
        if (probe.fit.increment[k] <= 0.0) continue;
        lx.push_back(std::log(probe.fit.scale[k]));
        ly.push_back(std::log(probe.fit.increment[k]));
    }
    if (lx.size() >= 2) std::tie(probe.fit.exponent, probe.fit.r2) = fit_line(lx, ly);
    return probe;
}

}  // namespace locwalk
