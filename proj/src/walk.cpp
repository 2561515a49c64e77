#include "locwalk/walk.hpp"

#include <cmath>

#include "locwalk/errors.hpp"
#include "locwalk/parallel.hpp"

namespace locwalk {

cplx WalkState::amplitude_at(long long site, int spin) const {
    if (site < x_min || site > x_max()) return 0.0;
    return amp[static_cast<size_t>(2 * (site - x_min) + spin)];
}

double WalkState::norm() const {
    double s = 0.0;
    for (const cplx& z : amp) s += std::norm(z);
    return std::sqrt(s);
}

WalkState localized_state(long long x0, int spin) {
    WalkState st;
    st.x_min = x0;
    st.amp.assign(2, 0.0);
    st.amp[static_cast<size_t>(spin)] = 1.0;
    return st;
}

void step_inplace(WalkState& state, CoinWindow& coins) {
    const long long new_min = state.x_min - 1;
    const long long new_len = static_cast<long long>(state.amp.size()) / 2 + 2;
    std::vector<cplx> next(static_cast<size_t>(2 * new_len), 0.0);

    const long long old_min = state.x_min;
    const long long old_max = state.x_max();
    for (long long x = new_min; x < new_min + new_len; ++x) {
        // shift: e_− arrives from the right neighbour, e_+ from the left
        const cplx sm = (x + 1 >= old_min && x + 1 <= old_max)
                            ? state.amp[static_cast<size_t>(2 * (x + 1 - old_min))]
                            : cplx(0.0);
        const cplx sp = (x - 1 >= old_min && x - 1 <= old_max)
                            ? state.amp[static_cast<size_t>(2 * (x - 1 - old_min) + 1)]
                            : cplx(0.0);
        if (sm == cplx(0.0) && sp == cplx(0.0)) continue;
        const UnitaryCoin& u = coins.at(x);
        const size_t k = static_cast<size_t>(2 * (x - new_min));
        next[k] = u.a() * sm + u.b() * sp;
        next[k + 1] = u.c() * sm + u.d() * sp;
    }
    state.amp = std::move(next);
    state.x_min = new_min;
    ++state.time;
}

WalkState step(const WalkState& state, const DisorderRealization& r) {
    WalkState out = state;
    CoinWindow coins(r);
    step_inplace(out, coins);
    return out;
}

cplx amplitude(const DisorderRealization& r, long long x, int i, long long y, int j,
               long long t) {
    if (t < 0) throw std::invalid_argument("amplitude: negative time");
    if (std::llabs(x - y) > t) return 0.0;  // light cone, exact
    WalkState st = localized_state(x, i);
    CoinWindow coins(r);
    for (long long s = 0; s < t; ++s) step_inplace(st, coins);
    return st.amplitude_at(y, j);
}

double sup_amplitude(const DisorderRealization& r, long long x, int i, long long y, int j,
                     long long T) {
    if (T < std::llabs(x - y)) throw InsufficientHorizonError("sup_amplitude", T, std::llabs(x - y));
    WalkState st = localized_state(x, i);
    CoinWindow coins(r);
    double best = std::abs(st.amplitude_at(y, j));
    for (long long t = 1; t <= T; ++t) {
        step_inplace(st, coins);
        best = std::max(best, std::abs(st.amplitude_at(y, j)));
    }
    return best;
}

double variance(const WalkState& state) {
    double p1 = 0.0, p2 = 0.0;
    for (long long x = state.x_min; x <= state.x_max(); ++x) {
        const size_t k = static_cast<size_t>(2 * (x - state.x_min));
        const double p = std::norm(state.amp[k]) + std::norm(state.amp[k + 1]);
        p1 += p * static_cast<double>(x);
        p2 += p * static_cast<double>(x) * static_cast<double>(x);
    }
    return p2 - p1 * p1;
}

LocalizationProfile localization_profile(const CoinDistribution& mu,
                                         const std::vector<long long>& distances, long long T,
                                         int realizations, std::uint64_t seed, int threads) {
    if (realizations < 1)
        throw std::invalid_argument("localization_profile: need at least one realization");
    long long dmax = 0;
    for (long long d : distances) dmax = std::max(dmax, std::llabs(d));
    if (T < dmax) throw InsufficientHorizonError("localization_profile", T, dmax);

    const size_t nd = distances.size();
    std::vector<std::vector<double>> per_real(static_cast<size_t>(realizations),
                                              std::vector<double>(nd, 0.0));

    for_each_index(realizations, threads, [&](long long ri) {
        DisorderRealization r(mu, realization_seed(seed, static_cast<std::uint64_t>(ri)));
        CoinWindow coins(r);
        WalkState st = localized_state(0, spin_plus);
        std::vector<double> sup_pos(nd, 0.0), sup_neg(nd, 0.0);
        auto record = [&](const WalkState& s) {
            for (size_t k = 0; k < nd; ++k) {
                const long long d = distances[k];
                const double ap = std::hypot(std::abs(s.amplitude_at(d, spin_minus)),
                                             std::abs(s.amplitude_at(d, spin_plus)));
                const double an = std::hypot(std::abs(s.amplitude_at(-d, spin_minus)),
                                             std::abs(s.amplitude_at(-d, spin_plus)));
                sup_pos[k] = std::max(sup_pos[k], ap);
                sup_neg[k] = std::max(sup_neg[k], an);
            }
        };
        record(st);
        for (long long t = 1; t <= T; ++t) {
            step_inplace(st, coins);
            record(st);
        }
        for (size_t k = 0; k < nd; ++k) per_real[static_cast<size_t>(ri)][k] =
            0.5 * (sup_pos[k] + sup_neg[k]);
    });

    LocalizationProfile prof;
    prof.distances = distances;
    prof.realization_count = realizations;
    prof.horizon = T;
    prof.mean_sup_amplitude.resize(nd);
    prof.stderr_.resize(nd);
    for (size_t k = 0; k < nd; ++k) {
        double mean = 0.0;
        for (int rr = 0; rr < realizations; ++rr) mean += per_real[static_cast<size_t>(rr)][k];
        mean /= realizations;
        double var = 0.0;
        for (int rr = 0; rr < realizations; ++rr) {
            const double dv = per_real[static_cast<size_t>(rr)][k] - mean;
            var += dv * dv;
        }
        var = (realizations > 1) ? var / (realizations - 1) : 0.0;
        prof.mean_sup_amplitude[k] = mean;
        prof.stderr_[k] = std::sqrt(var / realizations);
    }
    return prof;
}

}  // namespace locwalk
