#include "locwalk/restriction.hpp"

#include <cmath>
#include <stdexcept>

#include "locwalk/errors.hpp"

namespace locwalk {

FiniteWalk::FiniteWalk(int N, double eta_L, double eta_R, std::vector<UnitaryCoin> coins)
    : n_(N),
      eta_l_(eta_L),
      eta_r_(eta_R),
      coins_(std::move(coins)),
      boundary_l_(UnitaryCoin::flip(eta_L)),
      boundary_r_(UnitaryCoin::flip(eta_R)) {
    if (N < 0) throw std::invalid_argument("FiniteWalk: N must be >= 0");
    if (coins_.size() != static_cast<size_t>(2 * N + 1))
        throw std::invalid_argument("FiniteWalk: need one coin per site in [-N, N]");

    mat_ = Eigen::MatrixXcd::Zero(dim(), dim());
    // W = U·S in f-coordinates: column f_{2x} feeds (a_{x−1}, c_{x−1}) into
    // rows (2(x−1), 2(x−1)+1); column f_{2x+1} feeds (b_{x+1}, d_{x+1}) into
    // rows (2(x+1), 2(x+1)+1). Entries whose row leaves the window are zero
    // because the boundary coins are flips, so the truncation stays unitary.
    for (long long x = -n_; x <= n_ + 1; ++x) {
        const long long col = 2 * x;
        const UnitaryCoin& u = coin(x - 1);
        for (auto [row, val] : {std::pair<long long, cplx>{2 * (x - 1), u.a()},
                                {2 * (x - 1) + 1, u.c()}}) {
            if (holds_f(row)) mat_(index_of(row), index_of(col)) = val;
        }
    }
    for (long long x = -n_ - 1; x <= n_; ++x) {
        const long long col = 2 * x + 1;
        const UnitaryCoin& u = coin(x + 1);
        for (auto [row, val] : {std::pair<long long, cplx>{2 * (x + 1), u.b()},
                                {2 * (x + 1) + 1, u.d()}}) {
            if (holds_f(row)) mat_(index_of(row), index_of(col)) = val;
        }
    }
}

const UnitaryCoin& FiniteWalk::coin(long long site) const {
    if (site == -(n_ + 1)) return boundary_l_;
    if (site == n_ + 1) return boundary_r_;
    if (site < -n_ || site > n_) throw SiteOutOfRangeError("FiniteWalk::coin", site);
    return coins_[static_cast<size_t>(site + n_)];
}

void FiniteWalk::diagonalize() {
    if (spectrum_) return;
    UnitaryEig eig = unitary_eig(mat_);
    spectrum_ = SpectralData{std::move(eig.eigenvalues), std::move(eig.eigenvectors)};
}

const SpectralData& FiniteWalk::spectrum() const {
    if (!spectrum_) throw std::logic_error("FiniteWalk: diagonalize() has not been called");
    return *spectrum_;
}

FiniteWalk build_finite_walk(const DisorderRealization& r, int N, double eta_L, double eta_R) {
    std::vector<UnitaryCoin> coins;
    coins.reserve(static_cast<size_t>(2 * N + 1));
    for (long long x = -N; x <= N; ++x) coins.push_back(r.coin_at(x));
    return FiniteWalk(N, eta_L, eta_R, std::move(coins));
}

SpectralSlice spectral_measure(const FiniteWalk& fw, long long x, int i, long long y, int j) {
    const long long fx = f_index(x, i);
    const long long fy = f_index(y, j);
    if (!fw.holds_f(fx)) throw SiteOutOfRangeError("spectral_measure", x);
    if (!fw.holds_f(fy)) throw SiteOutOfRangeError("spectral_measure", y);
    const SpectralData& sd = fw.spectrum();

    SpectralSlice slice;
    const int d = fw.dim();
    const int row = fw.index_of(fy);
    const int col = fw.index_of(fx);
    int k = 0;
    while (k < d) {
        // merge numerically coincident eigenvalues into one point mass
        int k2 = k + 1;
        while (k2 < d &&
               phase_2pi(sd.eigenvalues[k2]) - phase_2pi(sd.eigenvalues[k2 - 1]) < 1e-9)
            ++k2;
        cplx mass = 0.0;
        for (int l = k; l < k2; ++l)
            mass += sd.eigenvectors(row, l) * std::conj(sd.eigenvectors(col, l));
        slice.points.push_back(sd.eigenvalues[k]);
        slice.masses.push_back(mass);
        k = k2;
    }
    return slice;
}

double wiener_time_average(const SpectralSlice& slice, long long T) {
    if (T < 1) throw std::invalid_argument("wiener_time_average: T must be >= 1");
    const size_t n = slice.points.size();
    std::vector<cplx> powers(n, 1.0);
    double acc = 0.0;
    for (long long t = 0; t <= T; ++t) {
        cplx moment = 0.0;
        for (size_t k = 0; k < n; ++k) {
            moment += slice.masses[k] * powers[k];
            powers[k] *= slice.points[k];
        }
        acc += std::norm(moment);
    }
    return acc / static_cast<double>(T + 1);
}

double wiener_point_mass_sum(const SpectralSlice& slice) {
    double s = 0.0;
    for (const cplx& m : slice.masses) s += std::norm(m);
    return s;
}

std::pair<double, double> wiener_average(const FiniteWalk& fw, long long x, int i, long long y,
                                         int j, long long T) {
    const SpectralSlice slice = spectral_measure(fw, x, i, y, j);
    return {wiener_time_average(slice, T), wiener_point_mass_sum(slice)};
}

std::vector<EigenfunctionEnvelope> eigenfunction_decay(const FiniteWalk& fw) {
    const SpectralData& sd = fw.spectrum();
    const int d = fw.dim();
    std::vector<EigenfunctionEnvelope> out;
    out.reserve(static_cast<size_t>(d));

    const long long site_lo = -(fw.N() + 1);
    const long long site_hi = fw.N() + 1;
    for (int k = 0; k < d; ++k) {
        std::vector<double> site_amp;
        for (long long s = site_lo; s <= site_hi; ++s) {
            double v = 0.0;
            for (int spin : {spin_minus, spin_plus}) {
                const long long f = f_index(s, spin);
                if (fw.holds_f(f)) v = std::max(v, std::abs(sd.eigenvectors(fw.index_of(f), k)));
            }
            site_amp.push_back(v);
        }
        size_t peak = 0;
        for (size_t s = 1; s < site_amp.size(); ++s)
            if (site_amp[s] > site_amp[peak]) peak = s;

        EigenfunctionEnvelope env;
        env.peak_site = site_lo + static_cast<long long>(peak);
        const double peak_val = site_amp[peak];
        const size_t max_dist =
            std::max(peak, site_amp.size() - 1 - peak);
        env.by_distance.resize(max_dist + 1, 0.0);
        for (size_t s = 0; s < site_amp.size(); ++s) {
            const size_t dist = (s > peak) ? s - peak : peak - s;
            env.by_distance[dist] = std::max(env.by_distance[dist], site_amp[s] / peak_val);
        }
        out.push_back(std::move(env));
    }
    return out;
}

std::vector<double> participation_ratios(const FiniteWalk& fw) {
    const SpectralData& sd = fw.spectrum();
    const int d = fw.dim();
    std::vector<double> out;
    out.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double p4 = 0.0;
        for (long long s = -(fw.N() + 1); s <= fw.N() + 1; ++s) {
            double p = 0.0;
            for (int spin : {spin_minus, spin_plus}) {
                const long long f = f_index(s, spin);
                if (fw.holds_f(f)) p += std::norm(sd.eigenvectors(fw.index_of(f), k));
            }
            p4 += p * p;
        }
        out.push_back(1.0 / p4);
    }
    return out;
}

}  // namespace locwalk
