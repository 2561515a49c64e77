#include "locwalk/groupcheck.hpp"

#include <cmath>
#include <stdexcept>

#include "locwalk/errors.hpp"
#include "locwalk/transfer.hpp"

namespace locwalk {

namespace {

/// Acceptance margin for expansion certificates. Eigenvalue moduli of
/// near-parabolic words carry sqrt(eps) ~ 1e-8 noise from the discriminant,
/// so the search demands clearance well above that floor.
constexpr double kExpansionMargin = 1e-6;

Mat2 word_matrix(const std::vector<WordFactor>& word, cplx z) {
    Mat2 acc = Mat2::identity();
    for (const WordFactor& f : word) {
        const Mat2 t = tau(f.coin, z).m;
        acc = ((f.power > 0) ? t : t.inverse()) * acc;
    }
    return acc;
}

/// Breadth-first enumeration of words over atoms and their inverses.
std::optional<NoncompactCertificate> discrete_word_search(
    const std::vector<std::pair<UnitaryCoin, double>>& atoms, cplx z, int max_word_length,
    int trials) {
    struct Node {
        Mat2 m;
        std::vector<WordFactor> word;
    };
    std::vector<Node> frontier{{Mat2::identity(), {}}};
    int budget = trials;
    for (int len = 1; len <= max_word_length && budget > 0; ++len) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (const auto& [coin, weight] : atoms) {
                if (coin.is_flip()) continue;
                for (int power : {1, -1}) {
                    if (--budget < 0) return std::nullopt;
                    const Mat2 t = tau(coin, z).m;
                    Node child{((power > 0) ? t : t.inverse()) * node.m, node.word};
                    child.word.push_back({coin, power});
                    const double radius = mat2_spectral_radius(child.m);
                    if (radius > 1.0 + kExpansionMargin)
                        return NoncompactCertificate{child.word, radius};
                    next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Certificate of the form T(r,α,β,γ)·T(r′,α,β,γ)⁻¹: with shared phases and
/// r ≠ r′ the eigenvalues f ± g satisfy max|λ| = f + |g| > 1 with
/// f = √((1+r²)(1+r′²)) − rr′ and g = r√(1+r′²) − r′√(1+r²).
std::optional<NoncompactCertificate> continuous_pair_certificate(cplx z, std::uint64_t seed) {
    RngStream stream(stream_key(seed, stream_tag::scratch, 0x6e63));
    UnitaryCoin u = sample_haar(stream);
    for (int tries = 0; u.is_flip() && tries < 8; ++tries) u = sample_haar(stream);
    const Mat2 t = tau(u, z).m;

    const double abs_z = std::abs(z);
    const double r = std::abs(t.m01);
    const double rp = r + 1.0;
    const double alpha = std::arg(t.m00);
    const double beta = std::arg(t.m01);
    const double gamma = std::arg(t.m10);
    const Mat2 tp{std::sqrt(1.0 + rp * rp) * std::polar(1.0, alpha) / abs_z,
                  rp * std::polar(1.0, beta), rp * std::polar(1.0, gamma),
                  std::sqrt(1.0 + rp * rp) * std::polar(1.0, beta + gamma - alpha) * abs_z};
    const UnitaryCoin up = tau_inv(TransferMatrix{tp, z});

    NoncompactCertificate cert;
    cert.word = {{up, -1}, {u, 1}};  // right to left: τ(u) first
    cert.spectral_radius = mat2_spectral_radius(word_matrix(cert.word, z));
    if (cert.spectral_radius > 1.0 + kExpansionMargin) return cert;
    return std::nullopt;
}

std::vector<UnitaryCoin> generator_pool(const CoinDistribution& mu, std::uint64_t seed,
                                        int count) {
    std::vector<UnitaryCoin> pool;
    if (mu.kind() == CoinDistribution::Kind::fixed ||
        mu.kind() == CoinDistribution::Kind::discrete) {
        for (const auto& [coin, weight] : mu.atoms())
            if (!coin.is_flip()) pool.push_back(coin);
    } else {
        RngStream stream(stream_key(seed, stream_tag::scratch, 0x6972));
        for (int k = 0; k < count; ++k) {
            const UnitaryCoin u = mu.sample(stream);
            if (!u.is_flip()) pool.push_back(u);
        }
    }
    return pool;
}

}  // namespace

std::optional<NoncompactCertificate> noncompactness_search(const CoinDistribution& mu, cplx z,
                                                           int max_word_length, int trials,
                                                           std::uint64_t seed) {
    if (mu.reflectivity() > 0.0) throw FlipEncounteredError("noncompactness_search");
    if (mu.has_continuous_part()) {
        // open support: a Haar draw and its diagonal-ratio perturbation are
        // both in supp(μ), so the constructed pair certifies directly
        if (auto cert = continuous_pair_certificate(z, seed)) return cert;
    }
    std::vector<std::pair<UnitaryCoin, double>> atoms;
    if (mu.kind() == CoinDistribution::Kind::fixed ||
        mu.kind() == CoinDistribution::Kind::discrete) {
        atoms = mu.atoms();
    } else if (mu.kind() == CoinDistribution::Kind::mixture) {
        for (const auto& [part, weight] : mu.parts())
            if (part.kind() == CoinDistribution::Kind::fixed ||
                part.kind() == CoinDistribution::Kind::discrete)
                for (const auto& atom : part.atoms()) atoms.push_back(atom);
    }
    if (!atoms.empty())
        if (auto cert = discrete_word_search(atoms, z, max_word_length, trials)) return cert;
    return std::nullopt;
}

double verify_certificate(const NoncompactCertificate& cert, cplx z) {
    return mat2_spectral_radius(word_matrix(cert.word, z));
}

std::array<double, 2> two_coin_closed_form(cplx a, cplx b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10)
        throw std::invalid_argument("two_coin_closed_form: |a|^2 + |b|^2 must be 1");
    if (std::abs(a) <= kFlipThreshold)
        throw std::invalid_argument("two_coin_closed_form: a must be nonzero");
    const double ib = b.imag();
    const cplx root = std::sqrt(cplx(std::norm(a) - ib * ib, 0.0));
    const double lp = std::abs(cplx(0.0, ib) + root) / std::abs(a);
    const double lm = std::abs(cplx(0.0, ib) - root) / std::abs(a);
    return {std::max(lp, lm), std::min(lp, lm)};
}

IrreducibilityResult irreducibility_orbit_test(const CoinDistribution& mu, cplx z, int trials,
                                               std::uint64_t seed) {
    if (mu.reflectivity() > 0.0) throw FlipEncounteredError("irreducibility_orbit_test");
    IrreducibilityResult result;
    constexpr double kDistinct = 1e-6;

    const std::vector<UnitaryCoin> pool = generator_pool(mu, seed, 8);
    if (pool.empty()) return result;

    RngStream stream(stream_key(seed, stream_tag::scratch, 0x6f72));
    auto random_point = [&] {
        return ProjectivePoint(Vec2{cplx(stream.next_gaussian(), stream.next_gaussian()),
                                    cplx(stream.next_gaussian(), stream.next_gaussian())});
    };

    // structured starts: eigenvectors of the generators and of the
    // cross-products g_i·g_j⁻¹ and g_i⁻¹·g_j, the only candidates for short
    // invariant orbits
    std::vector<ProjectivePoint> starts;
    auto push_eigvecs = [&](const Mat2& m) {
        const EigResult e = mat2_eig(m);
        starts.emplace_back(e.vectors[0]);
        starts.emplace_back(e.vectors[1]);
    };
    for (const UnitaryCoin& g : pool) push_eigvecs(tau(g, z).m);
    double proximity = std::numeric_limits<double>::quiet_NaN();
    if (pool.size() >= 2) {
        const Mat2 t0 = tau(pool[0], z).m;
        const Mat2 t1 = tau(pool[1], z).m;
        const Mat2 m1 = t0 * t1.inverse();
        const Mat2 m2 = t0.inverse() * t1;
        push_eigvecs(m1);
        push_eigvecs(m2);
        const EigResult e1 = mat2_eig(m1);
        const EigResult e2 = mat2_eig(m2);
        proximity = std::numeric_limits<double>::infinity();
        for (const Vec2& v1 : e1.vectors)
            for (const Vec2& v2 : e2.vectors)
                proximity = std::min(proximity, projective_distance(v1, v2));
    }
    if (mu.kind() == CoinDistribution::Kind::discrete && mu.atoms().size() == 2)
        result.exceptional_proximity = proximity;
    const int random_starts = std::max(1, trials / 4);
    for (int k = 0; k < random_starts; ++k) starts.push_back(random_point());

    std::optional<OrbitWitness> best;
    for (const ProjectivePoint& start : starts) {
        std::vector<ProjectivePoint> orbit{start};
        Vec2 v = start.rep();
        bool found = false;
        for (int step = 0; step < trials && !found; ++step) {
            const size_t gi = static_cast<size_t>(stream.next_u64() % (2 * pool.size()));
            const Mat2 t = tau(pool[gi % pool.size()], z).m;
            v = ((gi < pool.size()) ? t : t.inverse()) * v;
            const double n = v.norm();
            v = v / n;
            const ProjectivePoint p{v};
            bool distinct = true;
            for (const ProjectivePoint& q : orbit)
                if (projective_distance(p, q) < kDistinct) distinct = false;
            if (distinct) orbit.push_back(p);
            if (orbit.size() >= 3) found = true;
        }
        if (!found) return result;  // inconclusive: some start stayed on <= 2 points
        if (!best) {
            double min_delta = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j)
                    min_delta = std::min(min_delta, projective_distance(orbit[i], orbit[j]));
            best = OrbitWitness{start, {orbit[0], orbit[1], orbit[2]}, min_delta, 0};
        }
    }
    if (best) {
        best->starts_tested = static_cast<int>(starts.size());
        result.witness = best;
    }
    return result;
}

namespace {

/// Midpoint refinement of (1/π)∫₀^π |sin θ|^{−ζ} dθ with divergence detected
/// from the increment ratio (increments shrink geometrically iff ζ < 1).
std::pair<bool, double> haar_norm_bound_integral(double zeta) {
    double prev = 0.0;
    double prev_inc = 0.0;
    double value = 0.0;
    for (int level = 6; level <= 24; ++level) {
        const long long panels = 1LL << level;
        const double h = M_PI / static_cast<double>(panels);
        double sum = 0.0;
        for (long long k = 0; k < panels; ++k) {
            const double theta = (static_cast<double>(k) + 0.5) * h;
            sum += std::pow(std::sin(theta), -zeta);
        }
        const double cur = sum * h / M_PI;
        const double inc = cur - prev;
        if (level > 7) {
            const double ratio = inc / prev_inc;
            if (std::abs(inc) < 1e-9 * std::abs(cur)) return {true, cur};
            if (ratio < 0.999) {
                // geometric tail; extrapolate the limit
                value = cur + inc * ratio / (1.0 - ratio);
                if (std::abs(inc) < 1e-6 * std::abs(value)) return {true, value};
            } else {
                return {false, std::numeric_limits<double>::quiet_NaN()};
            }
        }
        prev = cur;
        prev_inc = inc;
    }
    return {true, value};
}

}  // namespace

ZetaResult zeta_integrability(const CoinDistribution& mu, double zeta) {
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta_integrability: zeta must be positive");
    ZetaResult out;
    out.zeta = zeta;
    switch (mu.kind()) {
        case CoinDistribution::Kind::haar: {
            const auto [finite, integral] = haar_norm_bound_integral(zeta);
            out.finite = finite;
            if (finite) out.value = std::pow(2.0, zeta) * integral;
            return out;
        }
        case CoinDistribution::Kind::fixed:
        case CoinDistribution::Kind::discrete: {
            double acc = 0.0;
            for (const auto& [coin, weight] : mu.atoms()) {
                if (coin.is_flip()) return out;  // divergent
                // ‖τ_θ(U)‖ = (1 + |c|)/|a| independently of the unit-circle θ
                acc += weight *
                       std::pow((1.0 + std::abs(coin.c())) / std::abs(coin.a()), zeta);
            }
            out.finite = true;
            out.value = acc;
            return out;
        }
        case CoinDistribution::Kind::mixture: {
            double acc = 0.0;
            for (const auto& [part, weight] : mu.parts()) {
                const ZetaResult sub = zeta_integrability(part, zeta);
                if (!sub.finite) return out;
                acc += weight * sub.value;
            }
            out.finite = true;
            out.value = acc;
            return out;
        }
    }
    throw std::logic_error("zeta_integrability: bad kind");
}

HypothesisReport hypothesis_report(const CoinDistribution& mu, cplx z, double zeta,
                                   int max_word_length, int trials, std::uint64_t seed) {
    HypothesisReport rep;
    rep.z = z;
    rep.noncompact = noncompactness_search(mu, z, max_word_length, trials, seed);
    rep.irreducible = irreducibility_orbit_test(mu, z, trials, seed);
    rep.zeta = zeta_integrability(mu, zeta);
    return rep;
}

}  // namespace locwalk
