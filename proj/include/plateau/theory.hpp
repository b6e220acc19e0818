#ifndef PLATEAU_THEORY_HPP
#define PLATEAU_THEORY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plateau::theory {

/// Exact binomial coefficient; every intermediate product fits in
/// unsigned __int128 for n <= 64 and the result fits in uint64.
inline std::uint64_t exact_binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    if (n > 64) throw std::invalid_argument("exact_binomial: n must be <= 64");
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(acc);
}

inline double log_binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline double binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0.0;
    if (n <= 64) return static_cast<double>(exact_binomial(n, k));
    return std::exp(log_binomial(n, k));
}

/// Shared parameterization of the plateau analysis. q = min(k, n-k) is the
/// largest number of one/zero pairs a plateau member can swap and stay put.
struct PlateauParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t mu = 2;
    double chi = 1.0;
    double p_c = 0.0;

    std::uint32_t q() const { return std::min(k, n - k); }

    void validate() const {
        if (n == 0) throw std::invalid_argument("PlateauParams: n must be positive");
        if (k < 1 || k >= n)
            throw std::invalid_argument("PlateauParams: need 1 <= k < n");
        if (mu < 2) throw std::invalid_argument("PlateauParams: need mu >= 2");
        if (!(chi > 0.0) || chi > static_cast<double>(n))
            throw std::invalid_argument("PlateauParams: need 0 < chi <= n");
        if (p_c < 0.0 || p_c >= 1.0)
            throw std::invalid_argument("PlateauParams: need p_c in [0,1)");
    }
};

/// Probability that standard bit mutation flips exactly ell ones and ell
/// zeros of a plateau parent: C(k,ell) C(n-k,ell) (chi/n)^(2ell)
/// (1-chi/n)^(n-2ell), evaluated in log space.
inline double p_ell(const PlateauParams& p, std::uint32_t ell) {
    if (ell > p.q()) throw std::invalid_argument("p_ell: ell out of range");
    const double n = p.n;
    if (p.chi == n) {
        // stay-put factor is 0^(n-2ell)
        return (2 * ell == p.n)
                   ? std::exp(log_binomial(p.k, ell) + log_binomial(p.n - p.k, ell))
                   : 0.0;
    }
    const double log_term = log_binomial(p.k, ell) + log_binomial(p.n - p.k, ell) +
                            2.0 * ell * std::log(p.chi / n) +
                            (n - 2.0 * ell) * std::log1p(-p.chi / n);
    return std::exp(log_term);
}

/// p_0 .. p_q for standard bit mutation.
inline std::vector<double> standard_bit_p_ell(const PlateauParams& p) {
    std::vector<double> out(p.q() + 1);
    for (std::uint32_t ell = 0; ell <= p.q(); ++ell) out[ell] = p_ell(p, ell);
    return out;
}

inline double sum_p(std::span<const double> pells) {
    double s = 0.0;
    for (double v : pells) s += v;
    return s;
}

inline double sum_ell_p(std::span<const double> pells) {
    double s = 0.0;
    for (std::size_t ell = 0; ell < pells.size(); ++ell)
        s += static_cast<double>(ell) * pells[ell];
    return s;
}

struct BetaGamma {
    double beta;
    double gamma;
};

/// beta = 4(mu-1) sum ell p_ell;
/// gamma = sum p_ell (2/mu^2 + 2(mu-1) ell n / (mu^2 k (n-k))).
inline BetaGamma beta_gamma(const PlateauParams& p, std::span<const double> pells) {
    const double mu = static_cast<double>(p.mu);
    const double sp = sum_p(pells);
    const double sep = sum_ell_p(pells);
    const double beta = 4.0 * (mu - 1.0) * sep;
    const double gamma =
        (2.0 / (mu * mu)) * sp +
        (2.0 * (mu - 1.0) * static_cast<double>(p.n)) /
            (mu * mu * static_cast<double>(p.k) * static_cast<double>(p.n - p.k)) *
            sep;
    return {beta, gamma};
}

/// One-generation expectation of S for the mutation-only steady-state EA on
/// the trapped Jump variant: (1-gamma) S + beta.
inline double ea_drift(const PlateauParams& p, std::span<const double> pells,
                       double S) {
    if (S < 0.0) throw std::invalid_argument("ea_drift: S must be >= 0");
    const auto bg = beta_gamma(p, pells);
    return (1.0 - bg.gamma) * S + bg.beta;
}

/// Zero-drift diversity beta/gamma. Empty when the operator never flips a
/// one/zero pair (no equilibrium; S stays at its initial value).
inline std::optional<double> equilibrium_s0(const PlateauParams& p,
                                            std::span<const double> pells) {
    bool has_moving_mass = false;
    for (std::size_t ell = 1; ell < pells.size(); ++ell)
        if (pells[ell] > 0.0) { has_moving_mass = true; break; }
    if (!has_moving_mass) return std::nullopt;
    const auto bg = beta_gamma(p, pells);
    return bg.beta / bg.gamma;
}

/// Closed-form simplification of beta/gamma for standard bit mutation with
/// the (1+xi) factor dropped: 2 mu^2 k(n-k)/n / (n/((mu-1)chi^2) + 1).
inline double equilibrium_s0_asymptotic(const PlateauParams& p) {
    const double mu = static_cast<double>(p.mu);
    const double n = p.n;
    const double k = p.k;
    const double numer = 2.0 * mu * mu * k * (n - k) / n;
    const double denom = n / ((mu - 1.0) * p.chi * p.chi) + 1.0;
    return numer / denom;
}

/// C1 = sum p_ell, C2 = (n/k) sum ell p_ell.
inline std::pair<double, double> c1_c2(const PlateauParams& p,
                                       std::span<const double> pells) {
    return {sum_p(pells),
            (static_cast<double>(p.n) / static_cast<double>(p.k)) * sum_ell_p(pells)};
}

struct AlphaDelta {
    double alpha;
    double delta;

    /// Lower-bound predictor for one GA generation: S -> (1-delta) S + alpha.
    double drift_lower_bound(double S) const { return (1.0 - delta) * S + alpha; }
};

/// alpha = (1-p_c) 4 mu sum(ell p_ell) - 9 p_c k mu chi / n;
/// delta = (3 p_c + (2-2p_c) sum p_ell (1 + (mu-1) ell n/(k(n-k)))) / mu^2.
inline AlphaDelta alpha_delta(const PlateauParams& p, std::span<const double> pells) {
    const double mu = static_cast<double>(p.mu);
    const double n = p.n;
    const double k = p.k;
    const double alpha = (1.0 - p.p_c) * 4.0 * mu * sum_ell_p(pells) -
                         9.0 * p.p_c * k * mu * p.chi / n;
    double weighted = 0.0;
    for (std::size_t ell = 0; ell < pells.size(); ++ell)
        weighted += pells[ell] *
                    (1.0 + (mu - 1.0) * static_cast<double>(ell) * n / (k * (n - k)));
    const double delta = (3.0 * p.p_c + (2.0 - 2.0 * p.p_c) * weighted) / (mu * mu);
    return {alpha, delta};
}

/// Closed-form lower bound on alpha/delta:
/// 2 k mu^2 (1 - p_c (C2 + 9chi/4)/C2 - k/(n-k) - n/(mu-1) * (2C1+3p_c)/(2C2)).
inline double alpha_delta_equilibrium_lower_bound(const PlateauParams& p,
                                                  std::span<const double> pells) {
    const auto [c1, c2] = c1_c2(p, pells);
    const double mu = static_cast<double>(p.mu);
    const double n = p.n;
    const double k = p.k;
    const double term = 1.0 - p.p_c * (c2 + 9.0 * p.chi / 4.0) / c2 - k / (n - k) -
                        (n / (mu - 1.0)) * (2.0 * c1 + 3.0 * p.p_c) / (2.0 * c2);
    return 2.0 * k * mu * mu * term;
}

/// tau_0 = ceil(ln(1/eps) / delta): generations to approach the equilibrium.
inline std::uint64_t tau0(double eps, double delta) {
    if (!(eps > 0.0) || eps >= 1.0)
        throw std::invalid_argument("tau0: need 0 < eps < 1");
    if (!(delta > 0.0)) throw std::invalid_argument("tau0: need delta > 0");
    return static_cast<std::uint64_t>(std::ceil(std::log(1.0 / eps) / delta));
}

struct PlateauHitBound {
    double binomial_form; // C(2k,k) 4^-k (1-chi/n)^n
    double simplified;    // e^-chi / (3 sqrt(k))
    bool binomial_at_least_simplified;
};

/// Lower bounds on the probability that crossover of two complementary
/// plateau parents plus mutation lands on the plateau again.
inline PlateauHitBound pr_plateau_lower_bound(std::uint32_t k, double chi,
                                              std::uint32_t n) {
    if (k < 1) throw std::invalid_argument("pr_plateau_lower_bound: k >= 1");
    const double log_binom = log_binomial(2 * k, k) -
                             static_cast<double>(k) * std::log(4.0) +
                             static_cast<double>(n) * std::log1p(-chi / n);
    const double bin = std::exp(log_binom);
    const double simpl = std::exp(-chi) / (3.0 * std::sqrt(static_cast<double>(k)));
    return {bin, simpl, bin >= simpl};
}

/// Upper bound on the probability that one crossover+mutation offspring of
/// plateau parents at Hamming distance 2d is the optimum:
/// 4^-d sum_{i=0}^{2d} C(2d,i) / C(n, k+d-i).
inline double opt_hit_bound(std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    if (d > k || k > n) throw std::invalid_argument("opt_hit_bound: need d <= k <= n");
    double sum = 0.0;
    for (std::uint32_t i = 0; i <= 2 * d; ++i)
        sum += std::exp(log_binomial(2 * d, i) - log_binomial(n, k + d - i));
    return std::exp(-static_cast<double>(d) * std::log(4.0)) * sum;
}

/// (1/2) min{ C(n,k)/(1-p_c), C 4^k / p_c }. The constant C hides inside the
/// asymptotics; callers supply one (reports use C = 1 by convention).
inline double lower_bound_runtime(std::uint32_t n, std::uint32_t k, double p_c,
                                  double C) {
    if (!(p_c > 0.0) || !(p_c < 1.0))
        throw std::invalid_argument("lower_bound_runtime: need 0 < p_c < 1");
    if (!(C > 0.0)) throw std::invalid_argument("lower_bound_runtime: need C > 0");
    const double first = binomial(n, k) / (1.0 - p_c);
    const double second = C * std::exp(k * std::log(4.0)) / p_c;
    return 0.5 * std::min(first, second);
}

struct JumpOffsetSuccess {
    double single_term; // C(2k, k+delta) 4^-k
    double full_sum;    // sum_{i=0}^{k-delta} C(2k, k+delta+i) 4^-k
};

/// Probability bounds for uniform crossover of parents at distance 2k
/// producing a surplus of at least delta ones.
inline JumpOffsetSuccess jump_offset_success(std::uint32_t k, std::uint32_t delta) {
    if (delta < 1 || delta > k)
        throw std::invalid_argument("jump_offset_success: need 1 <= delta <= k");
    const double log4k = static_cast<double>(k) * std::log(4.0);
    const double single = std::exp(log_binomial(2 * k, k + delta) - log4k);
    double sum = 0.0;
    for (std::uint32_t i = 0; i + delta <= k; ++i)
        sum += std::exp(log_binomial(2 * k, k + delta + i) - log4k);
    return {single, sum};
}

/// One flag per checkable hypothesis of the two runtime bounds; the t1_*
/// flags belong to the general-epsilon bound, the t2_* flags to its
/// eps = 1/(16k) specialization.
struct PreconditionFlags {
    bool t1_eps_range;
    bool t1_k_range;   // k <= (n-k) eps / 3
    bool t1_pc;        // p_c <= (eps/3) 2C2/(2C2 + 9chi/4)
    bool t1_mu;        // mu >= 1 + (3n/eps)(2C1+3p_c)/(2C2)
    bool t1_lambda;    // lambda_c >= 6 sqrt(k) e^chi ln(mu)
    bool t2_pc;
    bool t2_mu;
    bool t2_k_range;   // k^2 <= (n-k)/48
    bool t2_lambda;    // lambda_c >= max{6 sqrt(k) e^chi ln(mu), 1/p_c}
    bool floor_8eps_k_zero_at_preset; // floor(8k/(16k)) == 0

    bool all_t1() const {
        return t1_eps_range && t1_k_range && t1_pc && t1_mu && t1_lambda;
    }
    bool all_t2() const { return t2_pc && t2_mu && t2_k_range && t2_lambda; }
};

inline double lambda_c_requirement(std::uint32_t k, double chi, std::uint64_t mu) {
    return 6.0 * std::sqrt(static_cast<double>(k)) * std::exp(chi) *
           std::log(static_cast<double>(mu));
}

inline PreconditionFlags check_preconditions(const PlateauParams& p, double eps,
                                             std::uint64_t lambda_c) {
    p.validate();
    if (!(eps > 0.0) || eps >= 1.0)
        throw std::invalid_argument("check_preconditions: need 0 < eps < 1");
    const auto pells = standard_bit_p_ell(p);
    const auto [c1, c2] = c1_c2(p, pells);
    const double n = p.n;
    const double k = p.k;
    const double mu = static_cast<double>(p.mu);
    const double lreq = lambda_c_requirement(p.k, p.chi, p.mu);
    PreconditionFlags f{};
    f.t1_eps_range = eps < 0.25;
    f.t1_k_range = k <= (n - k) * eps / 3.0;
    f.t1_pc = p.p_c <= (eps / 3.0) * 2.0 * c2 / (2.0 * c2 + 9.0 * p.chi / 4.0);
    f.t1_mu = mu >= 1.0 + (3.0 * n / eps) * (2.0 * c1 + 3.0 * p.p_c) / (2.0 * c2);
    f.t1_lambda = static_cast<double>(lambda_c) >= lreq;
    const double eps2 = 1.0 / (16.0 * k);
    f.t2_pc = p.p_c <= (eps2 / 3.0) * 2.0 * c2 / (2.0 * c2 + 9.0 * p.chi / 4.0);
    f.t2_mu = mu >= 1.0 + 48.0 * k * n * (2.0 * c1 + 3.0 * p.p_c) / (2.0 * c2);
    f.t2_k_range = k * k <= (n - k) / 48.0;
    f.t2_lambda = p.p_c > 0.0 &&
                  static_cast<double>(lambda_c) >= std::max(lreq, 1.0 / p.p_c);
    f.floor_8eps_k_zero_at_preset = std::floor(8.0 * eps2 * k) == 0.0;
    return f;
}

struct PresetParams {
    std::uint64_t mu;
    double p_c;
    std::uint64_t lambda_c;
};

/// Parameter presets at a given eps: p_c at its allowed maximum, mu the
/// smallest value passing the mu hypothesis, lambda_c the prescribed
/// ceiling. The k-range hypothesis may still fail at small n; callers see
/// that through check_preconditions.
inline PresetParams constructive_preset(std::uint32_t n, std::uint32_t k, double chi,
                                        double eps) {
    PlateauParams probe{n, k, 2, chi, 0.0};
    probe.validate();
    const auto pells = standard_bit_p_ell(probe);
    const auto [c1, c2] = c1_c2(probe, pells);
    const double p_c = (eps / 3.0) * 2.0 * c2 / (2.0 * c2 + 9.0 * chi / 4.0);
    const double mu_min =
        1.0 + (3.0 * static_cast<double>(n) / eps) * (2.0 * c1 + 3.0 * p_c) / (2.0 * c2);
    const auto mu = static_cast<std::uint64_t>(std::ceil(mu_min));
    const double lreq = lambda_c_requirement(k, chi, mu);
    const auto lambda_c =
        static_cast<std::uint64_t>(std::ceil(std::max(lreq, 1.0 / p_c)));
    return {mu, p_c, std::max<std::uint64_t>(lambda_c, 1)};
}

} // namespace plateau::theory

#endif // PLATEAU_THEORY_HPP
