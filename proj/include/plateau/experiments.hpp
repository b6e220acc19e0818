#ifndef PLATEAU_EXPERIMENTS_HPP
#define PLATEAU_EXPERIMENTS_HPP

#include "plateau/algorithms.hpp"
#include "plateau/parallel.hpp"
#include "plateau/stats.hpp"
#include "plateau/theory.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace plateau::experiments {

enum class Conditioning { All, CrossoverOnly, MutationOnly, AcceptedOnPlateau };

inline const char* conditioning_name(Conditioning c) {
    switch (c) {
        case Conditioning::All: return "all";
        case Conditioning::CrossoverOnly: return "crossover-only";
        case Conditioning::MutationOnly: return "mutation-only";
        case Conditioning::AcceptedOnPlateau: return "accepted-on-plateau";
    }
    return "?";
}

struct DriftReport {
    std::int64_t initial_S = 0;
    std::uint64_t samples = 0;
    double mean_next_S = 0.0;
    double stderror = 0.0;
    Conditioning conditioning = Conditioning::All;
    std::optional<double> predicted;
};

/// Monte Carlo estimate of E(S(P_{t+1}) | P_t = P): N independent single
/// generations from identical copies of P. The conditioning picks the
/// generation type; rejected offspring leave S unchanged, as in the process.
inline DriftReport one_step_drift(const Population& P, const AlgorithmConfig& cfg,
                                  std::uint64_t N, Conditioning conditioning,
                                  RngStream& rng) {
    if (N < 1) throw std::invalid_argument("one_step_drift: N >= 1");
    FitnessSpec spec = cfg.fitness;
    if (conditioning == Conditioning::AcceptedOnPlateau) {
        if (!spec.is_jump_family())
            throw std::invalid_argument("one_step_drift: plateau conditioning needs a Jump family");
        spec.family = FitnessFamily::JumpPrime;
    }
    if (!spec.is_jump_family())
        throw std::invalid_argument("one_step_drift: needs a Jump-family spec");
    for (std::size_t i = 0; i < P.size(); ++i)
        if (!is_on_plateau(spec, P.member(i)))
            throw std::invalid_argument("one_step_drift: population member off plateau");

    Population work = P;
    const std::uint64_t mu = work.size();
    const std::int64_t S0 = work.diversity();
    const std::int64_t plateau_fitness =
        evaluate_unitation(spec, spec.plateau_ones());
    BitString child(spec.n), best_child(spec.n), saved(spec.n);
    RunningStat stat;

    for (std::uint64_t s = 0; s < N; ++s) {
        bool crossover;
        switch (conditioning) {
            case Conditioning::CrossoverOnly: crossover = true; break;
            case Conditioning::MutationOnly:
            case Conditioning::AcceptedOnPlateau: crossover = false; break;
            default:
                crossover = cfg.algorithm == AlgorithmKind::GA && cfg.p_c > 0.0 &&
                            rng.next_double() < cfg.p_c;
        }
        std::int64_t fy;
        if (crossover) {
            const auto i1 = rng.uniform_index(mu);
            const auto i2 = rng.uniform_index(mu);
            std::int64_t best_f = std::numeric_limits<std::int64_t>::min();
            std::uint64_t ties = 0;
            for (std::uint64_t j = 0; j < cfg.lambda_c; ++j) {
                uniform_crossover_into(child, work.member(i1), work.member(i2), rng);
                mutate_in_place(cfg.mutation, child, rng);
                const std::int64_t f = evaluate_unitation(spec, child.ones());
                if (f > best_f) {
                    best_f = f;
                    ties = 1;
                    best_child = child;
                } else if (f == best_f) {
                    ++ties;
                    if (rng.uniform_index(ties) == 0) best_child = child;
                }
            }
            child = best_child;
            fy = best_f;
        } else {
            child = work.member(rng.uniform_index(mu));
            mutate_in_place(cfg.mutation, child, rng);
            fy = evaluate_unitation(spec, child.ones());
        }
        if (fy >= plateau_fitness) {
            // all members share the minimum on the plateau
            const auto victim = static_cast<std::size_t>(rng.uniform_index(mu));
            saved = work.member(victim);
            work.replace(child, victim);
            stat.add(static_cast<double>(work.diversity()));
            work.replace(saved, victim); // rewind for the next sample
        } else {
            stat.add(static_cast<double>(S0));
        }
    }

    DriftReport rep;
    rep.initial_S = S0;
    rep.samples = N;
    rep.mean_next_S = stat.mean();
    rep.stderror = stat.stderror();
    rep.conditioning = conditioning;
    return rep;
}

/// Exact expectation as an integer fraction (uniform outcome weights).
struct ExactExpectation {
    unsigned __int128 total = 0;
    std::uint64_t count = 0;

    double value() const {
        return static_cast<double>(total) / static_cast<double>(count);
    }

    /// total/count == num/den, compared without rounding.
    bool equals_fraction(std::int64_t num, std::int64_t den) const {
        if (num < 0 || den <= 0) return false;
        return total * static_cast<unsigned __int128>(den) ==
               static_cast<unsigned __int128>(num) * count;
    }
};

namespace detail {

constexpr std::uint64_t kEnumerationLimit = 10'000'000;

inline std::int64_t replaced_diversity(const Population& P,
                                       const std::vector<std::int64_t>& contrib,
                                       const BitString& z, std::int64_t s_z,
                                       std::size_t victim) {
    // S(P u {z} \ {v}) = S - 2 S_P(v) + 2 (S_P(z) - H(z, v))
    return P.diversity() - 2 * contrib[victim] +
           2 * (s_z - static_cast<std::int64_t>(hamming(z, P.member(victim))));
}

inline std::vector<std::int64_t> member_contributions(const Population& P) {
    std::vector<std::int64_t> c(P.size());
    for (std::size_t i = 0; i < P.size(); ++i)
        c[i] = P.diversity_contribution(P.member(i));
    return c;
}

/// Visit all m-subsets of [0, n) as index vectors.
template <typename Fn>
void for_each_subset(std::uint32_t n, std::uint32_t m, Fn&& fn) {
    std::vector<std::uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    if (m > n) return;
    for (;;) {
        fn(idx);
        std::int32_t i = static_cast<std::int32_t>(m) - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (auto j = static_cast<std::uint32_t>(i) + 1; j < m; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/// Exact E(S(P_{t+1})) for the mutation flipping ell ones and ell zeros
/// chosen uniformly: enumerates parent choice, both flip subsets, and the
/// victim. Offspring stay on the plateau, so every outcome is accepted.
inline ExactExpectation enumerate_drift_pairedflip(const Population& P,
                                                   std::uint32_t ell) {
    const std::uint64_t mu = P.size();
    const std::uint32_t ones = P.member(0).ones();
    const std::uint32_t zeros = P.member(0).zeros();
    for (std::size_t i = 0; i < mu; ++i)
        if (P.member(i).ones() != ones)
            throw std::invalid_argument("enumerate_drift_pairedflip: mixed unitation");
    if (ell > std::min(ones, zeros))
        throw std::invalid_argument("enumerate_drift_pairedflip: ell too large");
    const double outcomes = theory::binomial(ones, ell) *
                            theory::binomial(zeros, ell) *
                            static_cast<double>(mu) * static_cast<double>(mu);
    if (outcomes > static_cast<double>(detail::kEnumerationLimit))
        throw std::invalid_argument("enumerate_drift_pairedflip: enumeration too large");

    const auto contrib = detail::member_contributions(P);
    ExactExpectation out;
    std::vector<std::uint32_t> one_pos, zero_pos;
    for (std::size_t parent = 0; parent < mu; ++parent) {
        const BitString& y = P.member(parent);
        y.fill_positions(one_pos, zero_pos);
        BitString z = y;
        detail::for_each_subset(ones, ell, [&](const std::vector<std::uint32_t>& oi) {
            for (auto i : oi) z.flip(one_pos[i]);
            detail::for_each_subset(
                zeros, ell, [&](const std::vector<std::uint32_t>& zi) {
                    for (auto i : zi) z.flip(zero_pos[i]);
                    const std::int64_t s_z = P.diversity_contribution(z);
                    for (std::size_t v = 0; v < mu; ++v) {
                        out.total += static_cast<unsigned __int128>(
                            detail::replaced_diversity(P, contrib, z, s_z, v));
                        ++out.count;
                    }
                    for (auto i : zi) z.flip(zero_pos[i]);
                });
            for (auto i : oi) z.flip(one_pos[i]);
        });
    }
    return out;
}

/// Exact E(S(Q_t^b)) for one balanced-uniform-crossover generation with
/// unconditional acceptance (plateau parents always give plateau offspring).
/// Outcome counts differ per parent pair, so the result is a reduced
/// fraction accumulated pair by pair.
struct ExactFraction {
    __int128 num = 0;
    __int128 den = 1;

    void add(__int128 n2, __int128 d2) {
        num = num * d2 + n2 * den;
        den *= d2;
        reduce();
    }

    void reduce() {
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    }

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    bool equals_fraction(__int128 n2, __int128 d2) const {
        return num * d2 == n2 * den;
    }
};

inline ExactFraction enumerate_drift_balanced_crossover(const Population& P) {
    const std::uint64_t mu = P.size();
    const auto contrib = detail::member_contributions(P);
    double outcome_estimate = 0.0;
    for (std::size_t i1 = 0; i1 < mu; ++i1)
        for (std::size_t i2 = 0; i2 < mu; ++i2) {
            const std::uint32_t d = hamming(P.member(i1), P.member(i2));
            outcome_estimate +=
                theory::binomial(d, d / 2) * static_cast<double>(mu);
        }
    if (outcome_estimate > static_cast<double>(detail::kEnumerationLimit))
        throw std::invalid_argument("enumerate_drift_balanced_crossover: too large");

    ExactFraction total; // sum over pairs of per-pair expectations
    std::vector<std::uint32_t> diff;
    for (std::size_t i1 = 0; i1 < mu; ++i1) {
        for (std::size_t i2 = 0; i2 < mu; ++i2) {
            const BitString& x1 = P.member(i1);
            const BitString& x2 = P.member(i2);
            diff.clear();
            for (std::uint32_t p = 0; p < x1.size(); ++p)
                if (x1.get(p) != x2.get(p)) diff.push_back(p);
            const auto d = static_cast<std::uint32_t>(diff.size());
            const std::uint32_t half = d / 2;
            // agreeing bits from x1, differing bits start as 0
            BitString base = x1;
            for (auto p : diff) base.set(p, false);
            __int128 pair_sum = 0;
            std::uint64_t pair_count = 0;
            BitString z = base;
            detail::for_each_subset(d, half, [&](const std::vector<std::uint32_t>& sel) {
                for (auto i : sel) z.set(diff[i], true);
                const std::int64_t s_z = P.diversity_contribution(z);
                for (std::size_t v = 0; v < mu; ++v) {
                    pair_sum += detail::replaced_diversity(P, contrib, z, s_z, v);
                    ++pair_count;
                }
                for (auto i : sel) z.set(diff[i], false);
            });
            total.add(pair_sum, static_cast<__int128>(pair_count));
        }
    }
    // average over the mu^2 uniform parent pairs
    total.den *= static_cast<__int128>(mu) * static_cast<__int128>(mu);
    total.reduce();
    return total;
}

/// Exact E(S(P_{t+1})) for one generation of uniform crossover followed by
/// standard bit mutation, acceptance per `spec` from an all-plateau
/// population. Enumerates mu^2 pairs x 2^d crossover picks x 2^n mutation
/// masks with exact probabilities; for tiny fixtures only.
inline double enumerate_drift_uniform_crossover(const Population& P,
                                                const FitnessSpec& spec,
                                                double chi) {
    const std::uint64_t mu = P.size();
    const std::uint32_t n = P.genotype_length();
    if (n > 20)
        throw std::invalid_argument("enumerate_drift_uniform_crossover: n too large");
    std::uint32_t dmax = 0;
    for (std::size_t i1 = 0; i1 < mu; ++i1)
        for (std::size_t i2 = 0; i2 < mu; ++i2)
            dmax = std::max(dmax, hamming(P.member(i1), P.member(i2)));
    const double outcomes = static_cast<double>(mu) * static_cast<double>(mu) *
                            std::ldexp(1.0, static_cast<int>(dmax)) *
                            std::ldexp(1.0, static_cast<int>(n));
    if (outcomes > static_cast<double>(detail::kEnumerationLimit))
        throw std::invalid_argument("enumerate_drift_uniform_crossover: too large");

    const std::int64_t plateau_fitness = evaluate_unitation(spec, spec.plateau_ones());
    const auto contrib = detail::member_contributions(P);
    const double p = chi / static_cast<double>(n);
    std::vector<long double> mask_prob(n + 1);
    for (std::uint32_t b = 0; b <= n; ++b)
        mask_prob[b] = std::pow(static_cast<long double>(p), b) *
                       std::pow(static_cast<long double>(1.0 - p), n - b);

    long double acc = 0.0L;
    std::vector<std::uint32_t> diff;
    for (std::size_t i1 = 0; i1 < mu; ++i1) {
        for (std::size_t i2 = 0; i2 < mu; ++i2) {
            const BitString& x1 = P.member(i1);
            const BitString& x2 = P.member(i2);
            diff.clear();
            for (std::uint32_t q = 0; q < n; ++q)
                if (x1.get(q) != x2.get(q)) diff.push_back(q);
            const auto d = static_cast<std::uint32_t>(diff.size());
            const long double pick_w = std::ldexp(1.0L, -static_cast<int>(d));
            for (std::uint64_t cmask = 0; cmask < (1ull << d); ++cmask) {
                BitString y = x1;
                for (std::uint32_t j = 0; j < d; ++j)
                    if (cmask >> j & 1) y.set(diff[j], x2.get(diff[j]));
                for (std::uint64_t mmask = 0; mmask < (1ull << n); ++mmask) {
                    BitString z = y;
                    for (std::uint32_t b = 0; b < n; ++b)
                        if (mmask >> b & 1) z.flip(b);
                    const long double w =
                        pick_w * mask_prob[std::popcount(mmask)];
                    const std::int64_t fz = evaluate_unitation(spec, z.ones());
                    if (fz >= plateau_fitness) {
                        const std::int64_t s_z = P.diversity_contribution(z);
                        long double esum = 0.0L;
                        for (std::size_t v = 0; v < mu; ++v)
                            esum += static_cast<long double>(
                                detail::replaced_diversity(P, contrib, z, s_z, v));
                        acc += w * esum / static_cast<long double>(mu);
                    } else {
                        acc += w * static_cast<long double>(P.diversity());
                    }
                }
            }
        }
    }
    return static_cast<double>(acc / (static_cast<long double>(mu) *
                                      static_cast<long double>(mu)));
}

/// Two clusters of plateau members at mutual distance 2*sqrt(k):
/// count_a copies of 0^r 1^(n-k) 0^(k-r) and mu-count_a copies of
/// 1^r 0^r 1^(n-k-r) 0^(k-r), with r = sqrt(k).
inline Population two_cluster_population(std::uint32_t n, std::uint32_t k,
                                         std::uint64_t mu, std::uint64_t count_a) {
    const auto r = static_cast<std::uint32_t>(std::llround(std::sqrt(double(k))));
    if (r * r != k)
        throw std::invalid_argument("two_cluster_population: k must be a perfect square");
    if (count_a == 0 || count_a >= mu)
        throw std::invalid_argument("two_cluster_population: need 0 < count_a < mu");
    if (!(r <= k && k + r <= n - k))
        throw std::invalid_argument("two_cluster_population: string layout does not fit");
    BitString a = BitString::all_ones(n);
    for (std::uint32_t i = 0; i < r; ++i) a.set(i, false);
    for (std::uint32_t i = n - (k - r); i < n; ++i) a.set(i, false);
    BitString b = BitString::all_ones(n);
    for (std::uint32_t i = r; i < 2 * r; ++i) b.set(i, false);
    for (std::uint32_t i = n - (k - r); i < n; ++i) b.set(i, false);
    std::vector<BitString> members;
    members.reserve(mu);
    for (std::uint64_t i = 0; i < count_a; ++i) members.push_back(a);
    for (std::uint64_t i = count_a; i < mu; ++i) members.push_back(b);
    return Population(std::move(members));
}

/// The negative-drift construction: mu/4 members in cluster A, 3mu/4 in
/// cluster B; diversity is exactly 3 sqrt(k) mu^2 / 4.
inline Population counterexample_population(std::uint32_t n, std::uint32_t k,
                                            std::uint64_t mu) {
    if (mu % 4 != 0)
        throw std::invalid_argument("counterexample_population: mu must be divisible by 4");
    return two_cluster_population(n, k, mu, mu / 4);
}

/// Crossover-conditioned drift on the counterexample population, once with a
/// single offspring and once with lambda_c competing offspring.
inline std::pair<DriftReport, DriftReport> counterexample_drift(
    std::uint32_t n, std::uint32_t k, std::uint64_t mu, double chi, double p_c,
    std::uint64_t lambda_c, std::uint64_t N, std::uint64_t master_seed) {
    const Population P = counterexample_population(n, k, mu);
    AlgorithmConfig cfg;
    cfg.fitness = {FitnessFamily::JumpPrime, n, k, 0, 0};
    cfg.mu = mu;
    cfg.p_c = p_c;
    cfg.mutation = StandardBit{chi};
    cfg.algorithm = AlgorithmKind::GA;

    cfg.lambda_c = 1;
    RngStream rng1(master_seed, 0, StreamPurpose::DriftSample);
    DriftReport single =
        one_step_drift(P, cfg, N, Conditioning::CrossoverOnly, rng1);

    cfg.lambda_c = lambda_c;
    RngStream rng2(master_seed, 1, StreamPurpose::DriftSample);
    DriftReport batch =
        one_step_drift(P, cfg, N, Conditioning::CrossoverOnly, rng2);
    return {single, batch};
}

struct EquilibriumReport {
    std::uint64_t burn_in = 0;
    std::uint64_t horizon = 0;
    double time_avg_S = 0.0;
    double fraction_above_threshold = 0.0;
    std::int64_t threshold = 0;
};

/// Run the configured algorithm on the trapped landscape from its (plateau)
/// initial population and measure S over [burn_in, burn_in + horizon].
/// The threshold is the diversity-event level (1-4eps) 2k mu^2.
inline EquilibriumReport equilibrium_run(const AlgorithmConfig& cfg,
                                         std::uint64_t burn_in, std::uint64_t horizon,
                                         double eps, std::uint64_t replicate = 0) {
    if (cfg.fitness.family != FitnessFamily::JumpPrime)
        throw std::invalid_argument("equilibrium_run: needs JumpPrime fitness");
    if (horizon < 1) throw std::invalid_argument("equilibrium_run: horizon >= 1");
    cfg.validate();
    RngStream init_rng(cfg.seed, replicate, StreamPurpose::Init);
    RngStream run_rng(cfg.seed, replicate, StreamPurpose::Run);
    Population initial = make_initial_population(cfg, init_rng);
    for (std::size_t i = 0; i < initial.size(); ++i)
        if (!is_on_plateau(cfg.fitness, initial.member(i)))
            throw std::invalid_argument("equilibrium_run: initial member off plateau");
    SteadyStateRunner runner(cfg, std::move(initial), run_rng);

    const double k = cfg.fitness.k;
    const double mu = static_cast<double>(cfg.mu);
    const double threshold = (1.0 - 4.0 * eps) * 2.0 * k * mu * mu;

    for (std::uint64_t t = 0; t < burn_in; ++t) runner.step();
    long double sum = 0.0L;
    std::uint64_t above = 0;
    for (std::uint64_t t = 0; t < horizon; ++t) {
        runner.step();
        const auto S = static_cast<double>(runner.diversity());
        sum += S;
        if (S >= threshold) ++above;
    }

    EquilibriumReport rep;
    rep.burn_in = burn_in;
    rep.horizon = horizon;
    rep.time_avg_S = static_cast<double>(sum / static_cast<long double>(horizon));
    rep.fraction_above_threshold =
        static_cast<double>(above) / static_cast<double>(horizon);
    rep.threshold = static_cast<std::int64_t>(std::ceil(threshold));
    return rep;
}

struct CampaignStats {
    std::vector<TrialRecord> rows;
    SummaryStats to_optimum;       // over runs that found the optimum
    SummaryStats to_plateau;       // over runs that reached the plateau
    std::uint64_t timeouts = 0;
    std::uint64_t successes = 0;
};

inline CampaignStats summarize_campaign(std::vector<TrialRecord> rows) {
    CampaignStats st;
    std::vector<double> opt, plat;
    for (const auto& r : rows) {
        if (r.optimum_found) {
            opt.push_back(static_cast<double>(r.optimum_eval));
            ++st.successes;
        } else {
            ++st.timeouts;
        }
        if (r.plateau_reached) plat.push_back(static_cast<double>(r.plateau_eval));
    }
    st.to_optimum = summarize(std::move(opt));
    st.to_plateau = summarize(std::move(plat));
    st.rows = std::move(rows);
    return st;
}

/// Seeded repetitions of run_trial; replicate i always uses the stream
/// keyed (cfg.seed, i), so results do not depend on the thread count.
inline CampaignStats runtime_campaign(const AlgorithmConfig& cfg,
                                      std::uint64_t repetitions,
                                      unsigned threads = 1) {
    if (repetitions < 1)
        throw std::invalid_argument("runtime_campaign: repetitions >= 1");
    std::vector<TrialRecord> rows(repetitions);
    parallel_for(repetitions, threads,
                 [&](std::uint64_t i) { rows[i] = run_trial(cfg, i); });
    return summarize_campaign(std::move(rows));
}

/// runtime_campaign against the Hurdle benchmark.
inline CampaignStats hurdle_campaign(std::uint32_t n, std::uint32_t w,
                                     AlgorithmConfig cfg, std::uint64_t repetitions,
                                     unsigned threads = 1) {
    cfg.fitness = FitnessSpec{FitnessFamily::Hurdle, n, 0, 0, w};
    return runtime_campaign(cfg, repetitions, threads);
}

struct McRate {
    double rate = 0.0;
    double stderror = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Monte Carlo probability that mutate(uniform_crossover(x1, x2)) is the
/// all-ones string.
inline McRate mc_opt_hit(const BitString& x1, const BitString& x2, double chi,
                         std::uint64_t N, RngStream& rng) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("mc_opt_hit: length mismatch");
    const std::uint32_t n = x1.size();
    const MutationSpec mspec = StandardBit{chi};
    BitString child(n);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
        uniform_crossover_into(child, x1, x2, rng);
        mutate_in_place(mspec, child, rng);
        if (child.ones() == n) ++hits;
    }
    McRate r;
    r.hits = hits;
    r.samples = N;
    r.rate = static_cast<double>(hits) / static_cast<double>(N);
    r.stderror = std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(N));
    return r;
}

/// Exact probability of the same event: sum over the 2^d equally likely
/// crossover outcomes y of (chi/n)^zeros(y) (1-chi/n)^(n-zeros(y)).
inline double exact_opt_hit(const BitString& x1, const BitString& x2, double chi) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("exact_opt_hit: length mismatch");
    const std::uint32_t n = x1.size();
    if (n > 20) throw std::invalid_argument("exact_opt_hit: n must be <= 20");
    std::vector<std::uint32_t> diff;
    for (std::uint32_t i = 0; i < n; ++i)
        if (x1.get(i) != x2.get(i)) diff.push_back(i);
    const auto d = static_cast<std::uint32_t>(diff.size());
    std::uint32_t shared_ones = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        if (x1.get(i) && x2.get(i)) ++shared_ones;
    std::uint64_t b1 = 0; // diff positions where x1 carries the one
    for (std::uint32_t j = 0; j < d; ++j)
        if (x1.get(diff[j])) b1 |= 1ull << j;

    const double p = chi / static_cast<double>(n);
    std::vector<long double> prob_all_zeros_flip(n + 1);
    for (std::uint32_t z = 0; z <= n; ++z)
        prob_all_zeros_flip[z] = std::pow(static_cast<long double>(p), z) *
                                 std::pow(static_cast<long double>(1.0 - p), n - z);

    long double acc = 0.0L;
    for (std::uint64_t m = 0; m < (1ull << d); ++m) {
        // bit j set: take x1's bit at diff position j, else x2's
        const std::uint32_t ones_from_diff =
            std::popcount(m & b1) +
            std::popcount(~m & ~b1 & ((d == 64) ? ~0ull : (1ull << d) - 1));
        const std::uint32_t zeros_y = n - shared_ones - ones_from_diff;
        acc += prob_all_zeros_flip[zeros_y];
    }
    return static_cast<double>(acc * std::ldexp(1.0L, -static_cast<int>(d)));
}

} // namespace plateau::experiments

#endif // PLATEAU_EXPERIMENTS_HPP
