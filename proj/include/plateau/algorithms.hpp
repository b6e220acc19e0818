#ifndef PLATEAU_ALGORITHMS_HPP
#define PLATEAU_ALGORITHMS_HPP

#include "plateau/bitstring.hpp"
#include "plateau/fitness.hpp"
#include "plateau/population.hpp"
#include "plateau/rng.hpp"
#include "plateau/variation.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plateau {

enum class AlgorithmKind { EA, GA };
enum class InitKind { UniformRandom, PlateauRandom, Fixture };

/// lambda_c = ceil(max{6 sqrt(k) e^chi ln(mu), 1/p_c}).
inline std::uint64_t default_lambda_c(std::uint32_t k, double chi, std::uint64_t mu,
                                      double p_c) {
    if (k < 1) throw std::invalid_argument("default_lambda_c: k >= 1");
    if (mu < 2) throw std::invalid_argument("default_lambda_c: mu >= 2");
    if (!(p_c > 0.0)) throw std::invalid_argument("default_lambda_c: p_c > 0");
    const double a = 6.0 * std::sqrt(static_cast<double>(k)) * std::exp(chi) *
                     std::log(static_cast<double>(mu));
    const double v = std::ceil(std::max(a, 1.0 / p_c));
    return std::max<std::uint64_t>(static_cast<std::uint64_t>(v), 1);
}

struct AlgorithmConfig {
    FitnessSpec fitness;
    std::uint64_t mu = 1;
    double p_c = 0.0;          // GA only
    std::uint64_t lambda_c = 1; // GA only
    MutationSpec mutation = StandardBit{1.0};
    InitKind init = InitKind::UniformRandom;
    std::string fixture_path;
    std::uint64_t seed = 1;
    std::uint64_t budget = 100'000'000;
    AlgorithmKind algorithm = AlgorithmKind::EA;
    std::uint64_t trajectory_stride = 0; // record (t, S) every stride generations

    void validate() const {
        fitness.validate();
        if (mu < 1) throw std::invalid_argument("AlgorithmConfig: mu >= 1");
        if (budget == 0) throw std::invalid_argument("AlgorithmConfig: budget >= 1");
        validate_mutation(mutation, fitness.n);
        if (algorithm == AlgorithmKind::GA) {
            // p_c = 1 is rejected: the analysis assumes mutation-only
            // generations keep happening.
            if (p_c < 0.0 || p_c >= 1.0)
                throw std::invalid_argument("AlgorithmConfig: need p_c in [0,1)");
            if (lambda_c < 1)
                throw std::invalid_argument("AlgorithmConfig: lambda_c >= 1");
        }
        if (init == InitKind::Fixture && fixture_path.empty())
            throw std::invalid_argument("AlgorithmConfig: fixture init needs a path");
    }
};

struct TrialRecord {
    std::uint64_t seed = 0;
    std::uint64_t replicate = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t generations = 0;
    bool optimum_found = false;
    std::uint64_t optimum_eval = 0;
    bool plateau_reached = false;
    std::uint64_t plateau_eval = 0;
    bool timeout = false;
    std::int64_t final_diversity = 0;
    std::uint64_t mutation_generations = 0;
    std::uint64_t crossover_generations = 0;
    std::vector<std::pair<std::uint64_t, std::int64_t>> trajectory;
};

/// One steady-state run: population, per-member fitness buckets, exact
/// evaluation accounting. Selection replaces a uniformly chosen
/// minimum-fitness member whenever the offspring is no worse.
class SteadyStateRunner {
public:
    SteadyStateRunner(const AlgorithmConfig& cfg, Population initial, RngStream& rng)
        : cfg_(cfg),
          rng_(&rng),
          pop_(std::move(initial)),
          child_(pop_.genotype_length()),
          best_child_(pop_.genotype_length()) {
        cfg_.fitness.validate();
        if (pop_.genotype_length() != cfg_.fitness.n)
            throw std::invalid_argument("runner: population length does not match spec");
        const std::uint32_t n = cfg_.fitness.n;
        // fitness is a function of unitation, so the value range is tiny
        std::int64_t lo = evaluate_unitation(cfg_.fitness, 0);
        std::int64_t hi = lo;
        for (std::uint32_t o = 1; o <= n; ++o) {
            const auto v = evaluate_unitation(cfg_.fitness, o);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        offset_ = lo;
        buckets_.assign(static_cast<std::size_t>(hi - lo + 1), {});
        slot_.resize(pop_.size());
        fit_.resize(pop_.size());
        plateau_target_ = plateau_ones_target(cfg_.fitness);
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            fit_[i] = evaluate(cfg_.fitness, pop_.member(i));
            bucket_insert(i, fit_[i]);
            if (pop_.member(i).ones() == plateau_target_) ++on_plateau_;
        }
        min_bucket_ = 0;
        while (buckets_[min_bucket_].empty()) ++min_bucket_;
        best_fitness_ = offset_ + static_cast<std::int64_t>(buckets_.size()) - 1;
        while (buckets_[best_fitness_ - offset_].empty()) --best_fitness_;
    }

    /// One generation following the configured algorithm.
    void step() {
        if (cfg_.algorithm == AlgorithmKind::GA && cfg_.p_c > 0.0 &&
            rng_->next_double() < cfg_.p_c)
            step_crossover();
        else
            step_mutation();
    }

    /// Mutation-only generation (the EA step; also the GA's mutation branch).
    void step_mutation() {
        const auto parent = rng_->uniform_index(pop_.size());
        child_ = pop_.member(parent);
        mutate_in_place(cfg_.mutation, child_, *rng_);
        const std::int64_t fy = note_evaluation(child_.ones());
        maybe_accept(child_, fy);
        ++generations_;
        ++mutation_generations_;
    }

    /// Crossover generation: lambda_c offspring from one parent pair, the
    /// best (ties uniform) competes for survival.
    void step_crossover() {
        const auto i1 = rng_->uniform_index(pop_.size());
        const auto i2 = rng_->uniform_index(pop_.size());
        const BitString& x1 = pop_.member(i1);
        const BitString& x2 = pop_.member(i2);
        std::int64_t best_f = std::numeric_limits<std::int64_t>::min();
        std::uint64_t ties = 0;
        for (std::uint64_t j = 0; j < cfg_.lambda_c; ++j) {
            uniform_crossover_into(child_, x1, x2, *rng_);
            mutate_in_place(cfg_.mutation, child_, *rng_);
            const std::int64_t f = note_evaluation(child_.ones());
            if (f > best_f) {
                best_f = f;
                ties = 1;
                best_child_ = child_;
            } else if (f == best_f) {
                ++ties;
                if (rng_->uniform_index(ties) == 0) best_child_ = child_;
            }
            if (stop_requested()) break;
        }
        maybe_accept(best_child_, best_f);
        ++generations_;
        ++crossover_generations_;
    }

    bool stop_requested() const {
        return optimum_found_ || evaluations_ >= cfg_.budget;
    }

    const Population& population() const { return pop_; }
    std::int64_t diversity() const { return pop_.diversity(); }
    std::uint64_t evaluations() const { return evaluations_; }
    std::uint64_t generations() const { return generations_; }
    std::uint64_t mutation_generations() const { return mutation_generations_; }
    std::uint64_t crossover_generations() const { return crossover_generations_; }
    bool optimum_found() const { return optimum_found_; }
    std::uint64_t optimum_eval() const { return optimum_eval_; }
    bool plateau_reached() const { return plateau_reached_; }
    std::uint64_t plateau_eval() const { return plateau_eval_; }
    std::int64_t best_fitness() const { return best_fitness_; }
    std::int64_t min_fitness() const { return offset_ + min_bucket_; }

    /// Count the mu initial evaluations (and optimum/plateau marks); call
    /// once when the initial population's evaluations should be billed.
    void bill_initial_evaluations() {
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            ++evaluations_;
            if (!optimum_found_ &&
                is_terminal_optimum(cfg_.fitness, pop_.member(i).ones())) {
                optimum_found_ = true;
                optimum_eval_ = evaluations_;
            }
        }
        check_plateau_complete();
    }

private:
    static std::uint32_t plateau_ones_target(const FitnessSpec& spec) {
        if (spec.is_jump_family()) return spec.plateau_ones();
        if (spec.family == FitnessFamily::OneMax) return spec.n;
        return std::numeric_limits<std::uint32_t>::max(); // Hurdle: not tracked
    }

    std::int64_t note_evaluation(std::uint32_t ones) {
        ++evaluations_;
        if (!optimum_found_ && is_terminal_optimum(cfg_.fitness, ones)) {
            optimum_found_ = true;
            optimum_eval_ = evaluations_;
        }
        return evaluate_unitation(cfg_.fitness, ones);
    }

    void maybe_accept(const BitString& offspring, std::int64_t f) {
        if (f < min_fitness()) return;
        auto& minb = buckets_[min_bucket_];
        const std::size_t victim = minb[rng_->uniform_index(minb.size())];
        const bool victim_on_plateau = pop_.member(victim).ones() == plateau_target_;
        const bool child_on_plateau = offspring.ones() == plateau_target_;
        pop_.replace(offspring, victim);
        bucket_erase(victim);
        fit_[victim] = f;
        bucket_insert(victim, f);
        while (buckets_[min_bucket_].empty()) ++min_bucket_;
        if (f > best_fitness_) best_fitness_ = f;
        if (child_on_plateau != victim_on_plateau) {
            on_plateau_ += child_on_plateau ? 1 : -1;
            check_plateau_complete();
        }
    }

    void check_plateau_complete() {
        if (!plateau_reached_ && on_plateau_ == static_cast<std::int64_t>(pop_.size())) {
            plateau_reached_ = true;
            plateau_eval_ = evaluations_;
        }
    }

    void bucket_insert(std::size_t member, std::int64_t f) {
        auto idx = static_cast<std::size_t>(f - offset_);
        slot_[member] = {idx, buckets_[idx].size()};
        buckets_[idx].push_back(member);
        if (static_cast<std::int64_t>(idx) < min_bucket_) min_bucket_ = idx;
    }

    void bucket_erase(std::size_t member) {
        const auto [idx, pos] = slot_[member];
        auto& b = buckets_[idx];
        b[pos] = b.back();
        slot_[b[pos]].second = pos;
        b.pop_back();
    }

    AlgorithmConfig cfg_;
    RngStream* rng_;
    Population pop_;
    BitString child_;
    BitString best_child_;
    std::vector<std::int64_t> fit_;
    std::vector<std::vector<std::size_t>> buckets_;
    std::vector<std::pair<std::size_t, std::size_t>> slot_;
    std::int64_t offset_ = 0;
    std::int64_t min_bucket_ = 0;
    std::int64_t best_fitness_ = 0;
    std::int64_t on_plateau_ = 0;
    std::uint32_t plateau_target_ = 0;
    std::uint64_t evaluations_ = 0;
    std::uint64_t generations_ = 0;
    std::uint64_t mutation_generations_ = 0;
    std::uint64_t crossover_generations_ = 0;
    bool optimum_found_ = false;
    std::uint64_t optimum_eval_ = 0;
    bool plateau_reached_ = false;
    std::uint64_t plateau_eval_ = 0;
};

inline Population make_initial_population(const AlgorithmConfig& cfg, RngStream& rng) {
    std::vector<BitString> members;
    members.reserve(cfg.mu);
    switch (cfg.init) {
        case InitKind::UniformRandom:
            for (std::uint64_t i = 0; i < cfg.mu; ++i)
                members.push_back(random_bitstring(cfg.fitness.n, rng));
            break;
        case InitKind::PlateauRandom: {
            const std::uint32_t k =
                cfg.fitness.is_jump_family() ? cfg.fitness.k : 0;
            for (std::uint64_t i = 0; i < cfg.mu; ++i)
                members.push_back(random_plateau_member(cfg.fitness.n, k, rng));
            break;
        }
        case InitKind::Fixture: {
            Population p = load_population(cfg.fixture_path);
            if (p.genotype_length() != cfg.fitness.n)
                throw std::invalid_argument("fixture genotype length != spec n");
            if (p.size() != cfg.mu)
                throw std::invalid_argument("fixture population size != mu");
            return p;
        }
    }
    return Population(std::move(members));
}

/// Full run: initialize (billing mu evaluations), iterate until the optimum
/// is sampled or the budget runs out. Budget exhaustion sets the timeout
/// flag rather than throwing.
inline TrialRecord run_trial(const AlgorithmConfig& cfg, std::uint64_t replicate = 0) {
    cfg.validate();
    RngStream init_rng(cfg.seed, replicate, StreamPurpose::Init);
    RngStream run_rng(cfg.seed, replicate, StreamPurpose::Run);
    SteadyStateRunner runner(cfg, make_initial_population(cfg, init_rng), run_rng);
    runner.bill_initial_evaluations();

    TrialRecord rec;
    rec.seed = cfg.seed;
    rec.replicate = replicate;
    if (cfg.trajectory_stride > 0)
        rec.trajectory.emplace_back(0, runner.diversity());
    while (!runner.stop_requested()) {
        runner.step();
        if (cfg.trajectory_stride > 0 &&
            runner.generations() % cfg.trajectory_stride == 0)
            rec.trajectory.emplace_back(runner.generations(), runner.diversity());
    }
    rec.evaluations = runner.evaluations();
    rec.generations = runner.generations();
    rec.optimum_found = runner.optimum_found();
    rec.optimum_eval = runner.optimum_eval();
    rec.plateau_reached = runner.plateau_reached();
    rec.plateau_eval = runner.plateau_eval();
    rec.timeout = !runner.optimum_found();
    rec.final_diversity = runner.diversity();
    rec.mutation_generations = runner.mutation_generations();
    rec.crossover_generations = runner.crossover_generations();
    return rec;
}

} // namespace plateau

#endif // PLATEAU_ALGORITHMS_HPP
