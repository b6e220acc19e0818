// Command-line front end: closed-form predictions and the Monte Carlo /
// runtime experiments, with CSV + JSON output for sweeps.

#include "plateau/algorithms.hpp"
#include "plateau/experiments.hpp"
#include "plateau/theory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using nlohmann::json;
using namespace plateau;

namespace {

struct CommonOpts {
    std::optional<std::uint64_t> seed;
    unsigned threads = 0; // 0 = hardware concurrency
    std::string json_path;
    std::string csv_path;
};

std::uint64_t resolve_seed(const CommonOpts& c) {
    if (c.seed) return *c.seed;
    std::random_device rd;
    const std::uint64_t s =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    std::cerr << "seed not given; using random seed " << s << "\n";
    return s;
}

void emit_json(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

json mutation_json(const MutationSpec& spec) {
    json j;
    if (const auto* sb = std::get_if<StandardBit>(&spec))
        j = {{"kind", "standard"}, {"chi", sb->chi}};
    else if (const auto* pf = std::get_if<PairedFlip>(&spec))
        j = {{"kind", "paired"}, {"ell", pf->ell}};
    else
        j = {{"kind", "fixed"}, {"radius", std::get<FixedRadius>(spec).radius}};
    return j;
}

json config_json(const AlgorithmConfig& cfg) {
    return json{
        {"algorithm", cfg.algorithm == AlgorithmKind::EA ? "ea" : "ga"},
        {"family", family_name(cfg.fitness.family)},
        {"n", cfg.fitness.n},
        {"k", cfg.fitness.k},
        {"delta", cfg.fitness.delta},
        {"w", cfg.fitness.w},
        {"mu", cfg.mu},
        {"pc", cfg.p_c},
        {"lambda_c", cfg.lambda_c},
        {"mutation", mutation_json(cfg.mutation)},
        {"init", cfg.init == InitKind::UniformRandom   ? "uniform"
                 : cfg.init == InitKind::PlateauRandom ? "plateau-random"
                                                       : "fixture"},
        {"fixture", cfg.fixture_path},
        {"seed", cfg.seed},
        {"budget", cfg.budget},
    };
}

std::uint64_t config_hash(const AlgorithmConfig& cfg) {
    return fnv1a(config_json(cfg).dump());
}

json flags_json(const theory::PreconditionFlags& f) {
    return json{
        {"t1_eps_range", f.t1_eps_range},
        {"t1_k_range", f.t1_k_range},
        {"t1_pc", f.t1_pc},
        {"t1_mu", f.t1_mu},
        {"t1_lambda", f.t1_lambda},
        {"t1_all", f.all_t1()},
        {"t2_pc", f.t2_pc},
        {"t2_mu", f.t2_mu},
        {"t2_k_range", f.t2_k_range},
        {"t2_lambda", f.t2_lambda},
        {"t2_all", f.all_t2()},
        {"floor_8eps_k_zero_at_preset", f.floor_8eps_k_zero_at_preset},
    };
}

void write_trial_csv(std::ofstream& out, std::uint64_t cfg_hash,
                     const std::vector<TrialRecord>& rows) {
    out << "config_hash,replicate,seed,evaluations,generations,plateau_reached,"
           "plateau_eval,optimum_found,optimum_eval,timeout,final_diversity\n";
    for (const auto& r : rows)
        out << cfg_hash << ',' << r.replicate << ',' << r.seed << ','
            << r.evaluations << ',' << r.generations << ',' << r.plateau_reached
            << ',' << r.plateau_eval << ',' << r.optimum_found << ','
            << r.optimum_eval << ',' << r.timeout << ',' << r.final_diversity
            << '\n';
}

json summary_json(const SummaryStats& s) {
    return json{{"count", s.count}, {"mean", s.mean},   {"median", s.median},
                {"q25", s.q25},     {"q75", s.q75},     {"q90", s.q90},
                {"min", s.min},     {"max", s.max}};
}

MutationSpec make_mutation(const std::string& kind, double chi, std::uint32_t ell,
                           std::uint32_t radius) {
    if (kind == "standard") return StandardBit{chi};
    if (kind == "paired") return PairedFlip{ell};
    if (kind == "fixed") return FixedRadius{radius};
    throw CLI::ValidationError("--mutation must be standard, paired or fixed");
}

// ---------------------------------------------------------------- predict

struct PredictOpts {
    std::uint32_t n = 50, k = 5;
    std::uint64_t mu = 20;
    double chi = 1.0, pc = 0.01;
    double eps = 0.0125;
    bool preset_eps_16k = false;
    std::optional<std::uint64_t> lambda_c;
    double lower_bound_C = 1.0;
    std::string json_path;
};

int run_predict(const PredictOpts& o) {
    theory::PlateauParams params{o.n, o.k, o.mu, o.chi, o.pc};
    params.validate();
    const double eps = o.preset_eps_16k ? 1.0 / (16.0 * o.k) : o.eps;
    const auto pells = theory::standard_bit_p_ell(params);
    const auto bg = theory::beta_gamma(params, pells);
    const auto s0 = theory::equilibrium_s0(params, pells);
    const auto [c1, c2] = theory::c1_c2(params, pells);
    const auto ad = theory::alpha_delta(params, pells);
    const std::uint64_t lambda_c =
        o.lambda_c ? *o.lambda_c
                   : (o.pc > 0.0 ? default_lambda_c(o.k, o.chi, o.mu, o.pc) : 1);
    const auto flags = theory::check_preconditions(params, eps, lambda_c);
    const auto plateau_lb = theory::pr_plateau_lower_bound(o.k, o.chi, o.n);
    const auto preset = theory::constructive_preset(o.n, o.k, o.chi, eps);

    json opt_hit = json::array();
    for (std::uint32_t d = 0; d <= o.k; ++d)
        opt_hit.push_back(
            {{"d", d}, {"bound", theory::opt_hit_bound(o.n, o.k, d)}});
    json jos = json::array();
    for (std::uint32_t delta = 1; delta <= o.k; ++delta) {
        const auto r = theory::jump_offset_success(o.k, delta);
        jos.push_back({{"delta", delta},
                       {"single_term", r.single_term},
                       {"full_sum", r.full_sum}});
    }

    json j{
        {"params",
         {{"n", o.n},
          {"k", o.k},
          {"mu", o.mu},
          {"chi", o.chi},
          {"pc", o.pc},
          {"eps", eps},
          {"lambda_c", lambda_c}}},
        {"p_ell", pells},
        {"beta", bg.beta},
        {"gamma", bg.gamma},
        {"S0", s0 ? json(*s0) : json()},
        {"S0_asymptotic", theory::equilibrium_s0_asymptotic(params)},
        {"C1", c1},
        {"C2", c2},
        {"alpha", ad.alpha},
        {"delta", ad.delta},
        {"alpha_over_delta", ad.alpha / ad.delta},
        {"alpha_over_delta_lower_bound",
         theory::alpha_delta_equilibrium_lower_bound(params, pells)},
        {"tau0", theory::tau0(eps, ad.delta)},
        {"default_lambda_c",
         o.pc > 0.0 ? json(default_lambda_c(o.k, o.chi, o.mu, o.pc)) : json()},
        {"preset", {{"mu", preset.mu}, {"pc", preset.p_c}, {"lambda_c", preset.lambda_c}}},
        {"precondition_flags", flags_json(flags)},
        {"pr_plateau_lower_bound",
         {{"binomial_form", plateau_lb.binomial_form},
          {"simplified", plateau_lb.simplified},
          {"binomial_at_least_simplified", plateau_lb.binomial_at_least_simplified}}},
        {"opt_hit_bound", opt_hit},
        {"jump_offset_success", jos},
        {"lower_bound_runtime",
         o.pc > 0.0
             ? json(theory::lower_bound_runtime(o.n, o.k, o.pc, o.lower_bound_C))
             : json()},
    };
    emit_json(j, o.json_path);
    return 0;
}

// ------------------------------------------------------------------ drift

struct DriftOpts {
    std::uint32_t n = 20, k = 4;
    std::uint64_t mu = 6;
    double chi = 1.0, pc = 0.0;
    std::uint64_t lambda_c = 1;
    std::string mutation_kind = "standard";
    std::uint32_t ell = 1, radius = 1;
    std::string conditioning = "accepted-on-plateau";
    std::string fixture;
    std::string population_kind = "plateau-random"; // or two-cluster
    std::uint64_t count_a = 0;
    std::uint64_t samples = 100000;
    std::uint64_t replicates = 1;
    std::string predict = "auto"; // auto | none
    CommonOpts common;
};

experiments::Conditioning parse_conditioning(const std::string& s) {
    if (s == "all") return experiments::Conditioning::All;
    if (s == "crossover-only") return experiments::Conditioning::CrossoverOnly;
    if (s == "mutation-only") return experiments::Conditioning::MutationOnly;
    if (s == "accepted-on-plateau")
        return experiments::Conditioning::AcceptedOnPlateau;
    throw CLI::ValidationError("unknown conditioning: " + s);
}

int run_drift(const DriftOpts& o) {
    const std::uint64_t seed = resolve_seed(o.common);
    AlgorithmConfig cfg;
    cfg.fitness = {FitnessFamily::JumpPrime, o.n, o.k, 0, 0};
    cfg.mu = o.mu;
    cfg.p_c = o.pc;
    cfg.lambda_c = o.lambda_c;
    cfg.mutation = make_mutation(o.mutation_kind, o.chi, o.ell, o.radius);
    cfg.seed = seed;
    cfg.algorithm = AlgorithmKind::GA;
    const auto cond = parse_conditioning(o.conditioning);

    std::optional<Population> pop;
    if (!o.fixture.empty()) {
        pop = load_population(o.fixture);
        cfg.mu = pop->size();
    } else if (o.population_kind == "two-cluster") {
        pop = experiments::two_cluster_population(
            o.n, o.k, o.mu, o.count_a ? o.count_a : std::max<std::uint64_t>(o.mu / 4, 1));
    } else {
        RngStream init_rng(seed, 0, StreamPurpose::Init);
        std::vector<BitString> members;
        for (std::uint64_t i = 0; i < o.mu; ++i)
            members.push_back(random_plateau_member(o.n, o.k, init_rng));
        pop = Population(std::move(members));
    }

    std::optional<double> predicted;
    if (o.predict == "auto") {
        theory::PlateauParams params{o.n, o.k, cfg.mu, o.chi, o.pc};
        const double S = static_cast<double>(pop->diversity());
        // p_ell vector: the standard-bit closed form, or the point mass of
        // the fixed-ell operator; FixedRadius has no closed form here
        std::optional<std::vector<double>> pells;
        if (o.mutation_kind == "standard")
            pells = theory::standard_bit_p_ell(params);
        else if (o.mutation_kind == "paired" && o.ell <= params.q()) {
            pells.emplace(static_cast<std::size_t>(params.q()) + 1, 0.0);
            (*pells)[o.ell] = 1.0;
        }
        if (cond == experiments::Conditioning::CrossoverOnly) {
            const double mu = static_cast<double>(cfg.mu);
            predicted = (1.0 - 3.0 / (mu * mu)) * S -
                        9.0 * o.k * mu * o.chi / static_cast<double>(o.n);
        } else if (pells) {
            if (cond == experiments::Conditioning::All && o.pc > 0.0)
                predicted = theory::alpha_delta(params, *pells).drift_lower_bound(S);
            else
                predicted = theory::ea_drift(params, *pells, S);
        }
    }

    std::vector<experiments::DriftReport> reports(o.replicates);
    parallel_for(o.replicates, o.common.threads, [&](std::uint64_t r) {
        RngStream rng(seed, r, StreamPurpose::DriftSample);
        reports[r] = experiments::one_step_drift(*pop, cfg, o.samples, cond, rng);
        reports[r].predicted = predicted;
    });

    if (!o.common.csv_path.empty()) {
        auto out = open_csv(o.common.csv_path);
        out << "replicate,samples,initial_S,mean_next_S,stderr,predicted\n";
        for (std::uint64_t r = 0; r < o.replicates; ++r) {
            const auto& rep = reports[r];
            out << r << ',' << rep.samples << ',' << rep.initial_S << ','
                << rep.mean_next_S << ',' << rep.stderror << ','
                << (predicted ? std::to_string(*predicted) : "") << '\n';
        }
    }

    RunningStat pooled;
    for (const auto& r : reports) pooled.add(r.mean_next_S);
    const auto& first = reports.front();
    json j{
        {"resolved_config", config_json(cfg)},
        {"conditioning", o.conditioning},
        {"samples", o.samples},
        {"replicates", o.replicates},
        {"initial_S", first.initial_S},
        {"mean_next_S", o.replicates == 1 ? first.mean_next_S : pooled.mean()},
        {"stderr", o.replicates == 1 ? first.stderror : pooled.stderror()},
        {"predicted", predicted ? json(*predicted) : json()},
    };
    if (predicted) {
        const double band = 3.0 * first.stderror;
        if (cond == experiments::Conditioning::CrossoverOnly ||
            (cond == experiments::Conditioning::All && o.pc > 0.0))
            j["pass_lower_bound_3sigma"] = first.mean_next_S >= *predicted - band;
        else
            j["pass_match_3sigma"] = std::abs(first.mean_next_S - *predicted) <= band;
    }
    emit_json(j, o.common.json_path);
    return 0;
}

// ------------------------------------------------------------ equilibrium

struct EquilibriumOpts {
    std::uint32_t n = 50, k = 5;
    std::uint64_t mu = 20;
    double chi = 1.0, pc = 0.0;
    std::uint64_t lambda_c = 1;
    std::string algorithm = "ea";
    std::uint64_t burn_in = 100000, horizon = 1000000;
    double eps = 0.0125;
    std::uint64_t trials = 1;
    CommonOpts common;
};

int run_equilibrium(const EquilibriumOpts& o) {
    const std::uint64_t seed = resolve_seed(o.common);
    AlgorithmConfig cfg;
    cfg.fitness = {FitnessFamily::JumpPrime, o.n, o.k, 0, 0};
    cfg.mu = o.mu;
    cfg.p_c = o.pc;
    cfg.lambda_c = o.lambda_c;
    cfg.mutation = StandardBit{o.chi};
    cfg.init = InitKind::PlateauRandom;
    cfg.seed = seed;
    cfg.algorithm = o.algorithm == "ga" ? AlgorithmKind::GA : AlgorithmKind::EA;
    cfg.budget = std::numeric_limits<std::uint64_t>::max();

    theory::PlateauParams params{o.n, o.k, o.mu, o.chi, o.pc};
    const auto pells = theory::standard_bit_p_ell(params);
    const auto s0 = theory::equilibrium_s0(params, pells);
    const auto ad = theory::alpha_delta(params, pells);

    std::vector<experiments::EquilibriumReport> reps(o.trials);
    parallel_for(o.trials, o.common.threads, [&](std::uint64_t t) {
        reps[t] = experiments::equilibrium_run(cfg, o.burn_in, o.horizon, o.eps, t);
    });

    if (!o.common.csv_path.empty()) {
        auto out = open_csv(o.common.csv_path);
        out << "trial,burn_in,horizon,time_avg_S,fraction_above_threshold,"
               "threshold,success_quarter\n";
        for (std::uint64_t t = 0; t < o.trials; ++t)
            out << t << ',' << reps[t].burn_in << ',' << reps[t].horizon << ','
                << reps[t].time_avg_S << ',' << reps[t].fraction_above_threshold
                << ',' << reps[t].threshold << ','
                << (reps[t].fraction_above_threshold >= 0.25) << '\n';
    }

    RunningStat avg;
    std::uint64_t quarter_successes = 0;
    for (const auto& r : reps) {
        avg.add(r.time_avg_S);
        if (r.fraction_above_threshold >= 0.25) ++quarter_successes;
    }
    json j{
        {"resolved_config", config_json(cfg)},
        {"trials", o.trials},
        {"burn_in", o.burn_in},
        {"horizon", o.horizon},
        {"eps", o.eps},
        {"time_avg_S_mean", avg.mean()},
        {"threshold", reps.front().threshold},
        {"trials_with_quarter_above", quarter_successes},
        {"predicted_S0", s0 ? json(*s0) : json()},
        {"alpha_over_delta", ad.alpha / ad.delta},
    };
    emit_json(j, o.common.json_path);
    return 0;
}

// ---------------------------------------------------------------- runtime

struct RuntimeOpts {
    std::string algorithm = "ea";
    std::string family = "jump";
    std::uint32_t n = 40, k = 4, delta = 1, w = 4;
    std::uint64_t mu = 1;
    double chi = 1.0, pc = 0.0;
    std::uint64_t lambda_c = 1;
    std::string init = "uniform";
    std::uint64_t budget = 100000000;
    std::uint64_t reps = 20;
    std::uint64_t trajectory_stride = 0;
    std::optional<double> preset_eps;
    CommonOpts common;
};

int run_runtime(const RuntimeOpts& o) {
    const std::uint64_t seed = resolve_seed(o.common);
    AlgorithmConfig cfg;
    cfg.fitness.family = family_from_name(o.family);
    cfg.fitness.n = o.n;
    cfg.fitness.k = o.k;
    cfg.fitness.delta = o.delta;
    cfg.fitness.w = o.w;
    if (cfg.fitness.family == FitnessFamily::OneMax ||
        cfg.fitness.family == FitnessFamily::Hurdle)
        cfg.fitness.k = 0;
    cfg.mu = o.mu;
    cfg.p_c = o.pc;
    cfg.lambda_c = o.lambda_c;
    cfg.mutation = StandardBit{o.chi};
    cfg.init = o.init == "plateau-random" ? InitKind::PlateauRandom
                                          : InitKind::UniformRandom;
    cfg.seed = seed;
    cfg.budget = o.budget;
    cfg.trajectory_stride = o.trajectory_stride;
    cfg.algorithm = o.algorithm == "ga" ? AlgorithmKind::GA : AlgorithmKind::EA;
    if (o.preset_eps) {
        const auto preset =
            theory::constructive_preset(o.n, o.k, o.chi, *o.preset_eps);
        cfg.mu = preset.mu;
        cfg.p_c = preset.p_c;
        cfg.lambda_c = preset.lambda_c;
    }
    cfg.validate();

    const auto stats = experiments::runtime_campaign(cfg, o.reps, o.common.threads);
    if (!o.common.csv_path.empty()) {
        auto out = open_csv(o.common.csv_path);
        write_trial_csv(out, config_hash(cfg), stats.rows);
    }
    json j{
        {"resolved_config", config_json(cfg)},
        {"config_hash", config_hash(cfg)},
        {"repetitions", o.reps},
        {"successes", stats.successes},
        {"timeouts", stats.timeouts},
        {"evals_to_optimum", summary_json(stats.to_optimum)},
        {"evals_to_plateau", summary_json(stats.to_plateau)},
    };
    json trials = json::array();
    for (const auto& r : stats.rows) {
        json t{{"replicate", r.replicate},
               {"evaluations", r.evaluations},
               {"generations", r.generations},
               {"optimum_found", r.optimum_found},
               {"optimum_eval", r.optimum_eval},
               {"plateau_reached", r.plateau_reached},
               {"plateau_eval", r.plateau_eval},
               {"timeout", r.timeout},
               {"final_diversity", r.final_diversity}};
        if (cfg.trajectory_stride > 0) {
            json traj = json::array();
            for (const auto& [gen, S] : r.trajectory) traj.push_back({gen, S});
            t["diversity_trajectory"] = traj;
        }
        trials.push_back(std::move(t));
    }
    j["trials"] = std::move(trials);
    emit_json(j, o.common.json_path);
    return 0;
}

// ---------------------------------------------------------- counterexample

struct CounterexampleOpts {
    std::uint32_t n = 5000, k = 100;
    std::uint64_t mu = 40;
    double chi = 1.0, pc = 0.1;
    std::optional<std::uint64_t> lambda_c;
    std::uint64_t samples = 100000;
    CommonOpts common;
};

int run_counterexample(const CounterexampleOpts& o) {
    const std::uint64_t seed = resolve_seed(o.common);
    const std::uint64_t lambda_c =
        o.lambda_c ? *o.lambda_c
                   : static_cast<std::uint64_t>(std::ceil(
                         theory::lambda_c_requirement(o.k, o.chi, o.mu)));
    const auto P = experiments::counterexample_population(o.n, o.k, o.mu);
    const auto [single, batch] = experiments::counterexample_drift(
        o.n, o.k, o.mu, o.chi, o.pc, lambda_c, o.samples, seed);
    const double mu = static_cast<double>(o.mu);
    const double S = static_cast<double>(P.diversity());
    const double bound =
        (1.0 - 3.0 / (mu * mu)) * S - 9.0 * o.k * mu * o.chi / static_cast<double>(o.n);

    if (!o.common.csv_path.empty()) {
        auto out = open_csv(o.common.csv_path);
        out << "lambda_c,samples,initial_S,mean_next_S,stderr\n";
        out << 1 << ',' << single.samples << ',' << single.initial_S << ','
            << single.mean_next_S << ',' << single.stderror << '\n';
        out << lambda_c << ',' << batch.samples << ',' << batch.initial_S << ','
            << batch.mean_next_S << ',' << batch.stderror << '\n';
    }
    json j{
        {"n", o.n},
        {"k", o.k},
        {"mu", o.mu},
        {"chi", o.chi},
        {"lambda_c", lambda_c},
        {"seed", seed},
        {"S", P.diversity()},
        {"S_formula_3sqrtk_mu2_over_4",
         3.0 * std::sqrt(static_cast<double>(o.k)) * mu * mu / 4.0},
        {"single_offspring",
         {{"mean_next_S", single.mean_next_S},
          {"stderr", single.stderror},
          {"negative_at_3sigma",
           single.mean_next_S + 3.0 * single.stderror < S}}},
        {"competing_offspring",
         {{"mean_next_S", batch.mean_next_S},
          {"stderr", batch.stderror},
          {"crossover_lower_bound", bound},
          {"bound_holds_3sigma",
           batch.mean_next_S >= bound - 3.0 * batch.stderror}}},
    };
    emit_json(j, o.common.json_path);
    return 0;
}

// ---------------------------------------------------------------- hitprob

struct HitprobOpts {
    std::uint32_t n = 12, k = 3;
    std::optional<std::uint32_t> d;
    double chi = 1.0;
    std::uint64_t samples = 10000000;
    CommonOpts common;
};

int run_hitprob(const HitprobOpts& o) {
    const std::uint64_t seed = resolve_seed(o.common);
    const std::uint32_t d = o.d ? *o.d : o.k;
    if (d > o.k) throw CLI::ValidationError("--d must be <= k");
    if (o.k + d > o.n) throw CLI::ValidationError("need k + d <= n");
    // plateau pair at Hamming distance 2d: k-d shared zeros
    BitString x1 = BitString::all_ones(o.n);
    for (std::uint32_t i = 0; i < o.k; ++i) x1.set(i, false);
    BitString x2 = BitString::all_ones(o.n);
    for (std::uint32_t i = 0; i + d < o.k; ++i) x2.set(i, false);
    for (std::uint32_t i = o.k; i < o.k + d; ++i) x2.set(i, false);

    const double exact = experiments::exact_opt_hit(x1, x2, o.chi);
    const double bound = theory::opt_hit_bound(o.n, o.k, d);
    RngStream rng(seed, 0, StreamPurpose::MonteCarlo);
    const auto mc = experiments::mc_opt_hit(x1, x2, o.chi, o.samples, rng);

    if (!o.common.csv_path.empty()) {
        auto out = open_csv(o.common.csv_path);
        out << "n,k,d,chi,samples,exact,bound,mc_rate,mc_stderr\n";
        out << o.n << ',' << o.k << ',' << d << ',' << o.chi << ',' << o.samples
            << ',' << exact << ',' << bound << ',' << mc.rate << ','
            << mc.stderror << '\n';
    }
    json j{
        {"n", o.n},
        {"k", o.k},
        {"d", d},
        {"chi", o.chi},
        {"seed", seed},
        {"samples", o.samples},
        {"exact", exact},
        {"bound", bound},
        {"exact_below_bound", exact <= bound},
        {"mc_rate", mc.rate},
        {"mc_stderr", mc.stderror},
        {"mc_within_3sigma",
         std::abs(mc.rate - exact) <= 3.0 * std::max(mc.stderror, 1e-12)},
    };
    emit_json(j, o.common.json_path);
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "master seed (random if omitted)");
    cmd->add_option("--threads", c.threads, "replication pool size (0 = auto)");
    cmd->add_option("--json", c.json_path, "JSON summary file (stdout if omitted)");
    cmd->add_option("--csv", c.csv_path, "CSV output file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diversity and runtime experiments for steady-state EAs/GAs "
                 "on Jump-type benchmarks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags win");
    app.allow_config_extras(false);

    PredictOpts po;
    auto* predict = app.add_subcommand("predict", "closed-form theory report");
    predict->add_option("--n", po.n)->required();
    predict->add_option("--k", po.k)->required();
    predict->add_option("--mu", po.mu)->required();
    predict->add_option("--chi", po.chi);
    predict->add_option("--pc", po.pc);
    predict->add_option("--eps", po.eps);
    predict->add_flag("--eps-preset-16k", po.preset_eps_16k,
                      "use eps = 1/(16k) instead of --eps");
    predict->add_option("--lambda-c", po.lambda_c);
    predict->add_option("--lower-bound-C", po.lower_bound_C,
                        "constant C in the runtime lower bound (reporting only)");
    predict->add_option("--json", po.json_path);

    DriftOpts dr;
    auto* drift = app.add_subcommand("drift", "one-step diversity drift");
    drift->add_option("--n", dr.n)->required();
    drift->add_option("--k", dr.k)->required();
    drift->add_option("--mu", dr.mu);
    drift->add_option("--chi", dr.chi);
    drift->add_option("--pc", dr.pc);
    drift->add_option("--lambda-c", dr.lambda_c);
    drift->add_option("--mutation", dr.mutation_kind, "standard|paired|fixed");
    drift->add_option("--ell", dr.ell);
    drift->add_option("--radius", dr.radius);
    drift->add_option("--conditioning", dr.conditioning,
                      "all|crossover-only|mutation-only|accepted-on-plateau");
    drift->add_option("--fixture", dr.fixture, "population fixture file");
    drift->add_option("--population", dr.population_kind,
                      "plateau-random|two-cluster");
    drift->add_option("--count-a", dr.count_a, "cluster A size for two-cluster");
    drift->add_option("--samples", dr.samples);
    drift->add_option("--replicates", dr.replicates);
    drift->add_option("--predict", dr.predict, "auto|none");
    add_common(drift, dr.common);

    EquilibriumOpts eq;
    auto* equilibrium =
        app.add_subcommand("equilibrium", "long-run diversity equilibrium");
    equilibrium->add_option("--n", eq.n)->required();
    equilibrium->add_option("--k", eq.k)->required();
    equilibrium->add_option("--mu", eq.mu)->required();
    equilibrium->add_option("--chi", eq.chi);
    equilibrium->add_option("--pc", eq.pc);
    equilibrium->add_option("--lambda-c", eq.lambda_c);
    equilibrium->add_option("--algorithm", eq.algorithm, "ea|ga");
    equilibrium->add_option("--burn-in", eq.burn_in);
    equilibrium->add_option("--horizon", eq.horizon);
    equilibrium->add_option("--eps", eq.eps);
    equilibrium->add_option("--trials", eq.trials);
    add_common(equilibrium, eq.common);

    RuntimeOpts rt;
    auto* runtime = app.add_subcommand("runtime", "evaluations-to-optimum campaign");
    runtime->add_option("--algorithm", rt.algorithm, "ea|ga");
    runtime->add_option("--family", rt.family,
                        "onemax|jump|jumpprime|jumpoffset|hurdle");
    runtime->add_option("--n", rt.n)->required();
    runtime->add_option("--k", rt.k);
    runtime->add_option("--delta", rt.delta);
    runtime->add_option("--w", rt.w);
    runtime->add_option("--mu", rt.mu);
    runtime->add_option("--pc", rt.pc);
    runtime->add_option("--lambda-c", rt.lambda_c);
    runtime->add_option("--init", rt.init, "uniform|plateau-random");
    runtime->add_option("--budget", rt.budget);
    runtime->add_option("--reps", rt.reps);
    runtime->add_option("--trajectory-stride", rt.trajectory_stride,
                        "record S every this many generations (0 = off)");
    runtime->add_option("--preset-eps", rt.preset_eps,
                        "derive mu, pc, lambda_c from the eps presets");
    add_common(runtime, rt.common);

    CounterexampleOpts ce;
    auto* counterexample =
        app.add_subcommand("counterexample", "two-cluster negative drift check");
    counterexample->add_option("--n", ce.n)->required();
    counterexample->add_option("--k", ce.k)->required();
    counterexample->add_option("--mu", ce.mu)->required();
    counterexample->add_option("--chi", ce.chi);
    counterexample->add_option("--pc", ce.pc);
    counterexample->add_option("--lambda-c", ce.lambda_c);
    counterexample->add_option("--samples", ce.samples);
    add_common(counterexample, ce.common);

    HitprobOpts hp;
    auto* hitprob =
        app.add_subcommand("hitprob", "optimum-hit probability: exact vs bound vs MC");
    hitprob->add_option("--n", hp.n)->required();
    hitprob->add_option("--k", hp.k)->required();
    hitprob->add_option("--d", hp.d, "half the parents' Hamming distance (default k)");
    hitprob->add_option("--chi", hp.chi);
    hitprob->add_option("--samples", hp.samples);
    add_common(hitprob, hp.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*predict) return run_predict(po);
        if (*drift) return run_drift(dr);
        if (*equilibrium) return run_equilibrium(eq);
        if (*runtime) return run_runtime(rt);
        if (*counterexample) return run_counterexample(ce);
        if (*hitprob) return run_hitprob(hp);
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
