#include "plateau/fitness.hpp"
#include "plateau/variation.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace plateau;

namespace {

BitString with_ones(std::uint32_t n, std::uint32_t ones) {
    BitString x(n);
    for (std::uint32_t i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

} // namespace

TEST_CASE("jump values") {
    const FitnessSpec spec{FitnessFamily::Jump, 10, 3, 0, 0};
    spec.validate();
    CHECK(evaluate(spec, with_ones(10, 7)) == 10);
    CHECK(evaluate(spec, with_ones(10, 8)) == 2);
    CHECK(evaluate(spec, with_ones(10, 9)) == 1);
    CHECK(evaluate(spec, with_ones(10, 10)) == 13);
    CHECK_THROWS_AS(evaluate(spec, with_ones(9, 3)), std::invalid_argument);
}

TEST_CASE("jumpprime agrees with jump except at the optimum") {
    const FitnessSpec jump{FitnessFamily::Jump, 12, 4, 0, 0};
    const FitnessSpec prime{FitnessFamily::JumpPrime, 12, 4, 0, 0};
    for (std::uint32_t o = 0; o < 12; ++o)
        CHECK(evaluate_unitation(prime, o) == evaluate_unitation(jump, o));
    CHECK(evaluate_unitation(prime, 12) == 0);
    CHECK(evaluate_unitation(jump, 12) == 16);
    // every plateau point strictly beats the trapped optimum
    CHECK(evaluate_unitation(prime, 8) > evaluate_unitation(prime, 12));
}

TEST_CASE("jumpoffset values and order consistency") {
    const FitnessSpec spec{FitnessFamily::JumpOffset, 10, 4, 2, 0};
    spec.validate();
    CHECK(evaluate(spec, with_ones(10, 7)) == -7);
    CHECK(evaluate(spec, with_ones(10, 8)) == 8);
    CHECK(evaluate(spec, with_ones(10, 6)) == 6);
    CHECK(evaluate(spec, with_ones(10, 10)) == 10);

    // below n-k+delta the comparison order matches Jump_k
    const FitnessSpec jump{FitnessFamily::Jump, 10, 4, 0, 0};
    const std::uint32_t limit = 10 - 4 + 2;
    for (std::uint32_t a = 0; a < limit; ++a) {
        for (std::uint32_t b = 0; b < limit; ++b) {
            const auto ja = evaluate_unitation(jump, a);
            const auto jb = evaluate_unitation(jump, b);
            const auto oa = evaluate_unitation(spec, a);
            const auto ob = evaluate_unitation(spec, b);
            REQUIRE((ja < jb) == (oa < ob));
            REQUIRE((ja == jb) == (oa == ob));
        }
    }

    CHECK_THROWS_AS((FitnessSpec{FitnessFamily::JumpOffset, 10, 4, 5, 0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((FitnessSpec{FitnessFamily::JumpOffset, 10, 4, 0, 0}).validate(),
                    std::invalid_argument);
}

TEST_CASE("hurdle values") {
    const FitnessSpec spec{FitnessFamily::Hurdle, 20, 0, 0, 5};
    spec.validate();
    // zeros=7: -2 - 2/5 = -2.4, stored as -12 over denominator 5
    CHECK(evaluate(spec, with_ones(20, 13)) == -12);
    CHECK(fitness_denominator(spec) == 5);
    CHECK(fitness_value(spec, -12) == Catch::Approx(-2.4));
    CHECK(evaluate(spec, with_ones(20, 20)) == 0);

    // any point with <= iw - w zeros strictly beats any point with iw zeros
    for (std::uint32_t i = 1; i * 5 <= 20; ++i) {
        std::int64_t best_at_local = evaluate_unitation(spec, 20 - i * 5);
        for (std::uint32_t z = 0; z + 5 <= i * 5; ++z)
            REQUIRE(evaluate_unitation(spec, 20 - z) > best_at_local);
    }

    // monotone equivalence of the scaled form with the rational definition
    for (std::uint32_t za = 0; za <= 20; ++za)
        for (std::uint32_t zb = 0; zb <= 20; ++zb) {
            const double ra = -std::ceil(za / 5.0) - (za % 5) / 5.0;
            const double rb = -std::ceil(zb / 5.0) - (zb % 5) / 5.0;
            const auto sa = evaluate_unitation(spec, 20 - za);
            const auto sb = evaluate_unitation(spec, 20 - zb);
            REQUIRE((ra < rb) == (sa < sb));
        }
}

TEST_CASE("fitness depends only on unitation") {
    RngStream rng(21, 0, StreamPurpose::Aux);
    const std::vector<FitnessSpec> specs = {
        {FitnessFamily::OneMax, 16, 0, 0, 0},
        {FitnessFamily::Jump, 16, 5, 0, 0},
        {FitnessFamily::JumpPrime, 16, 5, 0, 0},
        {FitnessFamily::JumpOffset, 16, 5, 2, 0},
        {FitnessFamily::Hurdle, 16, 0, 0, 3},
    };
    for (const auto& spec : specs) {
        for (int rep = 0; rep < 50; ++rep) {
            const BitString x = random_bitstring(16, rng);
            // random permutation of x
            BitString y(16);
            std::vector<std::uint32_t> perm(16);
            for (std::uint32_t i = 0; i < 16; ++i) perm[i] = i;
            for (std::uint32_t i = 0; i + 1 < 16; ++i) {
                const auto j = i + static_cast<std::uint32_t>(rng.uniform_index(16 - i));
                std::swap(perm[i], perm[j]);
            }
            for (std::uint32_t i = 0; i < 16; ++i) y.set(perm[i], x.get(i));
            REQUIRE(evaluate(spec, x) == evaluate(spec, y));
        }
    }
}

TEST_CASE("plateau membership") {
    const FitnessSpec spec{FitnessFamily::Jump, 6, 2, 0, 0};
    CHECK_FALSE(is_on_plateau(spec, BitString::from_text("110111")));
    CHECK(is_on_plateau(spec, BitString::from_text("110110")));
    CHECK_FALSE(is_on_plateau(spec, BitString::all_ones(6)));
    const FitnessSpec onemax{FitnessFamily::OneMax, 6, 0, 0, 0};
    CHECK_THROWS_AS(is_on_plateau(onemax, BitString::from_text("110110")),
                    std::invalid_argument);
}

TEST_CASE("hurdle local optimum level") {
    const FitnessSpec spec{FitnessFamily::Hurdle, 20, 0, 0, 5};
    CHECK(hurdle_local_optimum_level(spec, with_ones(20, 10)) == 2);
    CHECK_FALSE(hurdle_local_optimum_level(spec, with_ones(20, 13)).has_value());
    CHECK(hurdle_local_optimum_level(spec, with_ones(20, 20)) == 0);
    const FitnessSpec jump{FitnessFamily::Jump, 20, 3, 0, 0};
    CHECK_THROWS_AS(hurdle_local_optimum_level(jump, with_ones(20, 10)),
                    std::invalid_argument);
}

TEST_CASE("terminal optimum") {
    CHECK(is_terminal_optimum({FitnessFamily::Jump, 8, 2, 0, 0}, 8));
    CHECK_FALSE(is_terminal_optimum({FitnessFamily::Jump, 8, 2, 0, 0}, 7));
    CHECK_FALSE(is_terminal_optimum({FitnessFamily::JumpPrime, 8, 2, 0, 0}, 8));
    CHECK(is_terminal_optimum({FitnessFamily::Hurdle, 8, 0, 0, 2}, 8));
}
