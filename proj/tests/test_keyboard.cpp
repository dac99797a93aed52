#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "monkey/keyboard.hpp"
#include "monkey/numeric.hpp"
#include "monkey/spacings.hpp"

using namespace monkey;

namespace {

Keyboard explicit_keyboard(std::vector<double> letters, double s) {
    std::vector<double> spacing_values;
    spacing_values.reserve(letters.size());
    for (double q : letters) spacing_values.push_back(q / (1.0 - s));
    // rescale exactly so the spacings pass their own unit-sum check
    CompensatedSum sum;
    for (double v : spacing_values) sum.add(v);
    for (double& v : spacing_values) v /= sum.value();
    return make_keyboard(
        make_spacings(SpacingDistribution::explicit_list(spacing_values),
                      spacing_values.size(), 0),
        s);
}

Keyboard random_keyboard(SpacingKind kind, std::size_t K, double s,
                         std::uint64_t seed) {
    SpacingDistribution d;
    d.kind = kind;
    return make_keyboard(make_spacings(d, K, seed), s);
}

} // namespace

TEST_CASE("keyboard letters are the spacings scaled by 1-s") {
    const auto sp = make_spacings(SpacingDistribution::uniform(), 26, 3);
    const auto kb = make_keyboard(sp, 0.18);
    REQUIRE(kb.letters.size() == 26);
    CHECK(kb.space == 0.18);
    for (std::size_t i = 0; i < 26; ++i) {
        CHECK(kb.letters[i] == (1.0 - 0.18) * sp.values[i]);
    }
    CompensatedSum sum;
    for (double q : kb.letters) sum.add(q);
    sum.add(kb.space);
    CHECK(std::abs(sum.value() - 1.0) <= 1e-12);
    CHECK_NOTHROW(validate(kb));
}

TEST_CASE("keyboard validation rejects broken inputs") {
    const auto sp = make_spacings(SpacingDistribution::equal(), 26, 0);
    CHECK_THROWS_AS((void)make_keyboard(sp, 1.2), std::invalid_argument);
    CHECK_THROWS_AS((void)make_keyboard(sp, 0.0), std::invalid_argument);

    Keyboard bad;
    bad.letters = {0.5};
    bad.space = 0.5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument); // one letter
    bad.letters = {0.4, 0.4};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument); // sum 1.3
}

TEST_CASE("equal-keyboard exponent closed form") {
    CHECK(std::abs(miller_beta(26, 0.18) - 1.0609100855) < 1e-9);
    CHECK(std::abs(miller_beta(2, 0.5) - 2.0) < 1e-12);
    CHECK_THROWS_AS((void)miller_beta(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)miller_beta(26, 0.0), std::invalid_argument);
    // strictly decreasing in K toward 1
    double prev = miller_beta(2, 0.18);
    for (std::size_t K = 3; K <= 40; ++K) {
        const double cur = miller_beta(K, 0.18);
        CHECK(cur < prev);
        CHECK(cur > 1.0);
        prev = cur;
    }
}

TEST_CASE("exponent solver agrees with the equal closed form") {
    for (std::size_t K : {2, 5, 10, 26, 64}) {
        for (double s : {0.1, 0.18, 0.5}) {
            const auto kb = random_keyboard(SpacingKind::Equal, K, s, 0);
            const auto res = solve_beta(kb);
            CHECK(std::abs(res.beta - miller_beta(K, s)) < 1e-10);
            CHECK(std::abs(res.residual) <= 1e-12);
        }
    }
    const auto ten = random_keyboard(SpacingKind::Equal, 10, 0.5, 0);
    CHECK(std::abs(solve_beta(ten).beta - 1.3010299957) < 1e-9);
}

TEST_CASE("two-letter geometric keyboards match their closed form") {
    // q2 = q1^2 turns the exponent equation into x + x^2 = 1 with x = q1^(1/beta),
    // so beta = ln q1 / ln((sqrt 5 - 1)/2).
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (double q1 : {0.3, 0.5, 0.6}) {
        const auto kb = explicit_keyboard({q1, q1 * q1}, 1.0 - q1 - q1 * q1);
        const auto res = solve_beta(kb);
        CHECK(std::abs(res.beta - std::log(q1) / std::log(golden)) < 1e-9);
    }
}

TEST_CASE("exponent solver leaves a tiny residual on random keyboards") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        for (auto kind :
             {SpacingKind::Uniform, SpacingKind::Beta32, SpacingKind::Triangular}) {
            const auto kb = random_keyboard(kind, 26, 0.18, seed);
            const auto res = solve_beta(kb);
            CHECK(res.beta > 1.0);
            CHECK(std::abs(res.residual) <= 1e-12);
            CHECK(res.iterations <= 200);
        }
    }
}

TEST_CASE("solver tolerance must be positive") {
    const auto kb = random_keyboard(SpacingKind::Equal, 26, 0.18, 0);
    CHECK_THROWS_AS((void)solve_beta(kb, 0.0), std::invalid_argument);
}

TEST_CASE("log letter moments on a hand-computed keyboard") {
    const auto kb = explicit_keyboard({0.5, 0.25}, 0.25);
    const auto m = log_moments(kb);
    const double mu = 0.5 * (std::log(0.5) + std::log(0.25));
    const double half_log2 = 0.5 * std::numbers::ln2;
    CHECK(std::abs(m.mu1 - mu) < 1e-13);
    CHECK(std::abs(m.sigma1_sq - half_log2 * half_log2) < 1e-13);
}

TEST_CASE("scaling all letters shifts the log mean, not the variance") {
    const auto a = explicit_keyboard({0.5, 0.25}, 0.25);
    const auto b = explicit_keyboard({0.4, 0.2}, 0.4); // letters scaled by 0.8
    const auto ma = log_moments(a);
    const auto mb = log_moments(b);
    CHECK(std::abs((mb.mu1 - ma.mu1) - std::log(0.8)) < 1e-12);
    CHECK(std::abs(mb.sigma1_sq - ma.sigma1_sq) < 1e-12);
}

TEST_CASE("equal keyboards have zero letter variance") {
    const auto kb = random_keyboard(SpacingKind::Equal, 26, 0.18, 0);
    CHECK(log_moments(kb).sigma1_sq == 0.0);
}

TEST_CASE("mean log letter equals the negated exponent only when equal") {
    const auto equal = random_keyboard(SpacingKind::Equal, 26, 0.18, 0);
    CHECK(std::abs(mean_log_letter(equal) + miller_beta(26, 0.18)) < 1e-12);

    // arithmetic-geometric mean inequality, strict for unequal letters
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        for (auto kind :
             {SpacingKind::Uniform, SpacingKind::Beta32, SpacingKind::Triangular}) {
            for (std::size_t K : {2, 7, 26}) {
                const auto kb = random_keyboard(kind, K, 0.3, seed);
                CHECK(mean_log_letter(kb) <= -solve_beta(kb).beta + 1e-12);
            }
        }
    }
}

TEST_CASE("mean log letter drifts to -1 like the entropy-corrected rate") {
    const double lambda = std::numbers::egamma;
    const double lnK = std::log(4096.0);
    const auto kb = random_keyboard(SpacingKind::Uniform, 4096, 0.18, 2);
    const double predicted = -1.0 - lambda / lnK + std::log(0.82) / lnK;
    CHECK(std::abs(mean_log_letter(kb) - predicted) < 0.06);
}

TEST_CASE("fingerprints identify keyboards") {
    const auto a = random_keyboard(SpacingKind::Uniform, 26, 0.18, 1);
    const auto b = random_keyboard(SpacingKind::Uniform, 26, 0.18, 1);
    const auto c = random_keyboard(SpacingKind::Uniform, 26, 0.18, 2);
    const auto d = random_keyboard(SpacingKind::Uniform, 26, 0.17, 1);
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(fingerprint(a) != fingerprint(c));
    CHECK(fingerprint(a) != fingerprint(d));
}
