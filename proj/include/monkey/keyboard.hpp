#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monkey/spacings.hpp"

namespace monkey {

// Letter probabilities q_1..q_K plus the space probability s; q_i + s sum to 1.
struct Keyboard {
    std::vector<double> letters;
    double space = 0.0;
};

struct ExponentResult {
    double beta = 0.0;
    double residual = 0.0; // sum of q_i^(1/beta) minus 1 at the returned beta
    int iterations = 0;
};

struct LogMoments {
    double mu1 = 0.0;       // mean of ln q_i (counting measure)
    double sigma1_sq = 0.0; // population variance of ln q_i
};

// Throws std::invalid_argument when the keyboard breaks its invariants.
void validate(const Keyboard& kb);

// q_i = (1 - s) * D_i.
Keyboard make_keyboard(const Spacings& sp, double s);

// Power-law exponent: the unique beta > 1 with sum q_i^(1/beta) = 1. Solved by
// bisection in t = 1/beta on (0,1), where g(t) = sum q_i^t falls strictly from
// K to 1 - s; capped at 200 iterations with failure reported, never silent.
ExponentResult solve_beta(const Keyboard& kb, double tol = 1e-12);

// Closed form for the equal-probability keyboard: 1 - ln(1-s)/ln K.
double miller_beta(std::size_t K, double s);

// Mean of log_K q_i; bounded above by -beta (AM-GM), equality iff all equal.
double mean_log_letter(const Keyboard& kb);

LogMoments log_moments(const Keyboard& kb);

// FNV-1a over the raw bytes of s and q_1..q_K; identifies a keyboard in
// output metadata and guards cross-module mixups.
std::uint64_t fingerprint(const Keyboard& kb);

} // namespace monkey
