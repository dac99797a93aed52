#pragma once

#include <cstdint>
#include <vector>

#include "monkey/ensemble.hpp"
#include "monkey/keyboard.hpp"
#include "monkey/spacings.hpp"

namespace monkey {

enum class TableSource { ModelProbability, SampleCount, CorpusCount };

// Rank r = index + 1; values stored as log10 so that deep-tail probabilities
// never pass through a denormal exponentiation.
struct RankFrequencyTable {
    std::vector<double> log10_values; // non-increasing
    TableSource source = TableSource::ModelProbability;
};

RankFrequencyTable rank_table(const RankedEnsemble& top);
RankFrequencyTable rank_table(const CutoffEnsemble& cut);
RankFrequencyTable rank_table_from_counts(std::vector<std::uint64_t> counts,
                                          TableSource source);
RankFrequencyTable rank_table_from_values(std::vector<double> values,
                                          TableSource source);

struct TailFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::uint64_t rank_lo = 0;
    std::uint64_t rank_hi = 0;
    std::uint64_t points = 0; // observations after tie-run collapse
};

// OLS of log10(value) on log10(rank) over ranks [lo, hi]. A run of exactly
// equal values is one observation placed at the run's largest rank (the
// number of values >= that value); without the collapse, plateaus of tied
// values would swamp the regression with repeated points and drag the fitted
// slope away from the plotted envelope.
TailFit fit_tail_slope(const RankFrequencyTable& t, std::uint64_t lo,
                       std::uint64_t hi);

struct SandwichResult {
    double c1 = 0.0;    // min of P_r * r^beta over r >= r_min
    double c2 = 0.0;    // max of the same
    double ratio = 0.0; // c2 / c1, tightness diagnostic
    bool holds = false;
};

// Verifies that P_r stays pinched between two power-law envelopes.
SandwichResult sandwich_check(const RankFrequencyTable& t, double beta,
                              std::uint64_t r_min);

// Fraction of the cutoff ensemble's probability carried by its m largest
// members.
double tail_mass(const CutoffEnsemble& cut, std::uint64_t m);

struct QuantilePoint {
    double percentile = 0.0;
    double theoretical_z = 0.0;
    double observed_z = 0.0;
};

struct NormalityReport {
    std::vector<QuantilePoint> points; // percentile grid 0.5 .. 99.5
    double band_lo = 0.0;              // central band, in percent
    double band_hi = 0.0;
    double deviation = 0.0; // max |observed - theoretical| inside the band
};

// Normal-quantile diagnostics of ln P over the cutoff ensemble. Observed
// quantiles are standardized by the length-n letter moments: the center is
// n*mu1 + ln s (every word carries exactly one space factor) and the scale
// sqrt(n*sigma1^2). Requires sigma1^2 > 0.
NormalityReport normality_report(const CutoffEnsemble& cut, const Keyboard& kb,
                                 double band_lo, double band_hi);

struct LengthCensusRow {
    std::size_t length = 0;
    std::uint64_t count = 0;
    std::uint64_t expected_count = 0; // K^length
    double mass = 0.0;
    double expected_mass = 0.0;   // (1-s)^length * s
    double mean_prob = 0.0;       // mass / count
    double expected_mean = 0.0;   // ((1-s)/K)^length * s
};

// Per-length census of the cutoff ensemble against the geometric length law.
std::vector<LengthCensusRow> length_law_check(const CutoffEnsemble& cut);

// Differential entropy -integral of h ln h for the continuous division
// densities, by adaptive quadrature to 1e-8.
double entropy_oracle(const SpacingDistribution& dist);

} // namespace monkey
