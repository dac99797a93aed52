#include "monkey/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "monkey/numeric.hpp"

namespace monkey {
namespace {

constexpr double kLn10 = std::numbers::ln10;

void check_non_increasing(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) {
            throw std::invalid_argument(std::string(what) +
                                        ": values must be non-increasing");
        }
    }
}

} // namespace

RankFrequencyTable rank_table(const RankedEnsemble& top) {
    RankFrequencyTable t;
    t.source = TableSource::ModelProbability;
    t.log10_values.reserve(top.entries.size());
    for (const auto& e : top.entries) t.log10_values.push_back(e.log_prob / kLn10);
    check_non_increasing(t.log10_values, "rank_table");
    return t;
}

RankFrequencyTable rank_table(const CutoffEnsemble& cut) {
    RankFrequencyTable t;
    t.source = TableSource::ModelProbability;
    t.log10_values.reserve(cut.log_probs.size());
    std::vector<double> sorted(cut.log_probs);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    for (double lp : sorted) t.log10_values.push_back(lp / kLn10);
    return t;
}

RankFrequencyTable rank_table_from_counts(std::vector<std::uint64_t> counts,
                                          TableSource source) {
    RankFrequencyTable t;
    t.source = source;
    t.log10_values.reserve(counts.size());
    for (std::uint64_t c : counts) {
        if (c == 0) throw std::invalid_argument("rank_table_from_counts: zero count");
        t.log10_values.push_back(std::log10(static_cast<double>(c)));
    }
    check_non_increasing(t.log10_values, "rank_table_from_counts");
    return t;
}

RankFrequencyTable rank_table_from_values(std::vector<double> values,
                                          TableSource source) {
    RankFrequencyTable t;
    t.source = source;
    t.log10_values.reserve(values.size());
    for (double v : values) {
        if (!(v > 0.0)) {
            throw std::invalid_argument("rank_table_from_values: values must be positive");
        }
        t.log10_values.push_back(std::log10(v));
    }
    check_non_increasing(t.log10_values, "rank_table_from_values");
    return t;
}

TailFit fit_tail_slope(const RankFrequencyTable& t, std::uint64_t lo,
                       std::uint64_t hi) {
    const std::uint64_t size = t.log10_values.size();
    if (lo < 1 || hi > size || hi < lo || hi - lo < 10) {
        throw std::invalid_argument("fit_tail_slope: degenerate rank range");
    }
    std::vector<double> xs, ys;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const bool run_ends =
            i + 1 == size || t.log10_values[i + 1] != t.log10_values[run_start];
        if (run_ends) {
            const std::uint64_t rep = i + 1; // largest rank carrying this value
            if (rep >= lo && rep <= hi) {
                xs.push_back(std::log10(static_cast<double>(rep)));
                ys.push_back(t.log10_values[run_start]);
            }
            run_start = i + 1;
        }
    }
    if (xs.size() < 2) {
        throw std::invalid_argument(
            "fit_tail_slope: fewer than two distinct values in range");
    }
    const LinearFit fit = ols_fit(xs, ys);
    return {fit.slope, fit.intercept, fit.r_squared, lo, hi,
            static_cast<std::uint64_t>(xs.size())};
}

SandwichResult sandwich_check(const RankFrequencyTable& t, double beta,
                              std::uint64_t r_min) {
    if (!(beta > 1.0)) {
        throw std::invalid_argument("sandwich_check: beta must exceed 1");
    }
    if (r_min < 1 || r_min > t.log10_values.size()) {
        throw std::invalid_argument("sandwich_check: r_min out of range");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::uint64_t r = r_min; r <= t.log10_values.size(); ++r) {
        // log10 of P_r * r^beta keeps the scan overflow-free.
        const double v =
            t.log10_values[r - 1] + beta * std::log10(static_cast<double>(r));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    SandwichResult result;
    result.c1 = std::pow(10.0, lo);
    result.c2 = std::pow(10.0, hi);
    result.ratio = std::pow(10.0, hi - lo);
    result.holds = result.c1 > 0.0 && std::isfinite(result.ratio);
    return result;
}

double tail_mass(const CutoffEnsemble& cut, std::uint64_t m) {
    if (m > cut.count) {
        throw std::invalid_argument("tail_mass: m exceeds the ensemble size");
    }
    std::vector<double> sorted(cut.log_probs);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    CompensatedSum head, total;
    for (std::uint64_t i = 0; i < sorted.size(); ++i) {
        const double p = std::exp(sorted[i]);
        total.add(p);
        if (i < m) head.add(p);
    }
    return head.value() / total.value();
}

NormalityReport normality_report(const CutoffEnsemble& cut, const Keyboard& kb,
                                 double band_lo, double band_hi) {
    if (fingerprint(kb) != cut.keyboard_fp) {
        throw std::invalid_argument("normality_report: keyboard mismatch");
    }
    if (!(band_lo > 0.0 && band_lo < band_hi && band_hi < 100.0)) {
        throw std::invalid_argument("normality_report: band must satisfy 0 < lo < hi < 100");
    }
    const LogMoments lm = log_moments(kb);
    if (!(lm.sigma1_sq > 0.0)) {
        throw std::invalid_argument(
            "normality_report: letter log-variance is zero (equal keyboard)");
    }
    const double n = static_cast<double>(cut.n);
    const double center = n * lm.mu1 + std::log(kb.space);
    const double scale = std::sqrt(n * lm.sigma1_sq);

    std::vector<double> sorted(cut.log_probs);
    std::sort(sorted.begin(), sorted.end());

    NormalityReport report;
    report.band_lo = band_lo;
    report.band_hi = band_hi;
    const std::size_t count = sorted.size();
    for (double pct = 0.5; pct <= 99.5 + 1e-9; pct += 0.5) {
        // Order statistic at the percentile, linearly interpolated.
        const double pos = pct / 100.0 * static_cast<double>(count - 1);
        const std::size_t i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        const double value =
            i + 1 < count ? sorted[i] * (1.0 - frac) + sorted[i + 1] * frac
                          : sorted[count - 1];
        QuantilePoint pt;
        pt.percentile = pct;
        pt.theoretical_z = inverse_normal_cdf(pct / 100.0);
        pt.observed_z = (value - center) / scale;
        if (pct >= band_lo && pct <= band_hi) {
            report.deviation =
                std::max(report.deviation, std::abs(pt.observed_z - pt.theoretical_z));
        }
        report.points.push_back(pt);
    }
    return report;
}

std::vector<LengthCensusRow> length_law_check(const CutoffEnsemble& cut) {
    // K and s are recovered from the walk itself: the fan-out at length 1 and
    // the bare-space word emitted first.
    const double s = std::exp(cut.log_probs.at(0));
    const double K = cut.n >= 1 ? static_cast<double>(cut.length_counts.at(1)) : 1.0;

    std::vector<LengthCensusRow> rows;
    double expected_count = 1.0;
    double expected_mass = s;
    double expected_mean = s;
    for (std::size_t i = 0; i <= cut.n; ++i) {
        LengthCensusRow row;
        row.length = i;
        row.count = cut.length_counts[i];
        row.expected_count = static_cast<std::uint64_t>(expected_count + 0.5);
        row.mass = cut.length_mass[i];
        row.expected_mass = expected_mass;
        row.mean_prob = row.mass / static_cast<double>(row.count);
        row.expected_mean = expected_mean;
        rows.push_back(row);
        expected_count *= K;
        expected_mass *= 1.0 - s;
        expected_mean *= (1.0 - s) / K;
    }
    return rows;
}

double entropy_oracle(const SpacingDistribution& dist) {
    const auto plogp = [](double h) { return h > 0.0 ? h * std::log(h) : 0.0; };
    constexpr double tol = 1e-8;
    switch (dist.kind) {
        case SpacingKind::Uniform:
            return -integrate([&](double) { return plogp(1.0); }, 0.0, 1.0, tol);
        case SpacingKind::Beta32:
            return -integrate(
                [&](double x) { return plogp(12.0 * x * x * (1.0 - x)); }, 0.0, 1.0,
                tol);
        case SpacingKind::Triangular:
            // Split at the density's kink.
            return -(integrate([&](double x) { return plogp(4.0 * x); }, 0.0, 0.5,
                               0.5 * tol) +
                     integrate([&](double x) { return plogp(4.0 * (1.0 - x)); }, 0.5,
                               1.0, 0.5 * tol));
        default:
            throw std::invalid_argument("entropy_oracle: density required");
    }
}

} // namespace monkey
