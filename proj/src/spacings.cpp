#include "monkey/spacings.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "monkey/numeric.hpp"
#include "monkey/rng.hpp"

namespace monkey {
namespace {

// Division-point CDF for Beta(3,2): integral of 12x^2(1-x).
double beta32_cdf(double x) { return x * x * x * (4.0 - 3.0 * x); }

double beta32_inverse_cdf(double u) {
    double lo = 0.0, hi = 1.0;
    // Bisection on a strictly increasing polynomial CDF, to 1e-12.
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (beta32_cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Symmetric triangular density on [0,1] with peak 2 at 1/2.
double triangular_inverse_cdf(double u) {
    return u <= 0.5 ? std::sqrt(0.5 * u) : 1.0 - std::sqrt(0.5 * (1.0 - u));
}

double draw_point(const SpacingDistribution& dist, Rng& rng) {
    const double u = rng.next_double();
    switch (dist.kind) {
        case SpacingKind::Uniform: return u;
        case SpacingKind::Beta32: return beta32_inverse_cdf(u);
        case SpacingKind::Triangular: return triangular_inverse_cdf(u);
        default: throw std::invalid_argument("draw_point: kind has no density");
    }
}

void check_unit_sum(const std::vector<double>& values, const char* what) {
    CompensatedSum sum;
    for (double v : values) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(std::string(what) +
                                        ": values must be strictly positive");
        }
        sum.add(v);
    }
    if (std::abs(sum.value() - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(what) + ": values must sum to 1");
    }
}

} // namespace

SpacingDistribution SpacingDistribution::explicit_list(std::vector<double> values) {
    check_unit_sum(values, "explicit spacings");
    return {SpacingKind::Explicit, std::move(values)};
}

const char* SpacingDistribution::name() const {
    switch (kind) {
        case SpacingKind::Uniform: return "uniform";
        case SpacingKind::Beta32: return "beta32";
        case SpacingKind::Triangular: return "triangular";
        case SpacingKind::Equal: return "equal";
        case SpacingKind::Explicit: return "explicit";
    }
    return "unknown";
}

SpacingKind parse_spacing_kind(const std::string& name) {
    if (name == "uniform") return SpacingKind::Uniform;
    if (name == "beta32") return SpacingKind::Beta32;
    if (name == "triangular") return SpacingKind::Triangular;
    if (name == "equal") return SpacingKind::Equal;
    if (name == "explicit") return SpacingKind::Explicit;
    throw std::invalid_argument("unknown spacing distribution: " + name);
}

std::vector<double> sample_iid(const SpacingDistribution& dist, std::size_t count,
                               std::uint64_t seed) {
    if (!dist.is_continuous()) {
        throw std::invalid_argument("sample_iid: distribution has no i.i.d. step");
    }
    if (count < 1) {
        throw std::invalid_argument("sample_iid: count must be at least 1");
    }
    Rng rng = Rng(seed).split(0);
    std::vector<double> out(count);
    for (auto& x : out) x = draw_point(dist, rng);
    return out;
}

Spacings make_spacings(const SpacingDistribution& dist, std::size_t K,
                       std::uint64_t seed) {
    if (K < 2) {
        throw std::invalid_argument("make_spacings: K must be at least 2");
    }
    Spacings sp;
    sp.seed = seed;
    sp.distribution = dist;

    if (dist.kind == SpacingKind::Equal) {
        sp.values.assign(K, 1.0 / static_cast<double>(K));
        return sp;
    }
    if (dist.kind == SpacingKind::Explicit) {
        if (dist.explicit_values.size() != K) {
            throw std::invalid_argument("make_spacings: explicit list length != K");
        }
        check_unit_sum(dist.explicit_values, "explicit spacings");
        sp.values = dist.explicit_values;
        return sp;
    }

    const Rng base(seed);
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng = base.split(attempt);
        std::vector<double> points(K - 1);
        for (auto& x : points) x = draw_point(dist, rng);
        std::sort(points.begin(), points.end(), std::greater<double>());

        std::vector<double> gaps(K);
        gaps[0] = 1.0 - points[0];
        for (std::size_t i = 1; i + 1 < K; ++i) gaps[i] = points[i - 1] - points[i];
        gaps[K - 1] = points[K - 2];

        if (std::all_of(gaps.begin(), gaps.end(), [](double g) { return g > 0.0; })) {
            sp.values = std::move(gaps);
            return sp;
        }
    }
}

double shao_hahn_statistic(const Spacings& sp) {
    const double K = static_cast<double>(sp.values.size());
    CompensatedSum sum;
    for (double d : sp.values) sum.add(std::log(K * d));
    return sum.value() / K;
}

} // namespace monkey
