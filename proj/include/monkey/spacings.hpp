#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monkey {

enum class SpacingKind { Uniform, Beta32, Triangular, Equal, Explicit };

// How the unit interval is divided: one of three continuous point densities,
// the exact equal division, or a caller-supplied list.
struct SpacingDistribution {
    SpacingKind kind = SpacingKind::Uniform;
    std::vector<double> explicit_values; // Explicit kind only

    static SpacingDistribution uniform() { return {SpacingKind::Uniform, {}}; }
    static SpacingDistribution beta32() { return {SpacingKind::Beta32, {}}; }
    static SpacingDistribution triangular() { return {SpacingKind::Triangular, {}}; }
    static SpacingDistribution equal() { return {SpacingKind::Equal, {}}; }
    static SpacingDistribution explicit_list(std::vector<double> values);

    bool is_continuous() const {
        return kind == SpacingKind::Uniform || kind == SpacingKind::Beta32 ||
               kind == SpacingKind::Triangular;
    }
    const char* name() const;
};

SpacingKind parse_spacing_kind(const std::string& name);

// K positive probabilities summing to 1: the sorted-descending gaps of K-1
// i.i.d. division points, or the degenerate kinds.
struct Spacings {
    std::vector<double> values;
    std::uint64_t seed = 0;
    SpacingDistribution distribution;
};

// Raw i.i.d. draws from the division-point density (continuous kinds only).
std::vector<double> sample_iid(const SpacingDistribution& dist, std::size_t count,
                               std::uint64_t seed);

// Full construction: draw K-1 points, sort descending, take successive gaps.
// A zero gap (floating-point collision) aborts the draw and retries on the
// next substream, so every returned spacing is strictly positive.
Spacings make_spacings(const SpacingDistribution& dist, std::size_t K,
                       std::uint64_t seed);

// Mean of ln(K * D_i); the spacings-side statistic behind the universality
// limit (entropy of the division density minus the Euler constant).
double shao_hahn_statistic(const Spacings& sp);

} // namespace monkey
