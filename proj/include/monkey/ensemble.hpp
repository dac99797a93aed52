#pragma once

#include <cstdint>
#include <vector>

#include "monkey/keyboard.hpp"

namespace monkey {

// Letter indices in [1..K]; the empty word is the bare space.
using Word = std::vector<std::uint32_t>;

// ln P(word) = sum of ln q over the letters plus ln s, accumulated first to
// last so equal letter sequences produce bit-identical values everywhere.
double word_log_prob(const Keyboard& kb, const Word& w);

// Total order used for equal probabilities: shorter word first, then
// letter-index lexicographic. Returns true when a ranks before b.
bool word_order_before(const Word& a, const Word& b);

struct RankedEntry {
    std::uint64_t rank = 0;
    Word word;
    double log_prob = 0.0;
};

struct RankedEnsemble {
    std::vector<RankedEntry> entries;
    std::uint64_t keyboard_fp = 0;
};

// The k largest word probabilities of the infinite ensemble, in descending
// order with deterministic tie handling. Best-first search over the
// lexicographic tree: popping a prefix emits its word (prefix plus space) and
// pushes the K one-letter extensions, which all carry strictly smaller
// prefix values. Fails with BudgetError before allocating past the cap.
RankedEnsemble top_k(const Keyboard& kb, std::uint64_t k);

struct CutoffEnsemble {
    std::size_t n = 0;                // maximum word length in letters
    std::uint64_t count = 0;          // N_n = sum of K^i, i = 0..n
    std::uint64_t keyboard_fp = 0;
    std::vector<double> log_probs;    // all N_n values, tree walk order
    std::vector<std::uint64_t> length_counts; // exactly K^i words of length i
    std::vector<double> length_mass;          // per-length probability sums
};

// Every word probability for lengths 0..n by depth-first walk.
CutoffEnsemble enumerate_cutoff(const Keyboard& kb, std::size_t n);

struct TailInheritance {
    std::uint64_t max_equal_rank = 0; // longest shared prefix of the rankings
    std::uint64_t violations = 0;     // ranks where the cutoff value exceeds
};

// Rank-by-rank comparison of the cutoff ensemble against the infinite-tail
// ranking: the cutoff value can never exceed the unrestricted value, and the
// two agree on an initial stretch of ranks.
TailInheritance tail_inheritance_check(const RankedEnsemble& top,
                                       const CutoffEnsemble& cut);

} // namespace monkey
