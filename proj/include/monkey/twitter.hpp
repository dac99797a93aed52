#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monkey/ensemble.hpp"
#include "monkey/keyboard.hpp"

namespace monkey {

struct TwitterConfig {
    Keyboard keyboard;
    std::size_t message_length = 0; // n+1 characters
    std::uint64_t num_messages = 0;
    std::uint64_t seed = 0;
};

// Words are keyed by their letter indices packed two bytes per letter, so the
// count map stays flat; K is capped at 65535 accordingly.
std::string pack_word(const Word& w);
Word unpack_word(const std::string& key);

struct SampleResult {
    TwitterConfig config;
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total_words = 0;
    std::uint64_t discarded_nonwords = 0;

    std::uint64_t distinct_words() const { return counts.size(); }
};

// Draws num_messages fixed-length character messages and splits each at the
// spaces: every space terminates one word (possibly length zero); a trailing
// letter run is the message's single discarded non-word. The character
// bookkeeping of every message is checked against the message length.
SampleResult run_experiment(const TwitterConfig& cfg);

// Expected share of parsed words equal to w. A word of len letters occupies
// len+1 characters and can start either at the message head or directly after
// one of the other spaces, so its per-message expectation is
// P(w) * (1 + (n - len) * s), and the expected words per message (n+1) * s.
double conditional_frequency(const Keyboard& kb, const Word& w,
                             std::size_t message_length);

struct LnreSummary {
    std::uint64_t observed_types = 0;
    std::uint64_t zero_class = 0; // population types never sampled
    double mass_covered = 0.0;    // population mass of the observed types
};

LnreSummary lnre_summary(const SampleResult& res, const CutoffEnsemble& cut);

// Observed types ordered by count descending, then by the ensemble word
// order.
std::vector<std::pair<Word, std::uint64_t>> sorted_counts(const SampleResult& res);

} // namespace monkey
