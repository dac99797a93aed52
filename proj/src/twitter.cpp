#include "monkey/twitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monkey/budget.hpp"
#include "monkey/numeric.hpp"
#include "monkey/rng.hpp"

namespace monkey {

std::string pack_word(const Word& w) {
    std::string key(2 * w.size(), '\0');
    for (std::size_t i = 0; i < w.size(); ++i) {
        key[2 * i] = static_cast<char>(w[i] & 0xff);
        key[2 * i + 1] = static_cast<char>((w[i] >> 8) & 0xff);
    }
    return key;
}

Word unpack_word(const std::string& key) {
    Word w(key.size() / 2);
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = static_cast<std::uint8_t>(key[2 * i]) |
               (static_cast<std::uint32_t>(static_cast<std::uint8_t>(key[2 * i + 1]))
                << 8);
    }
    return w;
}

SampleResult run_experiment(const TwitterConfig& cfg) {
    validate(cfg.keyboard);
    if (cfg.message_length < 1 || cfg.num_messages < 1) {
        throw std::invalid_argument(
            "run_experiment: need message_length >= 1 and num_messages >= 1");
    }
    const std::size_t K = cfg.keyboard.letters.size();
    if (K > 0xffff) {
        throw std::invalid_argument("run_experiment: more than 65535 letters");
    }

    // cum[0] = s, cum[i] = s + q_1 + .. + q_i; a uniform draw below cum[0] is
    // the space, otherwise the first cum entry above it names the letter.
    std::vector<double> cum(K + 1);
    cum[0] = cfg.keyboard.space;
    for (std::size_t i = 0; i < K; ++i) cum[i + 1] = cum[i] + cfg.keyboard.letters[i];

    SampleResult res;
    res.config = cfg;

    MemoryReservation reservation;
    std::uint64_t charged_types = 0;
    constexpr std::uint64_t kTypeChunk = 1 << 16;
    // Rough per-entry footprint of the count map: key block plus node.
    const std::uint64_t type_bytes = 64 + 2 * cfg.message_length;

    Rng rng = Rng(cfg.seed).split(0);
    std::string key_buf;
    for (std::uint64_t msg = 0; msg < cfg.num_messages; ++msg) {
        std::size_t word_start = 0;
        std::size_t counted_chars = 0;
        key_buf.clear();
        for (std::size_t pos = 0; pos < cfg.message_length; ++pos) {
            const double u = rng.next_double();
            if (u < cum[0]) {
                ++res.counts[key_buf];
                ++res.total_words;
                counted_chars += (pos - word_start) + 1;
                word_start = pos + 1;
                key_buf.clear();
            } else {
                std::size_t letter =
                    std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
                letter = std::min(letter, K);
                key_buf.push_back(static_cast<char>(letter & 0xff));
                key_buf.push_back(static_cast<char>((letter >> 8) & 0xff));
            }
        }
        const std::size_t trailing = cfg.message_length - word_start;
        if (trailing > 0) ++res.discarded_nonwords;
        if (counted_chars + trailing != cfg.message_length) {
            throw std::logic_error("run_experiment: message characters unaccounted");
        }
        if (res.counts.size() > charged_types) {
            reservation.grow((res.counts.size() - charged_types + kTypeChunk) *
                                 type_bytes,
                             "run_experiment");
            charged_types = res.counts.size() + kTypeChunk;
        }
    }
    return res;
}

double conditional_frequency(const Keyboard& kb, const Word& w,
                             std::size_t message_length) {
    if (message_length < w.size() + 1) return 0.0;
    const double n = static_cast<double>(message_length - 1);
    const double len = static_cast<double>(w.size());
    const double p = std::exp(word_log_prob(kb, w));
    return p * (1.0 + (n - len) * kb.space) / ((n + 1.0) * kb.space);
}

LnreSummary lnre_summary(const SampleResult& res, const CutoffEnsemble& cut) {
    if (fingerprint(res.config.keyboard) != cut.keyboard_fp ||
        res.config.message_length != cut.n + 1) {
        throw std::invalid_argument("lnre_summary: sample and cutoff configs differ");
    }
    CompensatedSum total;
    for (double lp : cut.log_probs) total.add(std::exp(lp));
    CompensatedSum covered;
    for (const auto& [key, count] : res.counts) {
        covered.add(std::exp(word_log_prob(res.config.keyboard, unpack_word(key))));
    }
    LnreSummary summary;
    summary.observed_types = res.counts.size();
    summary.zero_class = cut.count - summary.observed_types;
    summary.mass_covered = covered.value() / total.value();
    return summary;
}

std::vector<std::pair<Word, std::uint64_t>> sorted_counts(const SampleResult& res) {
    std::vector<std::pair<Word, std::uint64_t>> out;
    out.reserve(res.counts.size());
    for (const auto& [key, count] : res.counts) {
        out.emplace_back(unpack_word(key), count);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return word_order_before(a.first, b.first);
    });
    return out;
}

} // namespace monkey
