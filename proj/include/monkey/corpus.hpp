#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monkey/stats.hpp"

namespace monkey {

// Raised on malformed UTF-8; carries the byte offset of the offending unit.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

struct TokenizerConfig {
    bool fold_case = true;
    // Apostrophes (' and U+2019) are token characters only between letters.
    bool apostrophe_internal = true;
};

// Splits UTF-8 text into tokens of letters (Basic Latin, Latin-1, Latin
// Extended-A, Greek, Cyrillic) with optional internal apostrophes; everything
// else separates. Case folding covers the same ranges.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& rules = {});

struct CorpusTable {
    RankFrequencyTable table;
    std::vector<std::pair<std::string, std::uint64_t>> entries; // rank order
    std::uint64_t token_count = 0;
    std::uint64_t type_count = 0;
    std::string source_name;
};

// Counts types and ranks them by count descending, then token lexicographic.
CorpusTable build_corpus_table(const std::vector<std::string>& tokens,
                               std::string source_name = "");

} // namespace monkey
