#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "monkey/corpus.hpp"
#include "monkey/ensemble.hpp"
#include "monkey/keyboard.hpp"
#include "monkey/stats.hpp"

namespace monkey {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Comment header carried by every CSV so a file identifies the exact run.
struct CsvMeta {
    std::uint64_t keyboard_fp = 0;
    std::uint64_t seed = 0;
    std::string prng_id;
    std::string version;
};

std::string meta_line(const CsvMeta& meta);

// Shortest decimal round-trip formatting for doubles.
std::string format_double(double v);

// Renders letter indices as 1-based hyphen-separated numbers; "_" when empty.
std::string render_word(const Word& w);

void write_rank_table_csv(const std::filesystem::path& path,
                          const RankFrequencyTable& table, const CsvMeta& meta);

void write_ranked_csv(const std::filesystem::path& path, const RankedEnsemble& top,
                      const CsvMeta& meta);

void write_quantile_csv(const std::filesystem::path& path,
                        const NormalityReport& report, const CsvMeta& meta);

void write_census_csv(const std::filesystem::path& path,
                      const std::vector<LengthCensusRow>& rows, const CsvMeta& meta);

// Keyboard text format: header line "s=<value>", then one letter probability
// per line, full round-trip precision.
void save_keyboard(const std::filesystem::path& path, const Keyboard& kb);
Keyboard load_keyboard(const std::filesystem::path& path);

// One probability per line; comments (#) and blank lines are skipped.
std::vector<double> load_probability_column(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

} // namespace monkey
