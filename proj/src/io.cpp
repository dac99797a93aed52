#include "monkey/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "monkey/rng.hpp"
#include "monkey/version.hpp"

namespace monkey {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string meta_line(const CsvMeta& meta) {
    std::ostringstream os;
    os << "# meta: keyboard=" << hex64(meta.keyboard_fp) << " seed=" << meta.seed
       << " prng=" << (meta.prng_id.empty() ? Rng::kAlgorithmId : meta.prng_id)
       << " version=" << (meta.version.empty() ? kVersion : meta.version);
    return os.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_word(const Word& w) {
    if (w.empty()) return "_";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out.push_back('-');
        out += std::to_string(w[i]);
    }
    return out;
}

void write_rank_table_csv(const std::filesystem::path& path,
                          const RankFrequencyTable& table, const CsvMeta& meta) {
    auto out = open_out(path);
    out << meta_line(meta) << "\nrank,log10_rank,log10_value\n";
    for (std::size_t i = 0; i < table.log10_values.size(); ++i) {
        const double rank = static_cast<double>(i + 1);
        out << (i + 1) << ',' << format_double(std::log10(rank)) << ','
            << format_double(table.log10_values[i]) << '\n';
    }
    finish(out, path);
}

void write_ranked_csv(const std::filesystem::path& path, const RankedEnsemble& top,
                      const CsvMeta& meta) {
    auto out = open_out(path);
    out << meta_line(meta) << "\nrank,length,word,log10_prob,log10_rank\n";
    for (const auto& e : top.entries) {
        out << e.rank << ',' << e.word.size() << ',' << render_word(e.word) << ','
            << format_double(e.log_prob / std::numbers::ln10) << ','
            << format_double(std::log10(static_cast<double>(e.rank))) << '\n';
    }
    finish(out, path);
}

void write_quantile_csv(const std::filesystem::path& path,
                        const NormalityReport& report, const CsvMeta& meta) {
    auto out = open_out(path);
    out << meta_line(meta) << "\npercentile,theoretical_z,observed_z\n";
    for (const auto& pt : report.points) {
        out << format_double(pt.percentile) << ',' << format_double(pt.theoretical_z)
            << ',' << format_double(pt.observed_z) << '\n';
    }
    finish(out, path);
}

void write_census_csv(const std::filesystem::path& path,
                      const std::vector<LengthCensusRow>& rows, const CsvMeta& meta) {
    auto out = open_out(path);
    out << meta_line(meta) << "\nlength,count,mass,mean_prob\n";
    for (const auto& row : rows) {
        out << row.length << ',' << row.count << ',' << format_double(row.mass) << ','
            << format_double(row.mean_prob) << '\n';
    }
    finish(out, path);
}

void save_keyboard(const std::filesystem::path& path, const Keyboard& kb) {
    validate(kb);
    auto out = open_out(path);
    out << "s=" << format_double(kb.space) << '\n';
    for (double q : kb.letters) out << format_double(q) << '\n';
    finish(out, path);
}

Keyboard load_keyboard(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open keyboard file: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("s=", 0) != 0) {
        throw IoError("keyboard file must start with s=<value>: " + path.string());
    }
    Keyboard kb;
    try {
        kb.space = std::stod(line.substr(2));
    } catch (const std::exception&) {
        throw IoError("unparsable space probability: " + path.string());
    }
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        try {
            kb.letters.push_back(std::stod(line));
        } catch (const std::exception&) {
            throw IoError("unparsable letter probability: " + path.string());
        }
    }
    validate(kb);
    return kb;
}

std::vector<double> load_probability_column(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        try {
            values.push_back(std::stod(line));
        } catch (const std::exception&) {
            throw IoError("unparsable probability in " + path.string() + ": " + line);
        }
    }
    return values;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("read failed: " + path.string());
    return buffer.str();
}

} // namespace monkey
