#include "monkey/corpus.hpp"

#include <algorithm>
#include <unordered_map>

namespace monkey {
namespace {

struct Decoded {
    char32_t cp;
    std::size_t width;
};

Decoded decode_utf8(std::string_view text, std::size_t i) {
    const auto byte = [&](std::size_t k) -> std::uint8_t {
        return static_cast<std::uint8_t>(text[k]);
    };
    const std::uint8_t b0 = byte(i);
    if (b0 < 0x80) return {b0, 1};
    std::size_t width;
    char32_t cp;
    if ((b0 & 0xe0) == 0xc0) {
        width = 2;
        cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
        width = 3;
        cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
        width = 4;
        cp = b0 & 0x07;
    } else {
        throw DecodeError("invalid UTF-8 lead byte", i);
    }
    if (i + width > text.size()) {
        throw DecodeError("truncated UTF-8 sequence", i);
    }
    for (std::size_t k = 1; k < width; ++k) {
        if ((byte(i + k) & 0xc0) != 0x80) {
            throw DecodeError("invalid UTF-8 continuation byte", i + k);
        }
        cp = (cp << 6) | (byte(i + k) & 0x3f);
    }
    const char32_t min_cp[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[width] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
        throw DecodeError("invalid UTF-8 encoding", i);
    }
    return {cp, width};
}

bool is_letter(char32_t c) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
    if (c >= 0xc0 && c <= 0xff) return c != 0xd7 && c != 0xf7; // Latin-1
    if (c >= 0x100 && c <= 0x17f) return true;                 // Latin Extended-A
    if (c >= 0x386 && c <= 0x3ce) return c != 0x387;           // Greek
    if (c >= 0x400 && c <= 0x4ff) return true;                 // Cyrillic
    return false;
}

bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

char32_t fold(char32_t c) {
    if (c >= 'A' && c <= 'Z') return c + 0x20;
    if (c >= 0xc0 && c <= 0xde && c != 0xd7) return c + 0x20; // Latin-1
    if (c >= 0x100 && c <= 0x137 && c % 2 == 0) return c + 1; // Latin Ext-A pairs
    if (c >= 0x139 && c <= 0x148 && c % 2 == 1) return c + 1;
    if (c >= 0x14a && c <= 0x177 && c % 2 == 0) return c + 1;
    if (c == 0x178) return 0xff;
    if (c >= 0x179 && c <= 0x17e && c % 2 == 1) return c + 1;
    if (c >= 0x391 && c <= 0x3ab && c != 0x3a2) return c + 0x20; // Greek
    if (c >= 0x386 && c <= 0x38f) {                              // accented Greek
        switch (c) {
            case 0x386: return 0x3ac;
            case 0x388: return 0x3ad;
            case 0x389: return 0x3ae;
            case 0x38a: return 0x3af;
            case 0x38c: return 0x3cc;
            case 0x38e: return 0x3cd;
            case 0x38f: return 0x3ce;
        }
    }
    if (c >= 0x410 && c <= 0x42f) return c + 0x20; // Cyrillic
    if (c >= 0x400 && c <= 0x40f) return c + 0x50;
    return c;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

} // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& rules) {
    std::vector<std::string> tokens;
    std::string current;
    bool pending_apostrophe = false; // seen after letters, kept only if letters follow

    const auto flush = [&] {
        pending_apostrophe = false;
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const Decoded d = decode_utf8(text, i);
        i += d.width;
        if (is_letter(d.cp)) {
            if (pending_apostrophe) {
                current.push_back('\'');
                pending_apostrophe = false;
            }
            append_utf8(current, rules.fold_case ? fold(d.cp) : d.cp);
        } else if (rules.apostrophe_internal && is_apostrophe(d.cp) &&
                   !current.empty() && !pending_apostrophe) {
            pending_apostrophe = true;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

CorpusTable build_corpus_table(const std::vector<std::string>& tokens,
                               std::string source_name) {
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const auto& tok : tokens) ++counts[tok];

    CorpusTable table;
    table.source_name = std::move(source_name);
    table.token_count = tokens.size();
    table.type_count = counts.size();
    table.entries.reserve(counts.size());
    for (auto& [tok, count] : counts) table.entries.emplace_back(tok, count);
    std::sort(table.entries.begin(), table.entries.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });

    std::vector<std::uint64_t> ranked;
    ranked.reserve(table.entries.size());
    for (const auto& e : table.entries) ranked.push_back(e.second);
    table.table = rank_table_from_counts(std::move(ranked), TableSource::CorpusCount);
    return table;
}

} // namespace monkey
