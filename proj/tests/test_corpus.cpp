#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "monkey/corpus.hpp"
#include "monkey/keyboard.hpp"
#include "monkey/rng.hpp"
#include "monkey/spacings.hpp"
#include "monkey/stats.hpp"

using namespace monkey;

TEST_CASE("tokenizer splits on non-letters and folds case") {
    const auto tokens = tokenize("The the THE.");
    REQUIRE(tokens.size() == 3);
    for (const auto& t : tokens) CHECK(t == "the");

    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("42 7x9") == std::vector<std::string>{"x"});
    CHECK(tokenize("a,b;c") == (std::vector<std::string>{"a", "b", "c"}));
}

TEST_CASE("tokenizer keeps apostrophes only between letters") {
    CHECK(tokenize("don't stop") == (std::vector<std::string>{"don't", "stop"}));
    CHECK(tokenize("rock 'n' roll") ==
          (std::vector<std::string>{"rock", "n", "roll"}));
    CHECK(tokenize("students' books") ==
          (std::vector<std::string>{"students", "books"}));
    // the typographic apostrophe folds into the plain one
    CHECK(tokenize("don\xe2\x80\x99t") == (std::vector<std::string>{"don't"}));

    TokenizerConfig plain;
    plain.apostrophe_internal = false;
    CHECK(tokenize("don't", plain) == (std::vector<std::string>{"don", "t"}));
}

TEST_CASE("case folding can be disabled") {
    TokenizerConfig keep;
    keep.fold_case = false;
    CHECK(tokenize("Mixed CASE", keep) ==
          (std::vector<std::string>{"Mixed", "CASE"}));
}

TEST_CASE("tokenizer folds across the supported alphabets") {
    CHECK(tokenize("na\xc3\xafve caf\xc3\xa9") ==
          (std::vector<std::string>{"na\xc3\xafve", "caf\xc3\xa9"}));
    // AE ligature and slashed O fold to their lowercase forms
    CHECK(tokenize("\xc3\x86r\xc3\x98") ==
          (std::vector<std::string>{"\xc3\xa6r\xc3\xb8"}));
    // multiplication and division signs are separators, not letters
    CHECK(tokenize("a\xc3\x97\x62 c\xc3\xb7\x64") ==
          (std::vector<std::string>{"a", "b", "c", "d"}));
    // Latin Extended-A pairs: A-macron to a-macron
    CHECK(tokenize("\xc4\x80ma") == (std::vector<std::string>{"\xc4\x81ma"}));
    // Greek: capital mu-omicron-sigma fold to the lowercase run
    CHECK(tokenize("\xce\x9c\xce\x9f\xce\xa3") ==
          (std::vector<std::string>{"\xce\xbc\xce\xbf\xcf\x83"}));
    // Cyrillic with the Io letter outside the basic range
    CHECK(tokenize("\xd0\x81\xd0\x9b\xd0\x9a\xd0\x90") ==
          (std::vector<std::string>{"\xd1\x91\xd0\xbb\xd0\xba\xd0\xb0"}));
}

TEST_CASE("case folding is idempotent on its own output") {
    const std::string text =
        "The QUICK \xc3\x86r\xc3\x98 \xce\x9c\xce\x9f\xce\xa3 "
        "\xd0\x9c\xd0\x9e\xd0\xa1\xd0\x9a\xd0\x92\xd0\x90 don't";
    const auto once = tokenize(text);
    std::string refolded;
    for (const auto& t : once) {
        refolded += t;
        refolded += ' ';
    }
    CHECK(tokenize(refolded) == once);
}

TEST_CASE("malformed input is rejected with its byte offset") {
    const auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            (void)tokenize(text);
        } catch (const DecodeError& e) {
            return e.byte_offset;
        }
        FAIL("expected a decode error");
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("ok \xff") == 3);          // invalid lead byte
    CHECK(offset_of("\x80") == 0);             // bare continuation byte
    CHECK(offset_of("a\xc3") == 1);            // truncated sequence
    CHECK(offset_of("\xe2(\xa1") == 1);        // broken continuation
    CHECK(offset_of("\xc0\xaf") == 0);         // overlong encoding
    CHECK(offset_of("\xed\xa0\x80") == 0);     // surrogate half
    CHECK(offset_of("ab\xf5\x80\x80\x80") == 2); // beyond U+10FFFF
}

TEST_CASE("corpus table counts, sorts, and ties break alphabetically") {
    const auto table = build_corpus_table({"a", "b", "a"}, "tiny");
    REQUIRE(table.entries.size() == 2);
    CHECK(table.entries[0] == std::make_pair(std::string("a"), std::uint64_t{2}));
    CHECK(table.entries[1] == std::make_pair(std::string("b"), std::uint64_t{1}));
    CHECK(table.token_count == 3);
    CHECK(table.type_count == 2);
    CHECK(table.source_name == "tiny");

    const auto tied = build_corpus_table({"pear", "apple", "pear", "apple"});
    CHECK(tied.entries[0].first == "apple");
    CHECK(tied.entries[1].first == "pear");

    std::uint64_t sum = 0;
    for (const auto& e : tied.entries) sum += e.second;
    CHECK(sum == tied.token_count);

    // the embedded rank table is ready for slope fitting
    CHECK(tied.table.source == TableSource::CorpusCount);
    CHECK(tied.table.log10_values.size() == tied.type_count);
}

TEST_CASE("typed monkey text shows a near--1 rank-frequency slope") {
    // characters drawn from a 26-letter random keyboard, then run through the
    // ordinary text pipeline
    const auto kb = make_keyboard(
        make_spacings(SpacingDistribution::uniform(), 26, 2), 0.18);
    std::vector<double> cum(27);
    cum[0] = kb.space;
    for (int i = 0; i < 26; ++i) cum[i + 1] = cum[i] + kb.letters[i];

    Rng rng(7);
    std::string text;
    text.reserve(2000000);
    for (std::size_t i = 0; i < 2000000; ++i) {
        const double u = rng.next_double();
        if (u < cum[0]) {
            text.push_back(' ');
            continue;
        }
        std::size_t lo = 0, hi = 26;
        while (lo + 1 < hi) {
            const std::size_t mid = (lo + hi) / 2;
            (u < cum[mid] ? hi : lo) = mid;
        }
        text.push_back(static_cast<char>('a' + lo));
    }

    const auto table = build_corpus_table(tokenize(text), "typed");
    CHECK(table.token_count > 200000);
    const auto fit = fit_tail_slope(table.table, 10, 1000);
    CHECK(fit.slope > -1.25);
    CHECK(fit.slope < -0.8);
}
