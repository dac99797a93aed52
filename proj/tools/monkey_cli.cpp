// Command-line front end: reproducible experiment recipes emitting CSV data
// plus a resolved-parameters JSON next to every output set.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monkey/budget.hpp"
#include "monkey/corpus.hpp"
#include "monkey/ensemble.hpp"
#include "monkey/io.hpp"
#include "monkey/keyboard.hpp"
#include "monkey/rng.hpp"
#include "monkey/spacings.hpp"
#include "monkey/stats.hpp"
#include "monkey/twitter.hpp"
#include "monkey/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct KeyboardOptions {
    std::string dist = "equal";
    std::size_t K = 26;
    double s = 0.18;
    std::uint64_t seed = 1;
    std::string keyboard_file;
    std::string spacings_file;
};

void add_keyboard_options(CLI::App* cmd, KeyboardOptions& opt) {
    cmd->add_option("--dist", opt.dist,
                    "spacing distribution: equal|uniform|beta32|triangular")
        ->capture_default_str();
    cmd->add_option("--K", opt.K, "number of letters")->capture_default_str();
    cmd->add_option("--s", opt.s, "space probability")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    cmd->add_option("--keyboard-file", opt.keyboard_file,
                    "load keyboard from file instead of generating");
    cmd->add_option("--spacings-file", opt.spacings_file,
                    "one-column file of explicit spacings");
}

monkey::Keyboard build_keyboard(const KeyboardOptions& opt) {
    if (!opt.keyboard_file.empty()) {
        return monkey::load_keyboard(opt.keyboard_file);
    }
    monkey::SpacingDistribution dist;
    if (!opt.spacings_file.empty()) {
        dist = monkey::SpacingDistribution::explicit_list(
            monkey::load_probability_column(opt.spacings_file));
    } else {
        dist.kind = monkey::parse_spacing_kind(opt.dist);
    }
    const std::size_t K =
        dist.kind == monkey::SpacingKind::Explicit ? dist.explicit_values.size() : opt.K;
    return monkey::make_keyboard(monkey::make_spacings(dist, K, opt.seed), opt.s);
}

json keyboard_json(const KeyboardOptions& opt, const monkey::Keyboard& kb) {
    return json{{"dist", opt.keyboard_file.empty() ? opt.dist : "file"},
                {"K", kb.letters.size()},
                {"s", kb.space},
                {"seed", opt.seed},
                {"fingerprint", monkey::fingerprint(kb)}};
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw monkey::IoError("cannot create output directory: " + out);
    return dir;
}

void write_resolved_spec(const fs::path& dir, json spec) {
    spec["version"] = monkey::kVersion;
    spec["prng"] = monkey::Rng::kAlgorithmId;
    std::ofstream out(dir / "resolved_spec.json");
    if (!out) throw monkey::IoError("cannot write resolved_spec.json");
    out << spec.dump(2) << '\n';
    if (!out.flush()) throw monkey::IoError("cannot write resolved_spec.json");
}

monkey::CsvMeta meta_for(const monkey::Keyboard& kb, std::uint64_t seed) {
    monkey::CsvMeta meta;
    meta.keyboard_fp = monkey::fingerprint(kb);
    meta.seed = seed;
    return meta;
}

void print_exponent_report(const monkey::Keyboard& kb) {
    const auto res = monkey::solve_beta(kb);
    const auto lm = monkey::log_moments(kb);
    std::printf("beta      %.10f  (residual %.3e, %d iterations)\n", res.beta,
                res.residual, res.iterations);
    std::printf("m_bar_K   %.10f\n", monkey::mean_log_letter(kb));
    std::printf("mu1       %.10f\n", lm.mu1);
    std::printf("sigma1^2  %.10f\n", lm.sigma1_sq);
}

int cmd_keyboard(const KeyboardOptions& opt, const std::string& out) {
    const auto kb = build_keyboard(opt);
    const fs::path dir = prepare_out_dir(out);
    monkey::save_keyboard(dir / "keyboard.txt", kb);
    print_exponent_report(kb);
    write_resolved_spec(dir, json{{"subcommand", "keyboard"},
                                  {"keyboard", keyboard_json(opt, kb)},
                                  {"outputs", {"keyboard.txt"}}});
    return 0;
}

int cmd_topk(const KeyboardOptions& opt, std::uint64_t k, const std::string& out) {
    const auto kb = build_keyboard(opt);
    const fs::path dir = prepare_out_dir(out);
    const auto top = monkey::top_k(kb, k);
    monkey::write_ranked_csv(dir / "ranked.csv", top, meta_for(kb, opt.seed));
    write_resolved_spec(dir, json{{"subcommand", "topk"},
                                  {"keyboard", keyboard_json(opt, kb)},
                                  {"k", k},
                                  {"outputs", {"ranked.csv"}}});
    std::printf("wrote %zu ranked words\n", top.entries.size());
    return 0;
}

int cmd_cutoff(const KeyboardOptions& opt, std::size_t n, const std::string& out) {
    const auto kb = build_keyboard(opt);
    const fs::path dir = prepare_out_dir(out);
    const auto cut = monkey::enumerate_cutoff(kb, n);
    const auto meta = meta_for(kb, opt.seed);
    monkey::write_rank_table_csv(dir / "cutoff_ranks.csv", monkey::rank_table(cut),
                                 meta);
    monkey::write_census_csv(dir / "census.csv", monkey::length_law_check(cut), meta);
    write_resolved_spec(dir, json{{"subcommand", "cutoff"},
                                  {"keyboard", keyboard_json(opt, kb)},
                                  {"n", n},
                                  {"outputs", {"cutoff_ranks.csv", "census.csv"}}});
    std::printf("enumerated %llu words of length <= %zu\n",
                static_cast<unsigned long long>(cut.count), n);
    return 0;
}

int cmd_figure2(std::uint64_t seed, std::uint64_t k, std::uint64_t fit_lo,
                std::uint64_t fit_hi, const std::string& out) {
    const fs::path dir = prepare_out_dir(out);
    const std::vector<monkey::SpacingDistribution> dists = {
        monkey::SpacingDistribution::equal(), monkey::SpacingDistribution::uniform(),
        monkey::SpacingDistribution::beta32(),
        monkey::SpacingDistribution::triangular()};

    json outputs = json::array();
    std::ofstream slopes(dir / "slopes.csv");
    if (!slopes) throw monkey::IoError("cannot write slopes.csv");
    slopes << "distribution,beta,slope,intercept,r_squared,points\n";
    for (const auto& dist : dists) {
        const auto kb =
            monkey::make_keyboard(monkey::make_spacings(dist, 26, seed), 0.18);
        const auto top = monkey::top_k(kb, k);
        const std::string file = std::string("figure2_") + dist.name() + ".csv";
        monkey::write_ranked_csv(dir / file, top, meta_for(kb, seed));
        outputs.push_back(file);

        const auto fit = monkey::fit_tail_slope(monkey::rank_table(top), fit_lo, fit_hi);
        const double beta = monkey::solve_beta(kb).beta;
        slopes << dist.name() << ',' << monkey::format_double(beta) << ','
               << monkey::format_double(fit.slope) << ','
               << monkey::format_double(fit.intercept) << ','
               << monkey::format_double(fit.r_squared) << ',' << fit.points << '\n';
        std::printf("%-10s beta %.6f  fitted slope %.6f  (ranks %llu..%llu)\n",
                    dist.name(), beta, fit.slope,
                    static_cast<unsigned long long>(fit_lo),
                    static_cast<unsigned long long>(fit_hi));
    }
    if (!slopes.flush()) throw monkey::IoError("cannot write slopes.csv");
    outputs.push_back("slopes.csv");
    write_resolved_spec(dir, json{{"subcommand", "figure2"},
                                  {"K", 26},
                                  {"s", 0.18},
                                  {"seed", seed},
                                  {"k", k},
                                  {"fit_range", {fit_lo, fit_hi}},
                                  {"outputs", outputs}});
    return 0;
}

int cmd_figure3(std::uint64_t seed, std::size_t n, std::uint64_t m, double band_lo,
                double band_hi, const std::string& out) {
    const fs::path dir = prepare_out_dir(out);
    const auto kb = monkey::make_keyboard(
        monkey::make_spacings(monkey::SpacingDistribution::uniform(), 26, seed), 0.18);
    const auto cut = monkey::enumerate_cutoff(kb, n);
    const auto meta = meta_for(kb, seed);
    monkey::write_rank_table_csv(dir / "cutoff_ranks.csv", monkey::rank_table(cut),
                                 meta);
    const auto report = monkey::normality_report(cut, kb, band_lo, band_hi);
    monkey::write_quantile_csv(dir / "quantiles.csv", report, meta);
    monkey::write_census_csv(dir / "census.csv", monkey::length_law_check(cut), meta);

    const double mass = monkey::tail_mass(cut, m);
    std::printf("tail_mass(%llu) = %.6f\n", static_cast<unsigned long long>(m), mass);
    std::printf("central band (%g%%, %g%%) deviation = %.6f\n", band_lo, band_hi,
                report.deviation);
    write_resolved_spec(
        dir, json{{"subcommand", "figure3"},
                  {"K", 26},
                  {"s", 0.18},
                  {"seed", seed},
                  {"n", n},
                  {"m", m},
                  {"band", {band_lo, band_hi}},
                  {"tail_mass", mass},
                  {"band_deviation", report.deviation},
                  {"outputs", {"cutoff_ranks.csv", "quantiles.csv", "census.csv"}}});
    return 0;
}

int cmd_convergence(const std::string& dist_name, double s, std::uint64_t seed,
                    const std::vector<std::size_t>& schedule, const std::string& out) {
    const fs::path dir = prepare_out_dir(out);
    monkey::SpacingDistribution dist;
    dist.kind = monkey::parse_spacing_kind(dist_name);

    std::ofstream csv(dir / "convergence.csv");
    if (!csv) throw monkey::IoError("cannot write convergence.csv");
    csv << "K,m_bar,beta,shao_hahn\n";
    std::printf("%8s %14s %14s %14s\n", "K", "m_bar", "-beta", "shao_hahn");
    for (std::size_t K : schedule) {
        const auto sp = monkey::make_spacings(dist, K, seed);
        const auto kb = monkey::make_keyboard(sp, s);
        const double m_bar = monkey::mean_log_letter(kb);
        const double beta = monkey::solve_beta(kb).beta;
        const double sh = monkey::shao_hahn_statistic(sp);
        csv << K << ',' << monkey::format_double(m_bar) << ','
            << monkey::format_double(beta) << ',' << monkey::format_double(sh) << '\n';
        std::printf("%8zu %14.8f %14.8f %14.8f\n", K, m_bar, -beta, sh);
    }
    if (!csv.flush()) throw monkey::IoError("cannot write convergence.csv");
    write_resolved_spec(dir, json{{"subcommand", "convergence"},
                                  {"dist", dist_name},
                                  {"s", s},
                                  {"seed", seed},
                                  {"schedule", schedule},
                                  {"outputs", {"convergence.csv"}}});
    return 0;
}

int cmd_twitter(const KeyboardOptions& opt, std::size_t length,
                std::uint64_t messages, const std::string& out) {
    const auto kb = build_keyboard(opt);
    const fs::path dir = prepare_out_dir(out);

    monkey::TwitterConfig cfg;
    cfg.keyboard = kb;
    cfg.message_length = length;
    cfg.num_messages = messages;
    cfg.seed = opt.seed;
    const auto res = monkey::run_experiment(cfg);

    std::vector<std::uint64_t> counts;
    for (const auto& [word, count] : monkey::sorted_counts(res)) counts.push_back(count);
    monkey::write_rank_table_csv(
        dir / "sample_ranks.csv",
        monkey::rank_table_from_counts(std::move(counts), monkey::TableSource::SampleCount),
        meta_for(kb, opt.seed));

    json summary{{"total_words", res.total_words},
                 {"discarded_nonwords", res.discarded_nonwords},
                 {"distinct_words", res.distinct_words()}};
    // LNRE block only when the population is small enough to enumerate.
    try {
        const auto cut = monkey::enumerate_cutoff(kb, length - 1);
        const auto lnre = monkey::lnre_summary(res, cut);
        summary["zero_class"] = lnre.zero_class;
        summary["mass_covered"] = lnre.mass_covered;
    } catch (const monkey::BudgetError&) {
        summary["zero_class"] = nullptr;
        summary["mass_covered"] = nullptr;
    }
    std::ofstream sum_out(dir / "summary.json");
    if (!sum_out) throw monkey::IoError("cannot write summary.json");
    sum_out << summary.dump(2) << '\n';
    if (!sum_out.flush()) throw monkey::IoError("cannot write summary.json");
    std::cout << summary.dump(2) << '\n';

    write_resolved_spec(dir, json{{"subcommand", "twitter"},
                                  {"keyboard", keyboard_json(opt, kb)},
                                  {"message_length", length},
                                  {"num_messages", messages},
                                  {"outputs", {"sample_ranks.csv", "summary.json"}}});
    return 0;
}

int cmd_corpus(const std::string& input, std::size_t skip_lines, bool no_fold,
               std::uint64_t fit_lo, std::uint64_t fit_hi, const std::string& out) {
    const fs::path dir = prepare_out_dir(out);
    std::string text = monkey::read_text_file(input);
    std::size_t offset = 0;
    for (std::size_t skipped = 0; skipped < skip_lines && offset < text.size();
         ++skipped) {
        const std::size_t eol = text.find('\n', offset);
        offset = eol == std::string::npos ? text.size() : eol + 1;
    }
    monkey::TokenizerConfig rules;
    rules.fold_case = !no_fold;
    const auto tokens =
        monkey::tokenize(std::string_view(text).substr(offset), rules);
    const auto table =
        monkey::build_corpus_table(tokens, fs::path(input).filename().string());

    monkey::CsvMeta meta;
    meta.seed = 0;
    monkey::write_rank_table_csv(dir / "corpus_ranks.csv", table.table, meta);
    std::printf("tokens %llu, types %llu\n",
                static_cast<unsigned long long>(table.token_count),
                static_cast<unsigned long long>(table.type_count));

    json spec{{"subcommand", "corpus"},
              {"input", input},
              {"skip_lines", skip_lines},
              {"fold_case", rules.fold_case},
              {"outputs", {"corpus_ranks.csv"}}};
    if (fit_hi <= table.table.log10_values.size()) {
        // A range the fitter cannot use should not void the tabulation run.
        try {
            const auto fit = monkey::fit_tail_slope(table.table, fit_lo, fit_hi);
            std::printf("slope over ranks [%llu, %llu] = %.6f\n",
                        static_cast<unsigned long long>(fit_lo),
                        static_cast<unsigned long long>(fit_hi), fit.slope);
            spec["fit_range"] = {fit_lo, fit_hi};
            spec["slope"] = fit.slope;
        } catch (const std::invalid_argument& e) {
            std::printf("slope fit skipped: %s\n", e.what());
        }
    } else {
        std::printf("table too short for slope fit over [%llu, %llu]\n",
                    static_cast<unsigned long long>(fit_lo),
                    static_cast<unsigned long long>(fit_hi));
    }
    write_resolved_spec(dir, std::move(spec));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monkey-at-the-typewriter simulator and analysis toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", monkey::kVersion);

    KeyboardOptions kb_opt;
    std::string out_dir = "out";
    std::uint64_t k = 475255;
    std::size_t n = 4;
    std::uint64_t m = 100000;
    std::uint64_t fit_lo = 10, fit_hi = 100000;
    double band_lo = 25.0, band_hi = 75.0;
    std::size_t message_length = 5;
    std::uint64_t messages = 1000000;
    std::string dist_name = "uniform";
    double s_conv = 0.18;
    std::uint64_t seed_only = 1;
    std::vector<std::size_t> schedule = {8, 32, 128, 512, 2048};
    std::string corpus_input;
    std::size_t skip_lines = 0;
    bool no_fold = false;

    auto* keyboard = app.add_subcommand("keyboard", "build a keyboard, report exponents");
    add_keyboard_options(keyboard, kb_opt);
    keyboard->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* topk = app.add_subcommand("topk", "largest word probabilities, ranked");
    add_keyboard_options(topk, kb_opt);
    topk->add_option("--k", k, "number of ranks")->capture_default_str();
    topk->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* cutoff = app.add_subcommand("cutoff", "all words of length <= n");
    add_keyboard_options(cutoff, kb_opt);
    cutoff->add_option("--n", n, "maximum word length")->capture_default_str();
    cutoff->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* figure2 = app.add_subcommand("figure2", "rank plots for the four keyboards");
    figure2->add_option("--seed", seed_only, "seed for the random keyboards")
        ->capture_default_str();
    figure2->add_option("--k", k, "number of ranks")->capture_default_str();
    figure2->add_option("--fit-lo", fit_lo, "fit range lower rank")->capture_default_str();
    figure2->add_option("--fit-hi", fit_hi, "fit range upper rank")->capture_default_str();
    figure2->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* figure3 = app.add_subcommand("figure3", "cutoff ensemble shape diagnostics");
    figure3->add_option("--seed", seed_only, "seed for the uniform keyboard")
        ->capture_default_str();
    figure3->add_option("--n", n, "maximum word length")->capture_default_str();
    figure3->add_option("--m", m, "head size for tail mass")->capture_default_str();
    figure3->add_option("--band-lo", band_lo, "band lower percentile")->capture_default_str();
    figure3->add_option("--band-hi", band_hi, "band upper percentile")->capture_default_str();
    figure3->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* convergence = app.add_subcommand("convergence", "exponent trend over K");
    convergence->add_option("--dist", dist_name, "spacing distribution")
        ->capture_default_str();
    convergence->add_option("--s", s_conv, "space probability")->capture_default_str();
    convergence->add_option("--seed", seed_only, "seed")->capture_default_str();
    convergence->add_option("--schedule", schedule, "K values")->capture_default_str();
    convergence->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* twitter = app.add_subcommand("twitter", "fixed-length message sampling");
    add_keyboard_options(twitter, kb_opt);
    twitter->add_option("--length", message_length, "characters per message")
        ->capture_default_str();
    twitter->add_option("--messages", messages, "number of messages")
        ->capture_default_str();
    twitter->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* corpus = app.add_subcommand("corpus", "rank-frequency table of a text file");
    corpus->add_option("--input", corpus_input, "UTF-8 text file")->required();
    corpus->add_option("--skip-lines", skip_lines, "drop leading lines (boilerplate)")
        ->capture_default_str();
    corpus->add_flag("--no-fold", no_fold, "keep letter case");
    corpus->add_option("--fit-lo", fit_lo, "fit range lower rank")->capture_default_str();
    corpus->add_option("--fit-hi", fit_hi, "fit range upper rank")->capture_default_str();
    corpus->add_option("--out", out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (keyboard->parsed()) return cmd_keyboard(kb_opt, out_dir);
        if (topk->parsed()) return cmd_topk(kb_opt, k, out_dir);
        if (cutoff->parsed()) return cmd_cutoff(kb_opt, n, out_dir);
        if (figure2->parsed()) return cmd_figure2(seed_only, k, fit_lo, fit_hi, out_dir);
        if (figure3->parsed()) return cmd_figure3(seed_only, n, m, band_lo, band_hi, out_dir);
        if (convergence->parsed())
            return cmd_convergence(dist_name, s_conv, seed_only, schedule, out_dir);
        if (twitter->parsed())
            return cmd_twitter(kb_opt, message_length, messages, out_dir);
        if (corpus->parsed())
            return cmd_corpus(corpus_input, skip_lines, no_fold, fit_lo, fit_hi, out_dir);
        return kExitValidation;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    } catch (const monkey::BudgetError& e) {
        std::cerr << "resource budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const monkey::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const monkey::DecodeError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
