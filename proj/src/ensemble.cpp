#include "monkey/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "monkey/budget.hpp"
#include "monkey/numeric.hpp"

namespace monkey {

double word_log_prob(const Keyboard& kb, const Word& w) {
    const std::size_t K = kb.letters.size();
    double lp = 0.0;
    for (std::uint32_t letter : w) {
        if (letter < 1 || letter > K) {
            throw std::invalid_argument("word_log_prob: letter index out of range");
        }
        lp += std::log(kb.letters[letter - 1]);
    }
    return lp + std::log(kb.space);
}

bool word_order_before(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct PrefixNode {
    double log_prob;
    std::uint32_t parent;
    std::uint32_t letter; // 1-based; 0 for the root
    std::uint32_t depth;
};

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

// Collects the letters of a prefix from the root down.
void path_of(const std::vector<PrefixNode>& nodes, std::uint32_t id, Word& out) {
    out.resize(nodes[id].depth);
    for (std::size_t i = out.size(); i > 0; id = nodes[id].parent) {
        out[--i] = nodes[id].letter;
    }
}

// True when prefix a ranks strictly before prefix b: larger value first,
// then shorter, then letter-lexicographic.
bool prefix_before(const std::vector<PrefixNode>& nodes, std::uint32_t a,
                   std::uint32_t b, Word& buf_a, Word& buf_b) {
    if (nodes[a].log_prob != nodes[b].log_prob) {
        return nodes[a].log_prob > nodes[b].log_prob;
    }
    if (nodes[a].depth != nodes[b].depth) {
        return nodes[a].depth < nodes[b].depth;
    }
    path_of(nodes, a, buf_a);
    path_of(nodes, b, buf_b);
    return std::lexicographical_compare(buf_a.begin(), buf_a.end(), buf_b.begin(),
                                        buf_b.end());
}

std::uint64_t checked_mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              const char* what) {
    if (b != 0 && a > (std::numeric_limits<std::uint64_t>::max() - c) / b) {
        throw BudgetError(std::string(what) + ": size overflows the accounting");
    }
    return a * b + c;
}

} // namespace

RankedEnsemble top_k(const Keyboard& kb, std::uint64_t k) {
    validate(kb);
    if (k < 1) {
        throw std::invalid_argument("top_k: k must be at least 1");
    }
    const std::size_t K = kb.letters.size();

    // Worst case: every pop pushes K children; reserve the whole working set
    // up front so an oversized request fails before any allocation.
    const std::uint64_t max_nodes =
        checked_mul_add(k, K, 1, "top_k");
    const std::uint64_t node_bytes =
        checked_mul_add(max_nodes, sizeof(PrefixNode), 0, "top_k");
    const std::uint64_t heap_bytes =
        checked_mul_add(max_nodes, sizeof(std::uint32_t), 0, "top_k");
    const std::uint64_t entry_bytes =
        checked_mul_add(k, sizeof(RankedEntry) + 8 * sizeof(std::uint32_t), 0, "top_k");
    MemoryReservation reservation(
        checked_mul_add(node_bytes + heap_bytes, 1, entry_bytes, "top_k"), "top_k");
    if (max_nodes > std::numeric_limits<std::uint32_t>::max()) {
        throw BudgetError("top_k: prefix arena exceeds 32-bit indexing");
    }

    std::vector<double> log_q(K);
    for (std::size_t i = 0; i < K; ++i) log_q[i] = std::log(kb.letters[i]);
    const double log_s = std::log(kb.space);

    std::vector<PrefixNode> nodes;
    nodes.reserve(static_cast<std::size_t>(max_nodes));
    nodes.push_back({0.0, kNoParent, 0, 0});

    Word buf_a, buf_b;
    const auto lower_priority = [&](std::uint32_t a, std::uint32_t b) {
        return prefix_before(nodes, b, a, buf_a, buf_b);
    };
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                        decltype(lower_priority)>
        frontier(lower_priority);
    frontier.push(0);

    RankedEnsemble out;
    out.keyboard_fp = fingerprint(kb);
    out.entries.reserve(static_cast<std::size_t>(k));

    for (std::uint64_t rank = 1; rank <= k; ++rank) {
        const std::uint32_t id = frontier.top();
        frontier.pop();

        RankedEntry entry;
        entry.rank = rank;
        entry.log_prob = nodes[id].log_prob + log_s;
        path_of(nodes, id, entry.word);
        out.entries.push_back(std::move(entry));

        if (rank == k) break;
        for (std::uint32_t letter = 1; letter <= K; ++letter) {
            nodes.push_back({nodes[id].log_prob + log_q[letter - 1], id, letter,
                             nodes[id].depth + 1});
            frontier.push(static_cast<std::uint32_t>(nodes.size() - 1));
        }
    }
    return out;
}

CutoffEnsemble enumerate_cutoff(const Keyboard& kb, std::size_t n) {
    validate(kb);
    const std::size_t K = kb.letters.size();

    std::uint64_t count = 0;
    std::uint64_t layer = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        count = checked_mul_add(1, count, layer, "enumerate_cutoff");
        if (i < n) layer = checked_mul_add(layer, K, 0, "enumerate_cutoff");
    }
    MemoryReservation reservation(
        checked_mul_add(count, sizeof(double), (n + 1) * 16, "enumerate_cutoff"),
        "enumerate_cutoff");

    std::vector<double> log_q(K);
    for (std::size_t i = 0; i < K; ++i) log_q[i] = std::log(kb.letters[i]);
    const double log_s = std::log(kb.space);

    CutoffEnsemble cut;
    cut.n = n;
    cut.count = count;
    cut.keyboard_fp = fingerprint(kb);
    cut.log_probs.reserve(static_cast<std::size_t>(count));
    cut.length_counts.assign(n + 1, 0);
    cut.length_mass.assign(n + 1, 0.0);

    std::vector<CompensatedSum> mass(n + 1);
    // Iterative depth-first walk; prefix[d] holds the letter sums of the
    // current path so each word's value is the same root-down accumulation
    // used by top_k and word_log_prob.
    std::vector<double> prefix(n + 1, 0.0);
    std::vector<std::uint32_t> next(n + 1, 1);
    std::size_t depth = 0;
    for (;;) {
        if (next[depth] == 1) { // first visit: emit this prefix's word
            const double lp = prefix[depth] + log_s;
            cut.log_probs.push_back(lp);
            ++cut.length_counts[depth];
            mass[depth].add(std::exp(lp));
        }
        if (depth < n && next[depth] <= K) {
            const std::uint32_t letter = next[depth]++;
            prefix[depth + 1] = prefix[depth] + log_q[letter - 1];
            ++depth;
            next[depth] = 1;
        } else {
            if (depth == 0) break;
            --depth;
        }
    }
    for (std::size_t i = 0; i <= n; ++i) cut.length_mass[i] = mass[i].value();
    return cut;
}

TailInheritance tail_inheritance_check(const RankedEnsemble& top,
                                       const CutoffEnsemble& cut) {
    if (top.keyboard_fp != cut.keyboard_fp) {
        throw std::invalid_argument(
            "tail_inheritance_check: ensembles come from different keyboards");
    }
    std::vector<double> sorted(cut.log_probs);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    constexpr double eps = 1e-12;
    const std::uint64_t limit =
        std::min<std::uint64_t>(top.entries.size(), sorted.size());
    TailInheritance result;
    bool still_equal = true;
    for (std::uint64_t r = 0; r < limit; ++r) {
        const double unrestricted = top.entries[r].log_prob;
        const double restricted = sorted[r];
        if (restricted > unrestricted + eps) ++result.violations;
        if (still_equal && std::abs(restricted - unrestricted) <= eps) {
            result.max_equal_rank = r + 1;
        } else {
            still_equal = false;
        }
    }
    return result;
}

} // namespace monkey
