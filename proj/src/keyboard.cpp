#include "monkey/keyboard.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "monkey/numeric.hpp"

namespace monkey {

void validate(const Keyboard& kb) {
    if (kb.letters.size() < 2) {
        throw std::invalid_argument("keyboard: need at least 2 letters");
    }
    if (!(kb.space > 0.0 && kb.space < 1.0)) {
        throw std::invalid_argument("keyboard: space probability must lie in (0,1)");
    }
    CompensatedSum sum;
    for (double q : kb.letters) {
        if (!(q > 0.0)) {
            throw std::invalid_argument("keyboard: letter probabilities must be positive");
        }
        sum.add(q);
    }
    if (std::abs(sum.value() + kb.space - 1.0) > 1e-12) {
        throw std::invalid_argument("keyboard: probabilities must sum to 1");
    }
}

Keyboard make_keyboard(const Spacings& sp, double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw std::invalid_argument("make_keyboard: s must lie in (0,1)");
    }
    Keyboard kb;
    kb.space = s;
    kb.letters.reserve(sp.values.size());
    for (double d : sp.values) kb.letters.push_back((1.0 - s) * d);
    validate(kb);
    return kb;
}

namespace {

double letter_power_sum(const std::vector<double>& letters, double t) {
    CompensatedSum sum;
    for (double q : letters) sum.add(std::exp(t * std::log(q)));
    return sum.value();
}

} // namespace

ExponentResult solve_beta(const Keyboard& kb, double tol) {
    validate(kb);
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solve_beta: tol must be positive");
    }
    // g(lo) = K > 1 and g(hi) = 1 - s < 1 bracket the root for t in (0,1).
    double lo = 0.0, hi = 1.0;
    double t = 0.5, residual = 0.0;
    int used = 0;
    bool converged = false;
    for (int i = 1; i <= 200; ++i) {
        t = 0.5 * (lo + hi);
        residual = letter_power_sum(kb.letters, t) - 1.0;
        used = i;
        if (std::abs(residual) <= tol) {
            converged = true;
            break;
        }
        (residual > 0.0 ? lo : hi) = t;
    }
    if (!converged) {
        throw std::runtime_error("solve_beta: no convergence within 200 bisections");
    }
    return {1.0 / t, residual, used};
}

double miller_beta(std::size_t K, double s) {
    if (K < 2 || !(s > 0.0 && s < 1.0)) {
        throw std::invalid_argument("miller_beta: need K >= 2 and s in (0,1)");
    }
    return 1.0 - std::log1p(-s) / std::log(static_cast<double>(K));
}

double mean_log_letter(const Keyboard& kb) {
    const double K = static_cast<double>(kb.letters.size());
    CompensatedSum sum;
    for (double q : kb.letters) sum.add(std::log(q));
    return sum.value() / (K * std::log(K));
}

LogMoments log_moments(const Keyboard& kb) {
    const double K = static_cast<double>(kb.letters.size());
    CompensatedSum sum;
    for (double q : kb.letters) sum.add(std::log(q));
    const double mu1 = sum.value() / K;
    CompensatedSum sq;
    for (double q : kb.letters) {
        const double d = std::log(q) - mu1;
        sq.add(d * d);
    }
    return {mu1, sq.value() / K};
}

std::uint64_t fingerprint(const Keyboard& kb) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto absorb = [&h](double v) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    };
    absorb(kb.space);
    for (double q : kb.letters) absorb(q);
    return h;
}

} // namespace monkey
