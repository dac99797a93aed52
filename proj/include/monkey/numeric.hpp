#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>

namespace monkey {

// Neumaier compensated accumulator; keeps 1e-12-level identities testable on
// half-million-term sums.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of y on x. Requires at least two distinct x values.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

// Inverse standard normal CDF, |error| < 1e-9 over (0,1).
double inverse_normal_cdf(double p);

// Adaptive Simpson quadrature of f over [a,b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

} // namespace monkey
