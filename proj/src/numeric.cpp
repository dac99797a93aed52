#include "monkey/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monkey {

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("ols_fit: need two or more paired points");
    }
    const double n = static_cast<double>(x.size());
    CompensatedSum sx, sy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
    }
    const double mx = sx.value() / n;
    const double my = sy.value() / n;
    CompensatedSum sxx, sxy, syy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx.add(dx * dx);
        sxy.add(dx * dy);
        syy.add(dy * dy);
    }
    if (sxx.value() <= 0.0) {
        throw std::invalid_argument("ols_fit: x values are all identical");
    }
    LinearFit fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy.value() > 0.0
                        ? (sxy.value() * sxy.value()) / (sxx.value() * syy.value())
                        : 1.0;
    return fit;
}

// Acklam's rational approximation, sharpened to near machine precision by one
// Halley step on the complementary error function.
double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("inverse_normal_cdf: p must lie in (0,1)");
    }
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double integrate_step(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb, double whole, double tol,
                      int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return integrate_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           integrate_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(b > a) || !(tol > 0.0)) {
        throw std::invalid_argument("integrate: need b > a and tol > 0");
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, a, b);
    return integrate_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace monkey
