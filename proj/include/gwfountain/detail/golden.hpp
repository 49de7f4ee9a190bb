#ifndef GWFOUNTAIN_DETAIL_GOLDEN_HPP
#define GWFOUNTAIN_DETAIL_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace gwfountain::detail {

// Derivative-free golden-section minimization on [a, b] for a unimodal
// objective. Returns (argmin, min value).
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b,
                                     double tol = 1e-10, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b,
                                     double tol = 1e-10, int max_iter = 200) {
    auto neg = [&](double x) { return -f(x); };
    auto [x, v] = golden_min(neg, a, b, tol, max_iter);
    return {x, -v};
}

}  // namespace gwfountain::detail

#endif
