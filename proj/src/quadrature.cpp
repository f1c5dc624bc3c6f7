#include "rmt/quadrature.hpp"

#include <cmath>

namespace rmt {
namespace detail {

// Newton iteration on P_m with the Chebyshev-angle initial guess.
void gauss_legendre_reference(int m, std::vector<long double>& x,
                              std::vector<long double>& w) {
    x.assign(m, 0.0L);
    w.assign(m, 0.0L);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < (m + 1) / 2; ++i) {
        long double t = std::cos(pi * (i + 0.75L) / (m + 0.5L));
        long double pp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = t;
            for (int k = 2; k <= m; ++k) {
                long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = m * (t * p1 - p0) / (t * t - 1.0L);
            long double dt = p1 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-19L * (1.0L + std::abs(t))) break;
        }
        x[i] = -t;
        x[m - 1 - i] = t;
        long double wi = 2.0L / ((1.0L - t * t) * pp * pp);
        w[i] = wi;
        w[m - 1 - i] = wi;
    }
}

}  // namespace detail

QuadratureRule gauss_legendre_rule(double a, double b, int m) {
    if (m < 1) throw ArgumentError("quadrature order must be positive");
    if (!(b > a)) throw ArgumentError("quadrature interval must have b > a");
    std::vector<long double> x, w;
    detail::gauss_legendre_reference(m, x, w);
    QuadratureRule rule;
    rule.order = m;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    const long double mid = (static_cast<long double>(a) + b) / 2.0L;
    const long double half = (static_cast<long double>(b) - a) / 2.0L;
    for (int i = 0; i < m; ++i) {
        rule.nodes[i] = static_cast<double>(mid + half * x[i]);
        rule.weights[i] = static_cast<double>(half * w[i]);
    }
    return rule;
}

}  // namespace rmt
