#include "rmt/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmt/quadrature.hpp"

namespace rmt {
namespace {

// Error-free transformations for the compensated Horner scheme.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double z = s - a;
    e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

double horner_compensated(const double* c, int n, double h) {
    if (n == 0) return 0.0;
    double s = c[n - 1];
    double err = 0.0;
    for (int k = n - 2; k >= 0; --k) {
        double p, ep, es;
        two_prod(s, h, p, ep);
        two_sum(p, c[k], s, es);
        err = err * h + (ep + es);
    }
    return s + err;
}

}  // namespace

const PowerSeries& PiecewiseAnalytic::segment_at(double t) const {
    if (segments.empty() || t < segments.front().valid_lo || t > s_max)
        throw DomainError("t = " + std::to_string(t) + " outside domain [0, " +
                          std::to_string(s_max) + "]");
    // binary search on validity starts
    std::size_t lo = 0, hi = segments.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (segments[mid].valid_lo <= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    return segments[lo];
}

double series_eval(const PowerSeries& p, double t, int deriv_order) {
    if (deriv_order < 0 || deriv_order > 3)
        throw ArgumentError("deriv_order must be in {0,1,2,3}");
    if (p.bounded() && (t < p.valid_lo || t > p.valid_hi))
        throw DomainError("t = " + std::to_string(t) + " outside validity [" +
                          std::to_string(p.valid_lo) + ", " +
                          std::to_string(p.valid_hi) + "]");
    const int n = static_cast<int>(p.coeffs.size());
    if (deriv_order >= n) return 0.0;
    const double h = t - p.center;
    if (deriv_order == 0) return horner_compensated(p.coeffs.data(), n, h);
    // differentiate coefficients, then the same compensated Horner
    std::vector<double> d(p.coeffs.begin() + deriv_order, p.coeffs.end());
    for (std::size_t i = 0; i < d.size(); ++i) {
        double f = 1.0;
        for (int r = 0; r < deriv_order; ++r) f *= static_cast<double>(i + deriv_order - r);
        d[i] *= f;
    }
    return horner_compensated(d.data(), static_cast<int>(d.size()), h);
}

double radius_estimate(const PowerSeries& p) {
    const int d = p.degree();
    if (d < 8)
        throw InsufficientDataError("radius_estimate needs degree >= 8, got " +
                                    std::to_string(d));
    const int lo = d - d / 3;
    double best = 0.0;
    bool found = false;
    for (int k = lo; k <= d; ++k) {
        const double ck = std::abs(p.coeffs[static_cast<std::size_t>(k)]);
        if (ck == 0.0) continue;
        found = true;
        best = std::max(best, std::pow(ck, -1.0 / k));
    }
    return found ? best : std::numeric_limits<double>::infinity();
}

double piecewise_eval(const PiecewiseAnalytic& f, double t, int deriv_order) {
    return series_eval(f.segment_at(t), t, deriv_order);
}

double integrate_weighted(const PiecewiseAnalytic& f, double upper) {
    if (f.segments.empty()) throw ArgumentError("empty piecewise function");
    if (upper < 0.0 || upper > f.s_max + 1e-12)
        throw DomainError("upper = " + std::to_string(upper) + " outside domain");
    upper = std::min(upper, f.s_max);
    const PowerSeries& origin = f.segments.front();
    if (origin.center != 0.0)
        throw PreconditionError("first segment must be centered at 0");
    if (std::abs(origin.coeffs.empty() ? 0.0 : origin.coeffs[0]) > 1e-12)
        throw PreconditionError("integrate_weighted requires f(0) = 0");
    if (upper == 0.0) return 0.0;

    const double first = std::min(origin.valid_hi, upper);
    // termwise exact: sum c_k t^k / k, accumulated small-to-large
    double acc = 0.0, comp = 0.0;
    auto kadd = [&](double x) {
        double y = x - comp;
        double t2 = acc + y;
        comp = (t2 - acc) - y;
        acc = t2;
    };
    for (std::size_t k = origin.coeffs.size(); k-- > 1;)
        kadd(origin.coeffs[k] * std::pow(first, static_cast<double>(k)) / static_cast<double>(k));

    // Gauss-Legendre panels over the remaining smooth part
    double t = first;
    while (t < upper - 1e-15) {
        double t2 = std::min(t + 1.0, upper);
        QuadratureRule q = gauss_legendre_rule(t, t2, 32);
        for (int i = 0; i < q.order; ++i)
            kadd(q.weights[static_cast<std::size_t>(i)] *
                 piecewise_eval(f, q.nodes[static_cast<std::size_t>(i)]) /
                 q.nodes[static_cast<std::size_t>(i)]);
        t = t2;
    }
    return acc;
}

double max_junction_mismatch(const PiecewiseAnalytic& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < f.segments.size(); ++i) {
        const PowerSeries& a = f.segments[i];
        const PowerSeries& b = f.segments[i + 1];
        const double t = a.valid_hi;
        for (int od = 0; od <= 1; ++od)
            worst = std::max(worst, std::abs(series_eval(a, t, od) - series_eval(b, t, od)));
    }
    return worst;
}

}  // namespace rmt
