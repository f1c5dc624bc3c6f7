#pragma once
#include <cmath>
#include <limits>
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

// Truncated Taylor series about `center`; value = sum c_k (t - center)^k.
// valid_lo/valid_hi bound where evaluation is meaningful; an unbounded series
// (the default) evaluates anywhere.
struct PowerSeries {
    double center = 0.0;
    std::vector<double> coeffs;  // c0..cd, finite
    double valid_lo = -std::numeric_limits<double>::infinity();
    double valid_hi = std::numeric_limits<double>::infinity();

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool bounded() const { return std::isfinite(valid_lo) && std::isfinite(valid_hi); }
};

// Ordered chain of series whose validity intervals tile [0, s_max].
struct PiecewiseAnalytic {
    std::vector<PowerSeries> segments;
    double s_max = 0.0;
    double junction_tol = 1e-9;

    double domain_end() const { return s_max; }
    const PowerSeries& segment_at(double t) const;
};

// deriv_order in {0,1,2,3}; compensated Horner accumulation
double series_eval(const PowerSeries& p, double t, int deriv_order = 0);

// Cauchy-Hadamard estimate: sup of |c_k|^(-1/k) over nonzero coefficients in
// the top third of indices; +inf when that whole range is zero.
double radius_estimate(const PowerSeries& p);

double piecewise_eval(const PiecewiseAnalytic& f, double t, int deriv_order = 0);

// int_0^upper f(t)/t dt for f(0) = 0: termwise on the origin segment, 32-node
// Gauss-Legendre panels (width <= 1) beyond it.
double integrate_weighted(const PiecewiseAnalytic& f, double upper);

// largest junction mismatch in value/first derivative (construction check)
double max_junction_mismatch(const PiecewiseAnalytic& f);

}  // namespace rmt
