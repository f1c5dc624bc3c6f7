#pragma once
#include <span>
#include <utility>
#include <vector>

#include "rmt/painleve.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

// Correlation kernel choice: the bulk sine kernel or the finite-N CUE kernel
// sin(pi d) / (N sin(pi d / N)), both with diagonal value 1.
struct KernelSpec {
    enum class Family { SineLimit, FiniteN };
    Family family = Family::SineLimit;
    int N = 0;  // required for FiniteN, >= 2
    ThinningParam xi{1.0};

    static KernelSpec sine(ThinningParam xi_) { return {Family::SineLimit, 0, xi_}; }
    static KernelSpec finite(int N_, ThinningParam xi_);
};

struct DetResult {
    double value = 1.0;
    int order_used = 0;
    double est_error = 0.0;  // |value(m) - value(m/2)|
};

// det(I - xi W^{1/2} K W^{1/2}) on (0, s) with an m-point Gauss-Legendre rule
DetResult nystrom_det(const KernelSpec& kernel, double s, int m);
DetResult finite_n_det(int N, ThinningParam xi, double s, int m);

// Tr((I - xi K_s)^{-1} L_s), L_s kernel (pi (x-y)/6) sin(pi (x-y))
double resolvent_trace_correction(ThinningParam xi, double s, int m);

// E(m_count; s) = ((-1)^m / m!) d^m/dxi^m det(I - xi K_s) at xi = 1,
// central differences of width h_xi with one Richardson refinement
double conditioned_gap(int m_count, double s, int m, double h_xi = 1e-3);

// (1/xi) d^2/ds^2 finite_n_det via a Richardson-refined 5-point stencil
double finite_n_spacing(int N, ThinningParam xi, double s, int m = 64);

struct ExtrapolationFit {
    double limit = 0.0;  // N -> infinity value
    double c2 = 0.0;     // coefficient of 1/N^2
};

// least-squares fit value(N) = a + b/N^2 + c/N^4; returns (a, b)
ExtrapolationFit extrapolate_in_N(std::span<const std::pair<int, double>> samples);

}  // namespace rmt
