#pragma once
#include <memory>
#include <optional>
#include <string>

#include "rmt/series.hpp"

namespace rmt {

struct ThinningParam {
    double xi = 1.0;
    explicit ThinningParam(double x) : xi(x) {
        if (!(x > 0.0) || !(x <= 1.0))
            throw ArgumentError("thinning parameter must satisfy 0 < xi <= 1");
    }
};

enum class TranscendentKind { Sigma0, Sigma1, U0, U1 };

const char* kind_name(TranscendentKind k);
std::optional<TranscendentKind> kind_from_name(const std::string& name);

struct SolveOptions {
    double s_max = 20.0;
    int degree = 35;             // Taylor degree per continuation segment
    double step_factor = 0.25;   // fraction of the radius estimate per step
    double min_second_deriv = 1e-10;
    int boundary_degree = 30;    // origin series degree
};

namespace detail {
struct SolutionLD;  // extended-precision segment store, used when chaining
}

struct TranscendentSolution {
    TranscendentKind kind = TranscendentKind::Sigma0;
    double xi = 1.0;
    PiecewiseAnalytic fn;
    double residual_sup = 0.0;   // scaled ODE defect, sup over the check grid
    std::shared_ptr<const detail::SolutionLD> extended;  // may be null
};

// Origin Taylor series of the named transcendent (degree <= 40). The s^5
// coefficient of U0/U1 is the free, xi-dependent boundary datum.
PowerSeries boundary_series(TranscendentKind kind, ThinningParam xi, int degree);

TranscendentSolution solve_sigma0(ThinningParam xi, const SolveOptions& opts = {});
TranscendentSolution solve_u0(ThinningParam xi, const SolveOptions& opts = {});

// kind must be Sigma1 (base Sigma0) or U1 (base U0); base must cover [0, s_max]
TranscendentSolution solve_linear_correction(TranscendentKind kind,
                                             const TranscendentSolution& base,
                                             ThinningParam xi,
                                             const SolveOptions& opts = {});

// Raw ODE defect of fn at t; base required for Sigma1/U1.
double ode_residual(TranscendentKind kind, const PiecewiseAnalytic& fn,
                    const PiecewiseAnalytic* base, double t);

std::string to_json(const TranscendentSolution& sol);
TranscendentSolution solution_from_json(const std::string& text);

}  // namespace rmt
