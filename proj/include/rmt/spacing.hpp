#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rmt/painleve.hpp"

namespace rmt {

enum class CurveProvenance { SigmaPath, UPath, FiniteNExtrapolation };
const char* provenance_name(CurveProvenance p);

// Tabulated large-N limit and 1/N^2 coefficient of the nearest-neighbour
// spacing density on an s-grid.
struct SpacingCurve {
    double xi = 1.0;
    std::vector<double> grid;
    std::vector<double> leading;
    std::vector<double> correction;
    CurveProvenance provenance = CurveProvenance::SigmaPath;
};

// E(0;s;xi) = exp(int_0^{pi s} sigma0(t)/t dt)
double gap_probability(const TranscendentSolution& sigma0, double s);

// coefficient of 1/N^2 of the finite-N determinant
double gap_correction(const TranscendentSolution& sigma0,
                      const TranscendentSolution& sigma1, double s);

// p(0;s;xi) = (xi pi^2 s^2 / 3) exp(int_0^{2 pi s} u0(t)/t dt)
double spacing_leading_u(const TranscendentSolution& u0, ThinningParam xi, double s);

// coefficient of 1/N^2 of (2 pi / N) p^N(0; 2 pi s / N; xi)
double spacing_correction_u(const TranscendentSolution& u0,
                            const TranscendentSolution& u1, ThinningParam xi,
                            double s);

struct SpacingPoint {
    double leading = 0.0;
    double correction = 0.0;
};

// both terms from the sigma path: analytic second derivatives of the
// tau-function representation; small s handled by the origin expansions
SpacingPoint spacing_from_gap(const TranscendentSolution& sigma0,
                              const TranscendentSolution& sigma1,
                              ThinningParam xi, double s);

enum class SmallSForm { A1, Sd2, P12, P13, CUE_8 };

struct RefValue {
    double value = 0.0;
    bool outside_validity = false;  // s beyond the truncation's trust range
};

RefValue reference_small_s(SmallSForm form, ThinningParam xi,
                           std::optional<int> N, double s);

enum class LargeSKind { SS, SSsig1, SSa, SSb, U0Large, U1Large, U0Large1, U1Large1, SDa, SDb };

struct AsymptoticForm {
    LargeSKind kind;
    double xi;
    double k = 0.0;          // -(1/pi) log(1-xi), xi < 1 only
    bool shape_only = false; // SDa/SDb carry the undetermined factor A(xi) := 1
};

AsymptoticForm make_asymptotic(LargeSKind kind, ThinningParam xi);
double reference_large_s(const AsymptoticForm& form, double s);

SpacingCurve build_curve_sigma(const TranscendentSolution& sigma0,
                               const TranscendentSolution& sigma1,
                               ThinningParam xi, const std::vector<double>& grid);
SpacingCurve build_curve_u(const TranscendentSolution& u0,
                           const TranscendentSolution& u1, ThinningParam xi,
                           const std::vector<double>& grid);

void write_curve_csv(const SpacingCurve& curve, std::ostream& os);

}  // namespace rmt
