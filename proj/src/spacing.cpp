#include "rmt/spacing.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace rmt {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_kind(const TranscendentSolution& s, TranscendentKind k) {
    if (s.kind != k)
        throw ArgumentError(std::string("expected transcendent ") + kind_name(k) +
                            ", got " + kind_name(s.kind));
}

void require_same_xi(const TranscendentSolution& a, const TranscendentSolution& b) {
    if (a.xi != b.xi) throw ArgumentError("thinning parameter mismatch");
}

double pow2(double x) { return x * x; }

// printed small-s truncations, used as golden references
double small_s_value(SmallSForm form, double xi, std::optional<int> N, double s) {
    const double p2 = kPi * kPi, p4 = p2 * p2, p6 = p4 * p2;
    switch (form) {
        case SmallSForm::A1:
            return 1 - xi * s + xi * xi * p2 * std::pow(s, 4) / 36 -
                   xi * xi * p4 * std::pow(s, 6) / 675 +
                   xi * xi * p6 * std::pow(s, 8) / 17640 -
                   xi * xi * xi * p6 * std::pow(s, 9) / 291600;
        case SmallSForm::Sd2:
            return -xi * xi * p2 * std::pow(s, 4) / 36 +
                   xi * xi * p4 * std::pow(s, 6) / 270 -
                   xi * xi * p6 * std::pow(s, 8) / 3780 +
                   xi * xi * xi * p6 * std::pow(s, 9) / 48600;
        case SmallSForm::P12:
            return xi * p2 * s * s / 3 - 2 * xi * p4 * std::pow(s, 4) / 45 +
                   xi * p6 * std::pow(s, 6) / 315 -
                   xi * xi * p6 * std::pow(s, 7) / 4050;
        case SmallSForm::P13:
            return -xi * p2 * s * s / 3 + xi * p4 * std::pow(s, 4) / 9 -
                   2 * xi * p6 * std::pow(s, 6) / 135 +
                   xi * xi * p6 * std::pow(s, 7) / 675;
        case SmallSForm::CUE_8: {
            if (!N) throw ArgumentError("CUE_8 reference requires N");
            const double n2 = 1.0 / (static_cast<double>(*N) * *N);
            return 1 - xi * s + (1 - n2) * xi * xi * p2 * std::pow(s, 4) / 36 -
                   (1 - n2) * (2 - 3 * n2) / 1350 * xi * xi * p4 * std::pow(s, 6) +
                   (1 - n2) * (1 - 2 * n2) * (3 - 5 * n2) / 52920 * xi * xi * p6 *
                       std::pow(s, 8);
        }
    }
    throw ArgumentError("unknown small-s form");
}

}  // namespace

const char* provenance_name(CurveProvenance p) {
    switch (p) {
        case CurveProvenance::SigmaPath: return "sigma";
        case CurveProvenance::UPath: return "u";
        case CurveProvenance::FiniteNExtrapolation: return "finite-N";
    }
    return "?";
}

double gap_probability(const TranscendentSolution& sigma0, double s) {
    require_kind(sigma0, TranscendentKind::Sigma0);
    if (s == 0.0) return 1.0;
    return std::exp(integrate_weighted(sigma0.fn, kPi * s));
}

double gap_correction(const TranscendentSolution& sigma0,
                      const TranscendentSolution& sigma1, double s) {
    require_kind(sigma0, TranscendentKind::Sigma0);
    require_kind(sigma1, TranscendentKind::Sigma1);
    require_same_xi(sigma0, sigma1);
    if (s == 0.0) return 0.0;
    const double i0 = integrate_weighted(sigma0.fn, kPi * s);
    const double i1 = integrate_weighted(sigma1.fn, kPi * s);
    return i1 * std::exp(i0);
}

double spacing_leading_u(const TranscendentSolution& u0, ThinningParam xi, double s) {
    require_kind(u0, TranscendentKind::U0);
    if (s == 0.0) return 0.0;
    const double j0 = integrate_weighted(u0.fn, 2 * kPi * s);
    return xi.xi * kPi * kPi * s * s / 3 * std::exp(j0);
}

double spacing_correction_u(const TranscendentSolution& u0,
                            const TranscendentSolution& u1, ThinningParam xi,
                            double s) {
    require_kind(u0, TranscendentKind::U0);
    require_kind(u1, TranscendentKind::U1);
    require_same_xi(u0, u1);
    if (s == 0.0) return 0.0;
    const double lead = spacing_leading_u(u0, xi, s);
    const double j1 = integrate_weighted(u1.fn, 2 * kPi * s);
    return lead * (-1.0 - kPi * kPi * s * s / 3 + j1);
}

SpacingPoint spacing_from_gap(const TranscendentSolution& sigma0,
                              const TranscendentSolution& sigma1,
                              ThinningParam xi, double s) {
    require_kind(sigma0, TranscendentKind::Sigma0);
    require_kind(sigma1, TranscendentKind::Sigma1);
    require_same_xi(sigma0, sigma1);
    // below the switchover the I0'' formula cancels catastrophically; the
    // origin expansions are exact to ~s^9 there
    if (s < 1e-2) {
        return {small_s_value(SmallSForm::P12, xi.xi, std::nullopt, s),
                small_s_value(SmallSForm::P13, xi.xi, std::nullopt, s)};
    }
    const double X = kPi * s;
    const double i0 = integrate_weighted(sigma0.fn, X);
    const double i1 = integrate_weighted(sigma1.fn, X);
    const double s0 = piecewise_eval(sigma0.fn, X, 0);
    const double s0p = piecewise_eval(sigma0.fn, X, 1);
    const double s1 = piecewise_eval(sigma1.fn, X, 0);
    const double s1p = piecewise_eval(sigma1.fn, X, 1);
    const double I0p = s0 / s;
    const double I0pp = (kPi * s0p - s0 / s) / s;
    const double I1p = s1 / s;
    const double I1pp = (kPi * s1p - s1 / s) / s;
    const double E = std::exp(i0);
    SpacingPoint out;
    out.leading = (I0pp + I0p * I0p) * E / xi.xi;
    out.correction = ((I0pp + I0p * I0p) * i1 + 2 * I0p * I1p + I1pp) * E / xi.xi;
    return out;
}

RefValue reference_small_s(SmallSForm form, ThinningParam xi, std::optional<int> N,
                           double s) {
    RefValue out;
    out.outside_validity = (s > 0.5);
    out.value = small_s_value(form, xi.xi, N, s);
    return out;
}

AsymptoticForm make_asymptotic(LargeSKind kind, ThinningParam xi) {
    AsymptoticForm f;
    f.kind = kind;
    f.xi = xi.xi;
    const bool xi_one_only = kind == LargeSKind::SSa || kind == LargeSKind::SSb ||
                             kind == LargeSKind::U0Large1 ||
                             kind == LargeSKind::U1Large1;
    if (xi_one_only && xi.xi != 1.0)
        throw ArgumentError("asymptotic form is defined for xi = 1 only");
    const bool needs_k = kind == LargeSKind::SS || kind == LargeSKind::SSsig1 ||
                         kind == LargeSKind::U0Large || kind == LargeSKind::U1Large;
    if (needs_k) {
        if (xi.xi == 1.0)
            throw ArgumentError("asymptotic form requires xi < 1 (k diverges)");
        f.k = -std::log(1.0 - xi.xi) / kPi;
    } else if (xi.xi < 1.0 && (kind == LargeSKind::SDa || kind == LargeSKind::SDb)) {
        f.k = -std::log(1.0 - xi.xi) / kPi;
    }
    f.shape_only = (kind == LargeSKind::SDa || kind == LargeSKind::SDb);
    return f;
}

double reference_large_s(const AsymptoticForm& form, double s) {
    if (!(s >= 5.0)) throw DomainError("large-s reference valid for s >= 5");
    const double k = form.k;
    switch (form.kind) {
        case LargeSKind::SS: return -k * s + k * k / 2;
        case LargeSKind::SSsig1: return -k * k * s * s / 6;
        case LargeSKind::SSa: return -s * s / 4 - 0.25;
        case LargeSKind::SSb: return -std::pow(s, 4) / 48 + s * s / 48;
        case LargeSKind::U0Large: return -k * s / 2 + k * k / 2 - 2;
        case LargeSKind::U1Large: return s * s / 6;
        case LargeSKind::U0Large1: return -s * s / 16 - 0.25;
        // s^2 coefficient 49/192 by balancing the particular solution of the
        // correction ODE against u0 ~ -s^2/16 - 1/4 (printed form drops the
        // s^4 feed-in term)
        case LargeSKind::U1Large1: return -std::pow(s, 4) / 768 + 49 * s * s / 192;
        case LargeSKind::SDa: {
            if (form.xi == 1.0)
                return std::pow(kPi, 3.75) / 16 * std::pow(s, 1.75) *
                       std::exp(-pow2(kPi * s) / 8);
            return 1.0 / form.xi * pow2(k * kPi) * std::pow(s, k * k / 2) *
                   std::exp(-k * kPi * s);
        }
        case LargeSKind::SDb: {
            if (form.xi == 1.0)
                return -std::pow(kPi, 7.75) / 3072 * std::pow(s, 5.75) *
                       std::exp(-pow2(kPi * s) / 8);
            return -1.0 / form.xi * pow2(pow2(k * kPi)) / 12 *
                   std::pow(s, k * k / 2 + 2) * std::exp(-k * kPi * s);
        }
    }
    throw ArgumentError("unknown large-s form");
}

SpacingCurve build_curve_sigma(const TranscendentSolution& sigma0,
                               const TranscendentSolution& sigma1,
                               ThinningParam xi, const std::vector<double>& grid) {
    SpacingCurve c;
    c.xi = xi.xi;
    c.grid = grid;
    c.provenance = CurveProvenance::SigmaPath;
    for (double s : grid) {
        SpacingPoint p = spacing_from_gap(sigma0, sigma1, xi, s);
        c.leading.push_back(p.leading);
        c.correction.push_back(p.correction);
    }
    return c;
}

SpacingCurve build_curve_u(const TranscendentSolution& u0,
                           const TranscendentSolution& u1, ThinningParam xi,
                           const std::vector<double>& grid) {
    SpacingCurve c;
    c.xi = xi.xi;
    c.grid = grid;
    c.provenance = CurveProvenance::UPath;
    for (double s : grid) {
        if (s < 1e-2) {
            c.leading.push_back(small_s_value(SmallSForm::P12, xi.xi, std::nullopt, s));
            c.correction.push_back(small_s_value(SmallSForm::P13, xi.xi, std::nullopt, s));
        } else {
            c.leading.push_back(spacing_leading_u(u0, xi, s));
            c.correction.push_back(spacing_correction_u(u0, u1, xi, s));
        }
    }
    return c;
}

void write_curve_csv(const SpacingCurve& curve, std::ostream& os) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "# xi %.17g\n", curve.xi);
    os << buf;
    os << "# provenance " << provenance_name(curve.provenance) << "\n";
    os << "s,leading,correction,provenance\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", curve.grid[i],
                      curve.leading[i], curve.correction[i],
                      provenance_name(curve.provenance));
        os << buf;
    }
}

}  // namespace rmt
