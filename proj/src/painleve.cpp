#include "rmt/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "rmt/seriestk.hpp"

namespace rmt {

const char* kind_name(TranscendentKind k) {
    switch (k) {
        case TranscendentKind::Sigma0: return "sigma0";
        case TranscendentKind::Sigma1: return "sigma1";
        case TranscendentKind::U0: return "u0";
        case TranscendentKind::U1: return "u1";
    }
    return "?";
}

std::optional<TranscendentKind> kind_from_name(const std::string& name) {
    if (name == "sigma0") return TranscendentKind::Sigma0;
    if (name == "sigma1") return TranscendentKind::Sigma1;
    if (name == "u0") return TranscendentKind::U0;
    if (name == "u1") return TranscendentKind::U1;
    return std::nullopt;
}

namespace detail {

using LD = long double;
using SerLD = stk::Ser<LD>;

struct SegLD {
    LD center;
    SerLD c;
    LD lo, hi;
};

struct SolutionLD {
    std::vector<SegLD> segs;
    LD s_max = 0;

    const SegLD& at(LD t) const {
        for (const auto& s : segs)
            if (t >= s.lo && t <= s.hi) return s;
        throw DomainError("t outside solved domain");
    }
    LD eval(LD t, int order) const {
        const SegLD& s = at(t);
        return stk::horner_deriv(s.c, t - s.center, order);
    }
};

}  // namespace detail

namespace {

using detail::LD;
using detail::SegLD;
using detail::SerLD;
using detail::SolutionLD;
using stk::add_in;
using stk::deriv;
using stk::mul;
using stk::scaled;
using stk::var;

constexpr LD kPiL = 3.14159265358979323846264338327950288L;

// first derivative of the sigma-PV sigma form, with sigma'' factored out;
// leading Taylor coefficient is 2 t0^2 n(n-1)(n-2), never degenerate
SerLD res_G_sigma(const SerLD& f, LD t0) {
    const std::size_t L = f.size();
    SerLD S = var(t0, L);
    SerLD fp = deriv(f), fpp = deriv(fp), fppp = deriv(fpp);
    SerLD w = mul(S, fp);
    add_in(w, f, LD(-1));
    SerLD out = scaled(mul(mul(S, S), fppp), LD(2));
    add_in(out, mul(S, fpp), LD(2));
    add_in(out, mul(S, w), LD(8));
    add_in(out, mul(S, mul(fp, fp)), LD(4));
    add_in(out, mul(w, fp), LD(8));
    return out;
}

// same construction for the modified equation
SerLD res_G_u(const SerLD& f, LD t0) {
    const std::size_t L = f.size();
    SerLD S = var(t0, L);
    SerLD fp = deriv(f), fpp = deriv(fp), fppp = deriv(fpp);
    SerLD w = mul(S, fp);
    add_in(w, f, LD(-1));
    SerLD inner = scaled(w, LD(2));
    inner[0] += LD(-4);
    add_in(inner, mul(fp, fp), LD(4));
    SerLD out = scaled(mul(mul(S, S), fppp), LD(2));
    add_in(out, mul(S, fpp), LD(2));
    add_in(out, mul(S, inner));
    add_in(out, mul(w, fp), LD(8));
    add_in(out, fp, LD(-32));
    return out;
}

struct LinCoeffs {
    SerLD A, B, C, D;
};

LinCoeffs sigma1_coeffs(const SerLD& sig, LD t0) {
    const std::size_t L = sig.size();
    SerLD S = var(t0, L);
    SerLD S2 = mul(S, S);
    SerLD sp = deriv(sig), spp = deriv(sp);
    SerLD w = mul(S, sp);
    add_in(w, sig, LD(-1));
    LinCoeffs r;
    r.A = scaled(mul(S2, spp), LD(2));
    r.B = scaled(mul(sp, sig), LD(-8));
    add_in(r.B, mul(S, mul(sp, sp)), LD(12));
    add_in(r.B, mul(S, w), LD(8));
    r.C = scaled(mul(sp, sp), LD(-4));
    add_in(r.C, w, LD(-8));
    SerLD s2spp = mul(S2, spp);
    SerLD t1 = sig;
    add_in(t1, mul(S, sp), LD(-1));
    add_in(t1, s2spp, LD(-0.5L));
    r.D = scaled(mul(s2spp, t1), LD(-4) / 3);
    SerLD br = scaled(mul(sig, sig), LD(3));
    SerLD smsp = S;
    add_in(smsp, sp, LD(-1));
    add_in(br, mul(S, mul(sig, smsp)), LD(2));
    SerLD spsp = S;
    add_in(spsp, sp);
    add_in(br, mul(S2, mul(sp, spsp)), LD(-2));
    add_in(r.D, mul(w, br), LD(-4) / 3);
    return r;
}

LinCoeffs u1_coeffs(const SerLD& u, LD t0) {
    const std::size_t L = u.size();
    SerLD S = var(t0, L);
    SerLD S2 = mul(S, S);
    SerLD S3 = mul(S2, S);
    SerLD S4 = mul(S2, S2);
    SerLD up = deriv(u), upp = deriv(up);
    SerLD up2 = mul(up, up);
    LinCoeffs r;
    r.A = scaled(mul(S2, upp), LD(8));
    SerLD b = scaled(mul(S, up2), LD(6));
    add_in(b, mul(S2, up));
    add_in(b, S, LD(-2));
    add_in(b, mul(S, u), LD(-1));
    add_in(b, up, LD(-16));
    add_in(b, mul(u, up), LD(-4));
    r.B = scaled(b, LD(8));
    SerLD c = u;
    c[0] += LD(2);
    add_in(c, mul(S, up), LD(-1));
    add_in(c, up2, LD(-2));
    r.C = scaled(c, LD(8));
    SerLD s2upp = mul(S2, upp);
    SerLD t1 = s2upp;
    add_in(t1, mul(S, up), LD(2));
    add_in(t1, u, LD(-2));
    SerLD d = mul(s2upp, t1);
    add_in(d, mul(S4, up2));
    add_in(d, mul(S3, mul(up, up2)), LD(4));
    add_in(d, mul(S3, mul(u, up)), LD(-2));
    add_in(d, mul(S3, up), LD(-2));
    add_in(d, mul(S2, up2), LD(16));
    add_in(d, mul(S2, mul(u, u)));
    add_in(d, mul(S2, u), LD(2));
    add_in(d, mul(S, mul(mul(u, u), up)), LD(-10));
    add_in(d, mul(S, mul(u, up)), LD(-64));
    add_in(d, mul(S, up), LD(-96));
    add_in(d, mul(u, mul(u, u)), LD(6));
    add_in(d, mul(u, u), LD(48));
    add_in(d, u, LD(96));
    r.D = scaled(d, LD(2) / 3);
    return r;
}

using ResidualFn = std::function<SerLD(const SerLD&, LD)>;

// Extend seeds order by order: the residual coefficient at n + res_off is
// linear in the n-th coefficient; solve it from two evaluations.
SerLD solve_orders(const ResidualFn& res, LD t0, const std::vector<LD>& seeds,
                   int n_start, int deg, const std::map<int, LD>& fixed,
                   int res_off) {
    SerLD a(static_cast<std::size_t>(deg) + 1, LD(0));
    for (std::size_t i = 0; i < seeds.size(); ++i) a[i] = seeds[i];
    for (int n = n_start; n <= deg; ++n) {
        const int m = n + res_off;
        if (auto it = fixed.find(n); it != fixed.end()) {
            // resonant order: the equation must hold without this coefficient
            SerLD r = res(a, t0);
            LD scale = LD(1);
            for (const auto& x : r) scale = std::max(scale, std::abs(x));
            if (std::abs(r[static_cast<std::size_t>(m)]) > 1e-9L * scale)
                throw DegeneracyError("resonant order is inconsistent", n);
            a[static_cast<std::size_t>(n)] = it->second;
            continue;
        }
        const LD r0 = res(a, t0)[static_cast<std::size_t>(m)];
        SerLD trial = a;
        trial[static_cast<std::size_t>(n)] = LD(1);
        const LD r1 = res(trial, t0)[static_cast<std::size_t>(m)];
        const LD beta = r1 - r0;
        if (beta == LD(0))
            throw DegeneracyError("non-invertible leading coefficient", n);
        const LD cn = -r0 / beta;
        if (std::abs(cn) > 1e15L)
            throw DegeneracyError("coefficient blow-up", n);
        a[static_cast<std::size_t>(n)] = cn;
    }
    return a;
}

double radius_estimate_ld(const SerLD& c) {
    const int d = static_cast<int>(c.size()) - 1;
    const int lo = d - d / 3;
    LD best = 0;
    bool found = false;
    for (int k = lo; k <= d; ++k) {
        const LD ck = std::abs(c[static_cast<std::size_t>(k)]);
        if (ck == LD(0)) continue;
        found = true;
        best = std::max(best, std::pow(ck, LD(-1) / k));
    }
    if (!found) return std::numeric_limits<double>::infinity();
    return static_cast<double>(best);
}

LD clamp_ld(LD x, LD lo, LD hi) { return std::min(std::max(x, lo), hi); }

SerLD boundary_series_ld(TranscendentKind kind, double xi, int degree) {
    const LD x = xi;
    switch (kind) {
        case TranscendentKind::Sigma0:
            return solve_orders(res_G_sigma, 0, {0, -x / kPiL, -(x * x) / (kPiL * kPiL)},
                                3, degree, {}, -1);
        case TranscendentKind::U0:
            return solve_orders(res_G_u, 0, {0, 0, LD(-1) / 15}, 3, degree,
                                {{5, -x / (8640 * kPiL)}}, -1);
        case TranscendentKind::Sigma1: {
            SerLD base = boundary_series_ld(TranscendentKind::Sigma0, xi, degree);
            LinCoeffs lc = sigma1_coeffs(base, 0);
            ResidualFn rf = [lc](const SerLD& y, LD) {
                SerLD r = mul(lc.A, deriv(deriv(y)));
                add_in(r, mul(lc.B, deriv(y)));
                add_in(r, mul(lc.C, y));
                add_in(r, lc.D, LD(-1));
                return r;
            };
            return solve_orders(rf, 0, {0, 0}, 2, degree, {}, 0);
        }
        case TranscendentKind::U1: {
            SerLD base = boundary_series_ld(TranscendentKind::U0, xi, degree);
            LinCoeffs lc = u1_coeffs(base, 0);
            ResidualFn rf = [lc](const SerLD& y, LD) {
                SerLD r = mul(lc.A, deriv(deriv(y)));
                add_in(r, mul(lc.B, deriv(y)));
                add_in(r, mul(lc.C, y));
                add_in(r, lc.D, LD(-1));
                return r;
            };
            return solve_orders(rf, 0, {0, 0}, 2, degree,
                                {{5, x / (1728 * kPiL)}}, 0);
        }
    }
    throw ArgumentError("unknown transcendent kind");
}

SolutionLD continue_nonlinear(const ResidualFn& res_g, const SerLD& origin,
                              const SolveOptions& opts) {
    SolutionLD out;
    out.s_max = opts.s_max;
    const LD sf = opts.step_factor;
    {
        const double r0 = radius_estimate_ld(origin);
        LD v0 = std::min(clamp_ld(sf * static_cast<LD>(r0), 0.05L, 1.0L),
                         std::min(static_cast<LD>(0.5 * r0), out.s_max));
        out.segs.push_back({0, origin, 0, v0});
    }
    while (out.segs.back().hi < out.s_max) {
        if (out.segs.size() > 600)
            throw ContinuationError("segment budget exhausted",
                                    static_cast<double>(out.segs.back().hi));
        SegLD& prev = out.segs.back();
        LD t0 = prev.hi;
        int halvings = 0;
        for (;;) {
            const LD h = t0 - prev.center;
            std::vector<LD> seeds = {stk::horner(prev.c, h),
                                     stk::horner_deriv(prev.c, h, 1),
                                     stk::horner_deriv(prev.c, h, 2) / 2};
            bool ok = std::abs(2 * seeds[2]) >= static_cast<LD>(opts.min_second_deriv);
            SerLD c;
            if (ok) {
                try {
                    c = solve_orders(res_g, t0, seeds, 3, opts.degree, {}, -3);
                } catch (const DegeneracyError&) {
                    ok = false;
                }
            }
            if (ok) {
                // probe continuity against the previous segment mid-step
                const LD mid = prev.center + h / 2;
                for (int od = 0; od < 3 && ok; ++od) {
                    const LD a = stk::horner_deriv(c, mid - t0, od);
                    const LD b = stk::horner_deriv(prev.c, mid - prev.center, od);
                    if (std::abs(a - b) > 1e-8L * std::max(LD(1), std::abs(b))) ok = false;
                }
            }
            if (ok) {
                // branch check: seeded curvature must carry over
                if (seeds[2] != LD(0) &&
                    std::signbit(stk::horner_deriv(c, LD(0), 2)) != std::signbit(2 * seeds[2]))
                    throw ContinuationError("second-derivative branch flip",
                                            static_cast<double>(t0));
                prev.hi = t0;
                const double r = radius_estimate_ld(c);
                LD w = clamp_ld(sf * static_cast<LD>(r), 0.05L, 1.0L);
                LD hi = std::min(t0 + w, out.s_max);
                out.segs.push_back({t0, c, t0, hi});
                break;
            }
            ++halvings;
            t0 = prev.center + (t0 - prev.center) / 2;
            if (halvings > 6 || t0 - prev.center < 1e-6L)
                throw ContinuationError("step underflow during continuation",
                                        static_cast<double>(t0));
        }
    }
    return out;
}

SolutionLD continue_linear(TranscendentKind kind, const SolutionLD& base,
                           const SerLD& origin, const SolveOptions& opts) {
    const bool is_sigma = (kind == TranscendentKind::Sigma1);
    SolutionLD out;
    out.s_max = opts.s_max;
    const LD sf = opts.step_factor;
    {
        const double r0 = radius_estimate_ld(origin);
        LD v0 = std::min({clamp_ld(sf * static_cast<LD>(r0), 0.05L, 1.0L),
                          static_cast<LD>(0.5 * r0), base.segs.front().hi, out.s_max});
        out.segs.push_back({0, origin, 0, v0});
    }
    LD step = out.segs.front().hi;
    while (out.segs.back().hi < out.s_max) {
        if (out.segs.size() > 800)
            throw ContinuationError("segment budget exhausted",
                                    static_cast<double>(out.segs.back().hi));
        SegLD& prev = out.segs.back();
        const LD f = prev.hi;
        // local scale of the leading-coefficient factor (sigma'' of the base)
        const LD lo = std::max(f - 1, LD(0.05L));
        LD scale = static_cast<LD>(opts.min_second_deriv);
        for (int i = 0; i <= 16; ++i)
            scale = std::max(scale, std::abs(base.eval(lo + (f - lo) * i / 16, 2)));
        static const double kMults[] = {1.0, 1.2, 0.8, 1.4, 0.6, 1.6, 0.45, 1.8, 0.3};
        bool built = false;
        for (double mult : kMults) {
            LD t0 = f + (static_cast<LD>(mult) - 1) * step;
            if (t0 <= prev.center + 0.01L) continue;
            if (t0 > out.s_max) t0 = out.s_max;
            if (std::abs(base.eval(t0, 2)) <
                std::max(static_cast<LD>(opts.min_second_deriv), 0.25L * scale))
                continue;
            const SegLD& bs = base.at(t0);
            SerLD bser = stk::recenter(bs.c, t0 - bs.center);
            LinCoeffs lc = is_sigma ? sigma1_coeffs(bser, t0) : u1_coeffs(bser, t0);
            ResidualFn rf = [&lc](const SerLD& y, LD) {
                SerLD r = mul(lc.A, deriv(deriv(y)));
                add_in(r, mul(lc.B, deriv(y)));
                add_in(r, mul(lc.C, y));
                add_in(r, lc.D, LD(-1));
                return r;
            };
            const LD h = t0 - prev.center;
            std::vector<LD> seeds = {stk::horner(prev.c, h),
                                     stk::horner_deriv(prev.c, h, 1)};
            SerLD c;
            try {
                c = solve_orders(rf, t0, seeds, 2, opts.degree, {}, -2);
            } catch (const DegeneracyError&) {
                continue;
            }
            const double r = radius_estimate_ld(c);
            LD w = clamp_ld(sf * static_cast<LD>(r), 0.05L, 1.0L);
            LD hi = std::min(t0 + w, out.s_max);
            if (hi <= f + 0.01L && hi < out.s_max) continue;
            prev.hi = f;
            out.segs.push_back({t0, c, f, hi});
            step = w;
            built = true;
            break;
        }
        if (!built)
            throw ContinuationError("linear correction: leading coefficient "
                                    "degenerate near frontier",
                                    static_cast<double>(f));
    }
    return out;
}

PiecewiseAnalytic to_public(const SolutionLD& ld) {
    PiecewiseAnalytic out;
    out.s_max = static_cast<double>(ld.s_max);
    out.junction_tol = 1e-9;
    for (const auto& s : ld.segs) {
        PowerSeries p;
        p.center = static_cast<double>(s.center);
        p.valid_lo = static_cast<double>(s.lo);
        p.valid_hi = static_cast<double>(s.hi);
        p.coeffs.reserve(s.c.size());
        for (LD v : s.c) p.coeffs.push_back(static_cast<double>(v));
        out.segments.push_back(std::move(p));
    }
    // chain junctions exactly at segment boundaries
    for (std::size_t i = 0; i + 1 < out.segments.size(); ++i)
        out.segments[i].valid_hi = out.segments[i + 1].valid_lo;
    return out;
}

std::shared_ptr<const SolutionLD> base_ld(const TranscendentSolution& sol) {
    if (sol.extended) return sol.extended;
    // rebuild extended view from the binary64 representation
    auto up = std::make_shared<SolutionLD>();
    up->s_max = sol.fn.s_max;
    for (const auto& p : sol.fn.segments) {
        SegLD s;
        s.center = p.center;
        s.lo = p.valid_lo;
        s.hi = p.valid_hi;
        s.c.assign(p.coeffs.begin(), p.coeffs.end());
        up->segs.push_back(std::move(s));
    }
    return up;
}

struct ResidualParts {
    double raw;
    double scale;  // sum of term magnitudes, floored at 1
};

// The scale is the sum of monomial magnitudes of the defect expression: the
// backward-error yardstick for a residual assembled from rounded evaluations.
ResidualParts residual_parts(TranscendentKind kind, const PiecewiseAnalytic& fn,
                             const PiecewiseAnalytic* base, double t) {
    const double f = piecewise_eval(fn, t, 0);
    const double fp = piecewise_eval(fn, t, 1);
    const double fpp = piecewise_eval(fn, t, 2);
    const double af = std::abs(f), afp = std::abs(fp), afpp = std::abs(fpp);
    if (kind == TranscendentKind::Sigma0) {
        const double w = t * fp - f;
        const double wa = t * afp + af;
        const double t1 = (t * fpp) * (t * fpp);
        const double t2 = 4 * w * (w + fp * fp);
        return {t1 + t2, std::max(1.0, t1 + 4 * wa * (wa + fp * fp))};
    }
    if (kind == TranscendentKind::U0) {
        const double w = t * fp - f;
        const double wa = t * afp + af;
        const double t1 = (t * fpp) * (t * fpp);
        const double t2 = w * (w - 4 + 4 * fp * fp);
        const double t3 = -16 * fp * fp;
        return {t1 + t2 + t3,
                std::max(1.0, t1 + wa * (wa + 4 + 4 * fp * fp) + 16 * fp * fp)};
    }
    if (base == nullptr)
        throw ArgumentError("linear-correction residual requires the base transcendent");
    const double g = piecewise_eval(*base, t, 0);
    const double gp = piecewise_eval(*base, t, 1);
    const double gpp = piecewise_eval(*base, t, 2);
    const double ag = std::abs(g), agp = std::abs(gp), agpp = std::abs(gpp);
    double A, B, C, D, Aa, Ba, Ca, Da;
    if (kind == TranscendentKind::Sigma1) {
        A = 2 * t * t * gpp;
        B = -8 * gp * g + 12 * t * gp * gp + 8 * t * (t * gp - g);
        C = -4 * gp * gp - 8 * (t * gp - g);
        D = -4.0 / 3 * t * t * gpp * (g - t * gp - t * t / 2 * gpp)
            - 4.0 / 3 * (t * gp - g)
                  * (3 * g * g + 2 * t * g * (t - gp) - 2 * t * t * gp * (t + gp));
        Aa = 2 * t * t * agpp;
        Ba = 8 * agp * ag + 12 * t * gp * gp + 8 * t * (t * agp + ag);
        Ca = 4 * gp * gp + 8 * (t * agp + ag);
        Da = 4.0 / 3 * t * t * agpp * (ag + t * agp + t * t / 2 * agpp)
             + 4.0 / 3 * (t * agp + ag)
                   * (3 * g * g + 2 * t * ag * (t + agp) + 2 * t * t * agp * (t + agp));
    } else {
        A = 8 * t * t * gpp;
        B = 8 * (6 * t * gp * gp + t * t * gp - 2 * t - t * g - 16 * gp - 4 * g * gp);
        C = 8 * (2 + g - t * gp - 2 * gp * gp);
        D = 2.0 / 3
            * (t * t * gpp * (t * t * gpp + 2 * t * gp - 2 * g) +
               std::pow(t, 4) * gp * gp + 4 * std::pow(t, 3) * gp * gp * gp -
               2 * std::pow(t, 3) * g * gp - 2 * std::pow(t, 3) * gp +
               16 * t * t * gp * gp + t * t * g * g + 2 * t * t * g -
               10 * t * g * g * gp - 64 * t * g * gp - 96 * t * gp + 6 * g * g * g +
               48 * g * g + 96 * g);
        Aa = 8 * t * t * agpp;
        Ba = 8 * (6 * t * gp * gp + t * t * agp + 2 * t + t * ag + 16 * agp +
                  4 * ag * agp);
        Ca = 8 * (2 + ag + t * agp + 2 * gp * gp);
        Da = 2.0 / 3
             * (t * t * agpp * (t * t * agpp + 2 * t * agp + 2 * ag) +
                std::pow(t, 4) * gp * gp + 4 * std::pow(t, 3) * agp * gp * gp +
                2 * std::pow(t, 3) * ag * agp + 2 * std::pow(t, 3) * agp +
                16 * t * t * gp * gp + t * t * g * g + 2 * t * t * ag +
                10 * t * g * g * agp + 64 * t * ag * agp + 96 * t * agp +
                6 * ag * g * g + 48 * g * g + 96 * ag);
    }
    const double raw = A * fpp + B * fp + C * f - D;
    const double scale =
        std::max(1.0, Aa * afpp + Ba * afp + Ca * af + Da);
    return {raw, scale};
}

double validate(TranscendentKind kind, const PiecewiseAnalytic& fn,
                const PiecewiseAnalytic* base) {
    if (max_junction_mismatch(fn) > fn.junction_tol)
        throw ValidationError("junction continuity violated");
    double sup = 0.0;
    const double lo = fn.s_max / 100.0;
    for (int i = 0; i < 512; ++i) {
        const double t = lo + (fn.s_max - lo) * i / 511.0;
        ResidualParts r = residual_parts(kind, fn, base, t);
        sup = std::max(sup, std::abs(r.raw) / r.scale);
    }
    if (!(sup < 1e-8)) {
#ifdef RMT_DEBUG_RESIDUAL
        for (int i = 0; i < 512; i += 8) {
            const double t = lo + (fn.s_max - lo) * i / 511.0;
            ResidualParts r = residual_parts(kind, fn, base, t);
            std::fprintf(stderr, "t=%8.4f raw=%12.4e scale=%12.4e rel=%12.4e\n", t,
                         r.raw, r.scale, std::abs(r.raw) / r.scale);
        }
#endif
        throw ValidationError(std::string("scaled ODE residual too large for ") +
                              kind_name(kind) + ": " + std::to_string(sup));
    }
    return sup;
}

std::string hexd(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double unhexd(const std::string& s) {
    return std::strtod(s.c_str(), nullptr);
}

}  // namespace

PowerSeries boundary_series(TranscendentKind kind, ThinningParam xi, int degree) {
    if (degree > 40) throw PreconditionError("boundary series degree must be <= 40");
    if (degree < 5) throw PreconditionError("boundary series degree too small");
    SerLD c = boundary_series_ld(kind, xi.xi, degree);
    PowerSeries p;
    p.center = 0.0;
    p.coeffs.reserve(c.size());
    for (LD v : c) p.coeffs.push_back(static_cast<double>(v));
    return p;
}

TranscendentSolution solve_sigma0(ThinningParam xi, const SolveOptions& opts) {
    if (!(opts.s_max > 0)) throw ArgumentError("s_max must be positive");
    if (opts.degree < 10) throw ArgumentError("degree must be >= 10");
    SerLD origin = boundary_series_ld(TranscendentKind::Sigma0, xi.xi,
                                      opts.boundary_degree);
    auto ld = std::make_shared<SolutionLD>(
        continue_nonlinear(res_G_sigma, origin, opts));
    TranscendentSolution sol;
    sol.kind = TranscendentKind::Sigma0;
    sol.xi = xi.xi;
    sol.fn = to_public(*ld);
    sol.extended = ld;
    sol.residual_sup = validate(sol.kind, sol.fn, nullptr);
    return sol;
}

TranscendentSolution solve_u0(ThinningParam xi, const SolveOptions& opts) {
    if (!(opts.s_max > 0)) throw ArgumentError("s_max must be positive");
    if (opts.degree < 10) throw ArgumentError("degree must be >= 10");
    SerLD origin = boundary_series_ld(TranscendentKind::U0, xi.xi,
                                      opts.boundary_degree);
    auto ld = std::make_shared<SolutionLD>(continue_nonlinear(res_G_u, origin, opts));
    TranscendentSolution sol;
    sol.kind = TranscendentKind::U0;
    sol.xi = xi.xi;
    sol.fn = to_public(*ld);
    sol.extended = ld;
    sol.residual_sup = validate(sol.kind, sol.fn, nullptr);
    return sol;
}

TranscendentSolution solve_linear_correction(TranscendentKind kind,
                                             const TranscendentSolution& base,
                                             ThinningParam xi,
                                             const SolveOptions& opts) {
    if (kind != TranscendentKind::Sigma1 && kind != TranscendentKind::U1)
        throw ArgumentError("solve_linear_correction handles Sigma1 or U1");
    const TranscendentKind want = (kind == TranscendentKind::Sigma1)
                                      ? TranscendentKind::Sigma0
                                      : TranscendentKind::U0;
    if (base.kind != want)
        throw PreconditionError("base transcendent kind does not match");
    if (base.xi != xi.xi)
        throw ArgumentError("thinning parameter mismatch between base and correction");
    if (base.fn.s_max + 1e-12 < opts.s_max)
        throw PreconditionError("base does not cover [0, s_max]");
    SerLD origin = boundary_series_ld(kind, xi.xi, opts.boundary_degree);
    auto ld = std::make_shared<SolutionLD>(
        continue_linear(kind, *base_ld(base), origin, opts));
    TranscendentSolution sol;
    sol.kind = kind;
    sol.xi = xi.xi;
    sol.fn = to_public(*ld);
    sol.extended = ld;
    sol.residual_sup = validate(kind, sol.fn, &base.fn);
    return sol;
}

double ode_residual(TranscendentKind kind, const PiecewiseAnalytic& fn,
                    const PiecewiseAnalytic* base, double t) {
    return residual_parts(kind, fn, base, t).raw;
}

std::string to_json(const TranscendentSolution& sol) {
    nlohmann::json j;
    j["kind"] = kind_name(sol.kind);
    j["xi"] = sol.xi;
    j["xi_hex"] = hexd(sol.xi);
    j["residual_sup"] = sol.residual_sup;
    j["residual_sup_hex"] = hexd(sol.residual_sup);
    j["s_max_hex"] = hexd(sol.fn.s_max);
    j["junction_tol"] = sol.fn.junction_tol;
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& p : sol.fn.segments) {
        nlohmann::json s;
        s["center_hex"] = hexd(p.center);
        s["lo_hex"] = hexd(p.valid_lo);
        s["hi_hex"] = hexd(p.valid_hi);
        nlohmann::json cs = nlohmann::json::array();
        for (double c : p.coeffs) cs.push_back(hexd(c));
        s["coeffs_hex"] = std::move(cs);
        segs.push_back(std::move(s));
    }
    j["segments"] = std::move(segs);
    return j.dump(1);
}

TranscendentSolution solution_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TranscendentSolution sol;
    auto kind = kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw DataError("unknown transcendent kind in JSON", 0);
    sol.kind = *kind;
    sol.xi = unhexd(j.at("xi_hex").get<std::string>());
    sol.residual_sup = unhexd(j.at("residual_sup_hex").get<std::string>());
    sol.fn.s_max = unhexd(j.at("s_max_hex").get<std::string>());
    sol.fn.junction_tol = j.value("junction_tol", 1e-9);
    for (const auto& s : j.at("segments")) {
        PowerSeries p;
        p.center = unhexd(s.at("center_hex").get<std::string>());
        p.valid_lo = unhexd(s.at("lo_hex").get<std::string>());
        p.valid_hi = unhexd(s.at("hi_hex").get<std::string>());
        for (const auto& c : s.at("coeffs_hex"))
            p.coeffs.push_back(unhexd(c.get<std::string>()));
        sol.fn.segments.push_back(std::move(p));
    }
    return sol;
}

}  // namespace rmt
