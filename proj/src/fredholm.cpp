#include "rmt/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>

namespace rmt {
namespace {

using LD = long double;
using MatLD = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>;
using VecLD = Eigen::Matrix<LD, Eigen::Dynamic, 1>;

constexpr LD kPiL = 3.14159265358979323846264338327950288L;

LD kernel_value(const KernelSpec& k, LD x, LD y) {
    const LD d = x - y;
    if (d == 0) return 1.0L;
    const LD pd = kPiL * d;
    if (k.family == KernelSpec::Family::SineLimit) return std::sin(pd) / pd;
    const LD den = k.N * std::sin(pd / k.N);
    if (den == 0) return 1.0L;
    return std::sin(pd) / den;
}

struct Discretization {
    VecLD nodes, sqw;
    MatLD A;  // symmetrized kernel matrix W^{1/2} K W^{1/2}
};

Discretization discretize(const KernelSpec& k, LD s, int m) {
    std::vector<LD> x, w;
    detail::gauss_legendre_reference(m, x, w);
    Discretization d;
    d.nodes.resize(m);
    d.sqw.resize(m);
    const LD half = s / 2;
    for (int i = 0; i < m; ++i) {
        d.nodes[i] = half * (x[static_cast<std::size_t>(i)] + 1);
        d.sqw[i] = std::sqrt(half * w[static_cast<std::size_t>(i)]);
    }
    d.A.resize(m, m);
    for (int i = 0; i < m; ++i) {
        d.A(i, i) = d.sqw[i] * d.sqw[i];
        for (int j = 0; j < i; ++j) {
            const LD v = d.sqw[i] * d.sqw[j] * kernel_value(k, d.nodes[i], d.nodes[j]);
            d.A(i, j) = v;
            d.A(j, i) = v;
        }
    }
    return d;
}

LD det_once(const KernelSpec& k, LD s, int m) {
    Discretization d = discretize(k, s, m);
    Eigen::SelfAdjointEigenSolver<MatLD> es(d.A, Eigen::EigenvaluesOnly);
    LD det = 1.0L;
    for (int i = 0; i < m; ++i) det *= (1.0L - k.xi.xi * es.eigenvalues()[i]);
    return det;
}

void check_kernel(const KernelSpec& k, double s, int m) {
    if (!(s > 0)) throw DomainError("interval length s must be positive");
    if (m < 8) throw ArgumentError("Nystrom order must be >= 8");
    if (k.family == KernelSpec::Family::FiniteN && s >= k.N)
        throw DomainError("finite-N kernel requires s < N");
}

}  // namespace

KernelSpec KernelSpec::finite(int N_, ThinningParam xi_) {
    if (N_ < 2) throw ArgumentError("finite-N kernel requires N >= 2");
    return {Family::FiniteN, N_, xi_};
}

DetResult nystrom_det(const KernelSpec& kernel, double s, int m) {
    check_kernel(kernel, s, m);
    const LD full = det_once(kernel, s, m);
    const LD half = det_once(kernel, s, m / 2);
    if (!std::isfinite(static_cast<double>(full)))
        throw NumericalError("non-finite Nystrom determinant");
    DetResult r;
    r.value = static_cast<double>(full);
    r.order_used = m;
    r.est_error = static_cast<double>(std::abs(full - half));
    if (r.value <= 0.0 || r.value > 1.0 + 1e-12)
        throw NumericalError("determinant outside (0, 1]: " + std::to_string(r.value));
    return r;
}

DetResult finite_n_det(int N, ThinningParam xi, double s, int m) {
    return nystrom_det(KernelSpec::finite(N, xi), s, m);
}

double resolvent_trace_correction(ThinningParam xi, double s, int m) {
    check_kernel(KernelSpec::sine(xi), s, m);
    Discretization d = discretize(KernelSpec::sine(xi), s, m);
    Eigen::SelfAdjointEigenSolver<MatLD> es(d.A);
    LD lo = 1.0L, hi = 0.0L;
    for (int i = 0; i < m; ++i) {
        const LD f = 1.0L - xi.xi * es.eigenvalues()[i];
        lo = std::min(lo, std::abs(f));
        hi = std::max(hi, std::abs(f));
    }
    if (!(lo > 0) || hi / lo > 1e12L)
        throw NumericalError("resolvent system is ill-conditioned");
    MatLD L(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const LD diff = d.nodes[i] - d.nodes[j];
            L(i, j) = d.sqw[i] * d.sqw[j] * (kPiL * diff / 6) * std::sin(kPiL * diff);
        }
    // Tr((I - xi A)^{-1} L) through the eigenbasis
    MatLD Lt = es.eigenvectors().transpose() * L * es.eigenvectors();
    LD tr = 0.0L;
    for (int i = 0; i < m; ++i) tr += Lt(i, i) / (1.0L - xi.xi * es.eigenvalues()[i]);
    return static_cast<double>(tr);
}

double conditioned_gap(int m_count, double s, int m, double h_xi) {
    if (m_count < 0 || m_count > 3)
        throw ArgumentError("conditioned gap supports m in {0,1,2,3}");
    check_kernel(KernelSpec::sine(ThinningParam{1.0}), s, m);
    // the discretized determinant is a polynomial in xi: one eigensolve serves
    // every evaluation point of the difference stencil
    Discretization d =
        discretize(KernelSpec::sine(ThinningParam{1.0}), s, m);
    Eigen::SelfAdjointEigenSolver<MatLD> es(d.A, Eigen::EigenvaluesOnly);
    auto detv = [&](LD xv) {
        LD det = 1.0L;
        for (int i = 0; i < m; ++i) det *= (1.0L - xv * es.eigenvalues()[i]);
        return det;
    };
    if (m_count == 0) return static_cast<double>(detv(1.0L));
    auto stencil = [&](LD h) -> LD {
        switch (m_count) {
            case 1: return (detv(1 + h) - detv(1 - h)) / (2 * h);
            case 2: return (detv(1 + h) - 2 * detv(1.0L) + detv(1 - h)) / (h * h);
            default:
                return (detv(1 + 2 * h) - 2 * detv(1 + h) + 2 * detv(1 - h) -
                        detv(1 - 2 * h)) /
                       (2 * h * h * h);
        }
    };
    const LD h = h_xi;
    const LD refined = (4 * stencil(h / 2) - stencil(h)) / 3;
    double sign = (m_count % 2 == 0) ? 1.0 : -1.0;
    double fact = (m_count == 3) ? 6.0 : (m_count == 2 ? 2.0 : 1.0);
    return sign / fact * static_cast<double>(refined);
}

double finite_n_spacing(int N, ThinningParam xi, double s, int m) {
    if (!(s > 0) || s >= N) throw DomainError("finite_n_spacing requires 0 < s < N");
    KernelSpec k = KernelSpec::finite(N, xi);
    auto detv = [&](LD sv) { return det_once(k, sv, m); };
    const LD h0 = std::max(1e-3, s * 1e-4);
    auto d2 = [&](LD h) {
        return (-detv(s - 2 * h) + 16 * detv(s - h) - 30 * detv(s) +
                16 * detv(s + h) - detv(s + 2 * h)) /
               (12 * h * h);
    };
    const LD refined = (16 * d2(h0 / 2) - d2(h0)) / 15;
    return static_cast<double>(refined / xi.xi);
}

ExtrapolationFit extrapolate_in_N(std::span<const std::pair<int, double>> samples) {
    if (samples.size() < 3)
        throw ArgumentError("extrapolation needs at least 3 samples");
    std::set<int> uniq;
    for (const auto& s : samples) uniq.insert(s.first);
    if (uniq.size() != samples.size())
        throw ArgumentError("duplicated N makes the fit rank-deficient");

    const int n = static_cast<int>(samples.size());
    LD xmax = 0;
    for (const auto& s : samples)
        xmax = std::max(xmax, LD(1) / (static_cast<LD>(s.first) * s.first));
    MatLD M(n, 3);
    VecLD b(n);
    for (int i = 0; i < n; ++i) {
        const LD x = LD(1) / (static_cast<LD>(samples[static_cast<std::size_t>(i)].first) *
                              samples[static_cast<std::size_t>(i)].first) / xmax;
        M(i, 0) = 1;
        M(i, 1) = x;
        M(i, 2) = x * x;
        b(i) = samples[static_cast<std::size_t>(i)].second;
    }
    VecLD sol = M.colPivHouseholderQr().solve(b);
    ExtrapolationFit fit;
    fit.limit = static_cast<double>(sol(0));
    fit.c2 = static_cast<double>(sol(1) / xmax);
    return fit;
}

}  // namespace rmt
