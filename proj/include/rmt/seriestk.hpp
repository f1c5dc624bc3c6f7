#pragma once
// Truncated Taylor-series arithmetic on plain coefficient vectors. Everything
// here is length-preserving: products drop orders >= size().
#include <cmath>
#include <cstddef>
#include <vector>

namespace rmt::stk {

template <class T>
using Ser = std::vector<T>;

template <class T>
Ser<T> zero(std::size_t n) {
    return Ser<T>(n, T(0));
}

template <class T>
Ser<T> mul(const Ser<T>& a, const Ser<T>& b) {
    Ser<T> c(a.size(), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == T(0)) continue;
        const std::size_t jmax = a.size() - i;
        for (std::size_t j = 0; j < jmax && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

template <class T>
void add_in(Ser<T>& a, const Ser<T>& b, T w = T(1)) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] += w * b[i];
}

template <class T>
Ser<T> scaled(const Ser<T>& a, T w) {
    Ser<T> c(a);
    for (auto& x : c) x *= w;
    return c;
}

template <class T>
Ser<T> deriv(const Ser<T>& a) {
    Ser<T> c(a.size(), T(0));
    for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = T(i) * a[i];
    return c;
}

// series of the identity map t = t0 + h
template <class T>
Ser<T> var(T t0, std::size_t n) {
    Ser<T> c(n, T(0));
    c[0] = t0;
    if (n > 1) c[1] = T(1);
    return c;
}

template <class T>
T horner(const Ser<T>& c, T h) {
    T acc = T(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * h + c[k];
    return acc;
}

// value of the order-th derivative at offset h
template <class T>
T horner_deriv(const Ser<T>& c, T h, int order) {
    Ser<T> d = c;
    for (int r = 0; r < order; ++r) d = deriv(d);
    return horner(d, h);
}

// Taylor shift: coefficients about center + h (classic synthetic division)
template <class T>
Ser<T> recenter(const Ser<T>& c, T h) {
    Ser<T> out(c);
    const std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = d - 1; j + 1 > i; --j) out[j] += h * out[j + 1];
    return out;
}

}  // namespace rmt::stk
