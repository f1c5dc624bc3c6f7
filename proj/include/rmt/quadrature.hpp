#pragma once
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

// Gauss-Legendre rule mapped to (a, b). Nodes strictly increasing.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

QuadratureRule gauss_legendre_rule(double a, double b, int m);

namespace detail {
// reference nodes/weights on [-1, 1], long double throughout
void gauss_legendre_reference(int m, std::vector<long double>& x,
                              std::vector<long double>& w);
}  // namespace detail

}  // namespace rmt
