#pragma once

// Tanh-sinh quadrature with level doubling. Level L uses step h = 2^-L; every
// level reuses the previous nodes and only evaluates the new odd multiples of h.
// The error estimate is the change between two consecutive levels plus a
// rounding floor, which bounds the error of the finer level once the rule is in
// its (double-exponential) convergent regime.

#include <cstddef>
#include <string>
#include <utility>

#include "orbivol/error.hpp"
#include "orbivol/numkernel.hpp"

namespace orbivol {

struct QuadratureResult {
    Real value;
    Real error_estimate;  // absolute
    std::size_t evaluations = 0;
    int level = 0;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, QuadratureResult best) : Error(what), best_(std::move(best)) {}
    const QuadratureResult& best_estimate() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

struct QuadratureOptions {
    int min_level = 3;
    int max_level = 12;
};

namespace detail {

// Half-width of the truncated t-range: beyond it the weights drop below
// 10^-(working digits + 5).
inline Real tanh_sinh_range() {
    const double target = (WorkingPrecision::working_digits() + 5) * std::log(10.0);
    // pi/2 e^t ~ target + log(pi e^t)
    double t = std::log(2.0 * target / 3.141592653589793);
    t = std::log(2.0 * (target + std::log(3.141592653589793) + t) / 3.141592653589793);
    return Real(t + 0.25);
}

struct TanhSinhNode {
    Real offset;  // distance from the nearer endpoint, already scaled by the half-width
    Real weight;  // scaled by the half-width
};

inline TanhSinhNode tanh_sinh_node(const Real& t, const Real& half_width, const Real& half_pi) {
    Real u = half_pi * elem::sinh(t);
    Real cu = elem::cosh(u);
    // 1 - tanh(u) = e^-u / cosh(u), evaluated without cancellation
    Real complement = elem::exp(-u) / cu;
    Real weight = half_pi * elem::cosh(t) / (cu * cu);
    return {half_width * complement, half_width * weight};
}

}  // namespace detail

// Integrates f over [a, b] to absolute tolerance tol. f must be pure: nodes are
// evaluated in no particular order. a == b yields exactly zero.
template <class F>
QuadratureResult integrate(F&& f, const Real& a, const Real& b, const Real& tol, QuadratureOptions options = {}) {
    if (tol <= 0) throw DomainError("integrate: tolerance must be positive");
    if (b < a) throw DomainError("integrate: lower limit exceeds upper limit");
    QuadratureResult result{Real(0), Real(0), 0, 0};
    if (a == b) return result;

    const Real half_pi = const_pi() / 2;
    const Real half_width = (b - a) / 2;
    const Real mid = (a + b) / 2;
    const Real t_max = detail::tanh_sinh_range();
    const Real eps = epsilon();

    // Sum over the nodes j*h (j of the given stride/offset) of w * f.
    Real abs_sum = 0;
    auto accumulate = [&](const Real& h, bool odd_only) {
        Real sum = 0;
        for (long j = odd_only ? 1 : 0;; j += odd_only ? 2 : 1) {
            Real t = h * j;
            if (t > t_max) break;
            if (j == 0) {
                Real w = half_pi * half_width;
                Real v = f(mid);
                sum += w * v;
                abs_sum += elem::abs(w * v);
                ++result.evaluations;
                continue;
            }
            auto node = detail::tanh_sinh_node(t, half_width, half_pi);
            if (node.offset == 0) break;
            Real left = a + node.offset;
            Real right = b - node.offset;
            if (left <= a || right >= b) break;
            Real v = f(left) + f(right);
            result.evaluations += 2;
            sum += node.weight * v;
            abs_sum += elem::abs(node.weight * v);
        }
        return sum;
    };

    Real h = 1;
    Real raw = accumulate(h, false);  // sum without the factor h
    Real previous = h * raw;
    for (int level = 1; level <= options.max_level; ++level) {
        h /= 2;
        raw += accumulate(h, true);
        Real current = h * raw;
        Real rounding = 10 * eps * h * abs_sum;
        Real estimate = elem::abs(current - previous) + rounding;
        result.value = current;
        result.error_estimate = estimate;
        result.level = level;
        if (level >= options.min_level && estimate <= tol) return result;
        previous = current;
    }
    throw QuadratureError("integrate: no convergence to tolerance " + to_scientific(tol) + " within level " +
                              std::to_string(options.max_level) + " (estimate " +
                              to_scientific(result.error_estimate) + ")",
                          result);
}

// One fixed level of the same rule, for convergence studies.
template <class F>
Real integrate_at_level(F&& f, const Real& a, const Real& b, int level) {
    QuadratureOptions options{level, level};
    try {
        return integrate(std::forward<F>(f), a, b, Real(1), options).value;
    } catch (const QuadratureError& e) {
        return e.best_estimate().value;
    }
}

}  // namespace orbivol
