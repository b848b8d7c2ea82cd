#pragma once

// Lobachevsky functions
//   lob2(w) = 1/2 sum sin(2rw)/r^2 = -int_0^w log|2 sin t| dt
//   lob3(w) = 1/4 sum cos(2rw)/r^3 = zeta(3)/4 - int_0^w lob2(t) dt
// and Riemann zeta at integers.
//
// Both Lobachevsky functions are evaluated through the Clausen-type expansions
// around 0 of Cl2(x) = sum sin(rx)/r^2 and S3(x) = sum cos(rx)/r^3 after reducing
// x = 2w into [-pi, pi]:
//   Cl2(x) = x - x log|x| + sum_k c_k x^(2k+1)
//   S3(x)  = zeta(3) - 3x^2/4 + (x^2/2) log|x| - sum_k c_k x^(2k+2)/(2k+2)
// with c_k = |B_2k| / (2k (2k+1)!). Since |B_2k|/(2k)! = 2 zeta(2k)/(2 pi)^2k the
// terms decay at least like 4^-k on [-pi, pi].

#include <map>
#include <mutex>
#include <vector>

#include "orbivol/bernoulli.hpp"
#include "orbivol/error.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/quadrature.hpp"

namespace orbivol {

struct SeriesValue {
    Real value;
    Real tail_bound;  // bound on the neglected terms
};

namespace detail {

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

inline unsigned current_bits() { return static_cast<unsigned>(mpfr_get_default_prec()); }

// c_k = |B_2k| / (2k (2k+1)!) for k = 1..count, converted at the current precision.
inline const std::vector<Real>& clausen_coefficients(std::size_t count) {
    static std::mutex guard;
    static std::vector<Rational> exact;
    static std::map<unsigned, std::vector<Real>> by_precision;
    std::lock_guard<std::mutex> lock(guard);
    while (exact.size() < count) {
        std::size_t k = exact.size() + 1;
        Rational b = bernoulli(2 * k);
        if (b < 0) b = -b;
        boost::multiprecision::mpz_int fact = 1;
        for (std::size_t i = 2; i <= 2 * k + 1; ++i) fact *= static_cast<unsigned long>(i);
        exact.push_back(b / Rational(fact * static_cast<unsigned long>(2 * k)));
    }
    auto& cached = by_precision[current_bits()];
    while (cached.size() < count) cached.push_back(to_real(exact[cached.size()]));
    return cached;
}

// Number of expansion terms that brings the 4^-k tail below the working epsilon.
inline std::size_t clausen_term_count() {
    return static_cast<std::size_t>((WorkingPrecision::working_digits() + 4) * 1.661) + 4;
}

// Reduces x into [-pi, pi]; `on_pi_multiple` reports x == k*pi exactly.
inline Real reduce_symmetric(const Real& x, const Real& pi, bool& on_pi_multiple) {
    Real two_pi = 2 * pi;
    Real n = boost::multiprecision::round(x / two_pi);
    Real r = x - n * two_pi;
    if (r > pi) r -= two_pi;
    if (r < -pi) r += two_pi;
    on_pi_multiple = (r == 0) || (elem::abs(r) == pi);
    return r;
}

// Series part of Cl2 on [-pi, pi] with an explicit tail bound.
inline SeriesValue clausen2_reduced(const Real& x) {
    if (x == 0) return {Real(0), Real(0)};
    const Real ax = elem::abs(x);
    const Real pi = const_pi();
    const auto n_terms = clausen_term_count();
    const auto& c = clausen_coefficients(n_terms);
    const Real x2 = x * x;
    Real power = x;  // x^(2k+1)
    Real sum = x - x * elem::log(ax);
    for (std::size_t k = 1; k <= n_terms; ++k) {
        power *= x2;
        sum += c[k - 1] * power;
    }
    // |c_k x^(2k+1)| <= 2 zeta(2) |x| (x/2pi)^2k / (2k(2k+1)); ratio <= 1/4.
    const Real ratio = x2 / (4 * pi * pi);
    const std::size_t K = n_terms + 1;
    Real bound = (pi * pi / 3) * ax * boost::multiprecision::pow(ratio, static_cast<int>(K)) /
                 (2 * K * (2 * K + 1));
    return {sum, bound * 4 / 3};
}

inline SeriesValue s3_reduced(const Real& x, const Real& zeta3) {
    if (x == 0) return {zeta3, Real(0)};
    const Real ax = elem::abs(x);
    const Real pi = const_pi();
    const auto n_terms = clausen_term_count();
    const auto& c = clausen_coefficients(n_terms);
    const Real x2 = x * x;
    Real power = x2;  // x^(2k+2)
    Real series = 0;
    for (std::size_t k = 1; k <= n_terms; ++k) {
        power *= x2;
        series += c[k - 1] * power / (2 * k + 2);
    }
    Real value = zeta3 - 3 * x2 / 4 + x2 / 2 * elem::log(ax) - series;
    const Real ratio = x2 / (4 * pi * pi);
    const std::size_t K = n_terms + 1;
    Real bound = (pi * pi / 3) * x2 * boost::multiprecision::pow(ratio, static_cast<int>(K)) /
                 (2 * K * (2 * K + 1) * (2 * K + 2));
    return {value, bound * 4 / 3};
}

// Borwein's accelerated alternating series for zeta(s), s >= 2.
inline Real zeta_borwein(int s) {
    const int n = static_cast<int>((WorkingPrecision::working_digits() + 5) * 1.31) + 2;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by term ratios.
    std::vector<Real> d(static_cast<std::size_t>(n) + 1);
    Real term = Real(1) / n;  // i = 0 term: (n-1)!/n! = 1/n
    Real acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        // term_i / term_{i-1} = (n+i-1)(n-i+1) * 4 / ((2i-1)(2i))
        term *= Real(n + i - 1) * (n - i + 1) * 4;
        term /= Real(2 * i - 1) * (2 * i);
        acc += term;
        d[static_cast<std::size_t>(i)] = n * acc;
    }
    Real sum = 0;
    for (int k = 0; k < n; ++k) {
        Real t = (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]) /
                 boost::multiprecision::pow(Real(k + 1), s);
        if (k % 2 == 0)
            sum += t;
        else
            sum -= t;
    }
    Real factor = 1 - boost::multiprecision::pow(Real(2), 1 - s);
    return -sum / (d[static_cast<std::size_t>(n)] * factor);
}

}  // namespace detail

// Riemann zeta at an integer n >= 2. Even n use the Bernoulli closed form,
// odd n the Borwein acceleration.
inline Real zeta_int(int n) {
    if (n < 2) throw DomainError("zeta_int: argument " + std::to_string(n) + " < 2");
    if (n % 2 == 0) {
        Rational b = bernoulli(static_cast<std::size_t>(n));
        if (b < 0) b = -b;
        boost::multiprecision::mpz_int fact = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
        Real two_pi = 2 * const_pi();
        return detail::to_real(b / Rational(2 * fact)) * boost::multiprecision::pow(two_pi, n);
    }
    return detail::zeta_borwein(n);
}

inline Real zeta_int(int n, int digits) {
    WorkingPrecision scope(digits);
    return zeta_int(n);
}

// lob2 with the tail bound of the expansion used.
inline SeriesValue lob2_with_bound(const Real& omega) {
    const Real pi = const_pi();
    bool on_multiple = false;
    Real x = detail::reduce_symmetric(2 * omega, pi, on_multiple);
    if (on_multiple) return {Real(0), Real(0)};
    auto s = detail::clausen2_reduced(x);
    return {s.value / 2, s.tail_bound / 2};
}

inline Real lob2(const Real& omega) { return lob2_with_bound(omega).value; }

inline Real lob2(const Real& omega, int digits) {
    WorkingPrecision scope(digits);
    return lob2(Real(omega));
}

// Series form of lob3 (the production path).
inline SeriesValue lob3_with_bound(const Real& omega, const Real& zeta3) {
    const Real pi = const_pi();
    bool on_multiple = false;
    Real x = detail::reduce_symmetric(2 * omega, pi, on_multiple);
    auto s = detail::s3_reduced(x, zeta3);
    return {s.value / 4, s.tail_bound / 4};
}

inline Real lob3(const Real& omega) { return lob3_with_bound(omega, zeta_int(3)).value; }

inline Real lob3(const Real& omega, int digits) {
    WorkingPrecision scope(digits);
    return lob3(Real(omega));
}

// Integral form zeta(3)/4 - int_0^w lob2(t) dt, evaluated by quadrature after
// folding w into [0, pi/2] with evenness and pi-periodicity. Used as the
// independent cross-check of lob3.
inline QuadratureResult lob3_integral(const Real& omega) {
    const Real pi = const_pi();
    Real w = omega - boost::multiprecision::floor(omega / pi) * pi;  // [0, pi)
    if (w > pi / 2) w = pi - w;
    const Real tol = pow10(-(WorkingPrecision::digits() + 3));
    auto integral = integrate([](const Real& t) { return lob2(t); }, Real(0), w, tol);
    QuadratureResult out = integral;
    out.value = zeta_int(3) / 4 - integral.value;
    return out;
}

}  // namespace orbivol
