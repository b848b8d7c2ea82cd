#pragma once

// Arbitrary-precision real scalar, working-precision control and checked
// elementary functions. Everything numeric in orbivol is expressed in Real.

#include <boost/multiprecision/mpfr.hpp>

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "orbivol/error.hpp"

namespace orbivol {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kMinDigits = 30;
inline constexpr int kDefaultDigits = 60;
inline constexpr int kGuardDigits = 10;

namespace detail {
inline int& requested_digits_slot() {
    static int digits = kDefaultDigits;
    return digits;
}

inline void require_digits(int digits) {
    if (digits < kMinDigits) {
        throw ConfigError("precision of " + std::to_string(digits) + " digits is below the minimum of " +
                          std::to_string(kMinDigits));
    }
}
}  // namespace detail

// RAII scope that fixes the working precision of every Real created inside it:
// requested output digits plus kGuardDigits guard digits. Scopes nest and restore
// the previous setting on exit. The underlying MPFR default is process-wide, so
// scopes must not be entered concurrently from several threads.
class WorkingPrecision {
public:
    explicit WorkingPrecision(int digits)
        : previous_requested_(detail::requested_digits_slot()), previous_digits10_(Real::default_precision()) {
        detail::require_digits(digits);
        detail::requested_digits_slot() = digits;
        Real::default_precision(static_cast<unsigned>(digits + kGuardDigits));
    }
    ~WorkingPrecision() {
        detail::requested_digits_slot() = previous_requested_;
        Real::default_precision(previous_digits10_);
    }
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

    // Requested (output) digits of the innermost active scope.
    static int digits() { return detail::requested_digits_slot(); }
    static int working_digits() { return static_cast<int>(Real::default_precision()); }

private:
    int previous_requested_;
    unsigned previous_digits10_;
};

// Requested digits from ORBIVOL_DIGITS, falling back to kDefaultDigits.
inline int default_digits_from_env() {
    const char* env = std::getenv("ORBIVOL_DIGITS");
    if (env == nullptr || *env == '\0') return kDefaultDigits;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') throw ConfigError(std::string("ORBIVOL_DIGITS is not an integer: ") + env);
    detail::require_digits(static_cast<int>(value));
    return static_cast<int>(value);
}

// Relative spacing of Reals at the current working precision.
inline Real epsilon() {
    Real one = 1;
    return boost::multiprecision::ldexp(one, 1 - static_cast<int>(mpfr_get_prec(one.backend().data())));
}

inline Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

// pi at the current working precision.
inline Real const_pi() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

// pi correct to `digits` requested digits (computed with guard digits).
inline Real const_pi(int digits) {
    WorkingPrecision scope(digits);
    return const_pi();
}

namespace elem {

namespace mp = boost::multiprecision;

[[noreturn]] inline void domain_failure(const char* fn, const Real& x) {
    std::ostringstream os;
    os << fn << ": argument " << x.str(20) << " outside domain";
    throw DomainError(os.str());
}

inline Real sin(const Real& x) { return mp::sin(x); }
inline Real cos(const Real& x) { return mp::cos(x); }
inline Real exp(const Real& x) { return mp::exp(x); }
inline Real atan(const Real& x) { return mp::atan(x); }
inline Real atan2(const Real& y, const Real& x) { return mp::atan2(y, x); }
inline Real sinh(const Real& x) { return mp::sinh(x); }
inline Real cosh(const Real& x) { return mp::cosh(x); }
inline Real abs(const Real& x) { return mp::abs(x); }

inline Real sqrt(const Real& x) {
    if (x < 0) domain_failure("sqrt", x);
    return mp::sqrt(x);
}

inline Real log(const Real& x) {
    if (x <= 0) domain_failure("log", x);
    return mp::log(x);
}

inline Real log10(const Real& x) {
    if (x <= 0) domain_failure("log10", x);
    return mp::log10(x);
}

inline Real tan(const Real& x) {
    Real c = mp::cos(x);
    if (c == 0) domain_failure("tan", x);
    return mp::sin(x) / c;
}

inline Real cot(const Real& x) {
    Real s = mp::sin(x);
    if (s == 0) domain_failure("cot", x);
    return mp::cos(x) / s;
}

inline Real acosh(const Real& x) {
    if (x < 1) domain_failure("acosh", x);
    return mp::acosh(x);
}

// Real power; a negative base is only accepted with an integral exponent.
inline Real pow(const Real& x, const Real& y) {
    if (x < 0 && mp::trunc(y) != y) domain_failure("pow", x);
    if (x == 0 && y < 0) domain_failure("pow", x);
    return mp::pow(x, y);
}

inline Real pow(const Real& x, int n) {
    if (x == 0 && n < 0) domain_failure("pow", x);
    return mp::pow(x, n);
}

}  // namespace elem

// Fixed-notation decimal string with `significant` significant digits, e.g.
// "0.000767296180103". Zero prints as "0". Deterministic for a given value.
inline std::string to_decimal(const Real& x, int significant) {
    if (x == 0) return "0";
    if (significant < 1) significant = 1;
    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(significant), x.backend().data(),
                             MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // value = 0.d1d2d3... * 10^exponent
    std::string out;
    if (exponent <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + digits;
    } else if (static_cast<std::size_t>(exponent) >= digits.size()) {
        out = digits + std::string(static_cast<std::size_t>(exponent) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<std::size_t>(exponent)) + "." + digits.substr(static_cast<std::size_t>(exponent));
    }
    return sign + out;
}

// Short scientific rendering for error estimates and tail bounds, with
// `decimals` digits after the point.
inline std::string to_scientific(const Real& x, int decimals = 3) {
    if (x == 0) return "0";
    return x.str(decimals, std::ios_base::scientific);
}

}  // namespace orbivol
