#pragma once

// Special values of Dedekind zeta functions and relative L-functions.
//
//  * Real quadratic fields: zeta_k(s) = zeta(s) L(s, chi_D), with L assembled
//    from Hurwitz zeta values (full working precision).
//  * Monogenic fields of higher degree: truncated Euler products whose local
//    factors come from factoring the defining polynomial mod p.
//  * Relative quadratic extensions l = k(sqrt(beta)): Euler product of the
//    quadratic character of beta over the primes of k.
//
// Euler-product tails use pi(x) < 1.25506 x / log x: for a field of degree n
//   sum_{p > P} |log local factor| <= n/(1 - P^-s) * (1.25506 s / log P) P^(1-s) / (s-1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orbivol/bernoulli.hpp"
#include "orbivol/error.hpp"
#include "orbivol/intpoly.hpp"
#include "orbivol/lobachevsky.hpp"
#include "orbivol/modp.hpp"
#include "orbivol/number_field.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/primes.hpp"

namespace orbivol {

// Kronecker symbol (a/n) for n >= 1.
inline int kronecker(long long a, long long n) {
    if (n <= 0) throw DomainError("kronecker: modulus must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool squarefree(long long n) {
    if (n < 0) n = -n;
    for (long long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return n != 0;
}

inline bool is_fundamental(long long d) {
    if (d == 0 || d == 1) return false;
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r != 0) return false;
    long long m = d / 4;
    long long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k + a)^-s for integer s >= 2, a > 0,
// by Euler-Maclaurin summation.
inline Real hurwitz_zeta(int s, const Real& a) {
    if (s < 2) throw DomainError("hurwitz_zeta: s = " + std::to_string(s) + " < 2");
    if (a <= 0) throw DomainError("hurwitz_zeta: a must be positive");
    const int digits = WorkingPrecision::working_digits();
    const int n = digits + 10;
    Real sum = 0;
    for (int k = 0; k < n; ++k) sum += 1 / elem::pow(Real(k + a), s);
    const Real x = n + a;
    const Real x_pow = elem::pow(x, s);  // x^s
    sum += x / (x_pow * (s - 1)) + 1 / (2 * x_pow);
    const Real eps = epsilon();
    const Real inv_x2 = 1 / (x * x);
    // rising = s (s+1) ... (s+2j-2); power = x^(-s-2j+1); fact = (2j)!
    Real rising = s;
    Real power = 1 / (x_pow * x);  // x^(-s-1)
    Real fact = 2;
    for (int j = 1; j <= 4 * digits; ++j) {
        Real term = detail::to_real(bernoulli(static_cast<std::size_t>(2 * j))) / fact * rising * power;
        sum += term;
        if (elem::abs(term) < eps * elem::abs(sum)) break;
        rising *= Real(s + 2 * j - 1) * (s + 2 * j);
        power *= inv_x2;
        fact *= Real(2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

// L(s, chi_D) = D^-s sum_{a=1}^{D-1} chi_D(a) zeta(s, a/D).
inline Real dirichlet_L_quadratic(long long d, int s) {
    if (!is_fundamental(d)) throw DomainError("dirichlet_L_quadratic: " + std::to_string(d) + " is not fundamental");
    const long long m = d < 0 ? -d : d;
    Real sum = 0;
    for (long long a = 1; a < m; ++a) {
        int chi = kronecker(d, a);
        if (chi == 0) continue;
        Real h = hurwitz_zeta(s, Real(a) / m);
        if (chi > 0)
            sum += h;
        else
            sum -= h;
    }
    return sum / elem::pow(Real(m), s);
}

inline Real dedekind_zeta_quadratic(long long d, int s) {
    if (d <= 1 || !is_fundamental(d))
        throw DomainError("dedekind_zeta_quadratic: " + std::to_string(d) + " is not a positive fundamental discriminant");
    if (s < 2) throw DomainError("dedekind_zeta_quadratic: s = " + std::to_string(s) + " < 2");
    return zeta_int(s) * dirichlet_L_quadratic(d, s);
}

struct EulerProductValue {
    int s = 0;
    std::uint64_t cutoff = 0;
    Real value;
    Real tail_bound;  // |true value - value| <= tail_bound
};

// Bound on sum_{p > P} |log local factor| for local factors with at most
// `degree` primes above each p, each of norm >= p.
inline Real euler_log_tail(int degree, int s, std::uint64_t cutoff) {
    if (s < 2) throw DomainError("euler_log_tail: s must be >= 2");
    if (cutoff < 17) throw DomainError("euler_log_tail: cutoff must be >= 17");
    const Real P = Real(cutoff);
    const Real ps = elem::pow(P, -s);
    return Real(degree) / (1 - ps) * (Real(1.25506) * s / elem::log(P)) * (P * ps) / (s - 1);
}

inline Real value_tail(const Real& value, const Real& log_tail) {
    return elem::abs(value) * (elem::exp(log_tail) - 1);
}

namespace detail {

// Applies fn to every prime, splitting the work across threads. fn must not
// touch Real (the MPFR precision setting is process-wide).
template <class Result, class Fn>
std::vector<Result> map_primes(const std::vector<std::uint64_t>& primes, Fn fn) {
    std::vector<Result> out(primes.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(primes.size() / 4096 + 1));
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < primes.size(); i += workers) out[i] = fn(primes[i]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// Residue degrees of the primes above p (0 marks unused slots).
using ResidueDegrees = std::array<std::uint8_t, 8>;

inline std::vector<ResidueDegrees> residue_degrees(const NumberField& f, const std::vector<std::uint64_t>& primes) {
    if (f.degree() > 8) throw DomainError("Euler products support fields of degree <= 8");
    const bool quadratic = f.degree() == 2 && f.monogenic && f.small_discriminant != 0;
    const long long disc = quadratic ? f.small_coefficients[1] * f.small_coefficients[1] - 4 * f.small_coefficients[0] : 0;
    return map_primes<ResidueDegrees>(primes, [&f, quadratic, disc](std::uint64_t p) {
        ResidueDegrees r{};
        if (quadratic) {
            // Monogenic quadratic: the Kronecker symbol of the discriminant decides.
            const int chi = kronecker(disc, static_cast<long long>(p));
            if (chi > 0) r = {1, 1};
            else if (chi < 0) r = {2};
            else r = {1};
            return r;
        }
        auto shape = factor_degrees_mod_p(f, p);
        for (std::size_t i = 0; i < shape.factors.size(); ++i)
            r[i] = static_cast<std::uint8_t>(shape.factors[i].residue_degree);
        return r;
    });
}

// p^-s at the working precision.
inline Real inverse_power(std::uint64_t p, int s) {
    Real r;
    mpfr_ui_pow_ui(r.backend().data(), static_cast<unsigned long>(p), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(r.backend().data(), 1, r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real partial_product(const std::vector<std::uint64_t>& primes, const std::vector<ResidueDegrees>& degrees,
                            int s) {
    Real value = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const Real ps = inverse_power(primes[i], s);
        for (std::uint8_t f : degrees[i]) {
            if (f == 0) break;
            Real x = ps;
            for (int k = 1; k < f; ++k) x *= ps;
            value /= 1 - x;
        }
    }
    return value;
}

inline void require_monogenic(const NumberField& f, const char* who) {
    if (!f.monogenic) {
        throw DomainError(std::string(who) + ": field '" + f.label + "' is not monogenic (index " + f.index.str() +
                          "); use relative_L with an explicit generator instead");
    }
}

}  // namespace detail

// zeta_F(s) as an Euler product over p <= cutoff, for monogenic F.
inline EulerProductValue dedekind_zeta_euler(const NumberField& f, int s, std::uint64_t cutoff) {
    detail::require_monogenic(f, "dedekind_zeta_euler");
    if (s < 2) throw DomainError("dedekind_zeta_euler: s must be >= 2");
    const auto primes = primes_up_to(cutoff);
    const auto degrees = detail::residue_degrees(f, primes);
    EulerProductValue out{s, cutoff, detail::partial_product(primes, degrees, s), Real(0)};
    out.tail_bound = value_tail(out.value, euler_log_tail(f.degree(), s, cutoff));
    return out;
}

inline EulerProductValue dedekind_zeta_quartic(const NumberField& f, int s, std::uint64_t cutoff) {
    if (f.degree() != 4) throw DomainError("dedekind_zeta_quartic: field '" + f.label + "' is not quartic");
    return dedekind_zeta_euler(f, s, cutoff);
}

// L_{l/k}(s) = zeta_l(s) / zeta_k(s) for monogenic l containing the quadratic
// field k, as the quotient of the two Euler products over the same primes. Only
// the relative character survives in each local factor, so the tail is that of
// a degree-[k:Q] product.
inline EulerProductValue relative_L_quotient(const NumberField& l, const NumberField& k, int s,
                                             std::uint64_t cutoff) {
    detail::require_monogenic(l, "relative_L_quotient");
    detail::require_monogenic(k, "relative_L_quotient");
    if (l.degree() != 2 * k.degree() || l.abs_disc % (k.abs_disc * k.abs_disc) != 0) {
        throw DomainError("relative_L_quotient: '" + l.label + "' is not a quadratic extension of '" + k.label + "'");
    }
    const auto primes = primes_up_to(cutoff);
    Real zl = detail::partial_product(primes, detail::residue_degrees(l, primes), s);
    Real zk = detail::partial_product(primes, detail::residue_degrees(k, primes), s);
    EulerProductValue out{s, cutoff, zl / zk, Real(0)};
    out.tail_bound = value_tail(out.value, euler_log_tail(k.degree(), s, cutoff));
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic characters over a real quadratic field k = Q[x]/(x^2 + g1 x + g0).

// u + v*theta with theta a root of the defining polynomial of k.
struct QuadElement {
    BigInt u;
    BigInt v;
    friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

// (a + b sqrt(D)) / c, the way elements of k are written by hand.
struct QuadDescriptor {
    long long a = 0;
    long long b = 0;
    long long c = 1;
};

class QuadraticRing {
public:
    explicit QuadraticRing(const NumberField& k) : k_(&k) {
        if (k.degree() != 2) throw DomainError("field '" + k.label + "' is not quadratic");
        detail::require_monogenic(k, "QuadraticRing");
        g1_ = k.poly[1];
        g0_ = k.poly[0];
    }

    const NumberField& field() const { return *k_; }
    const BigInt& g1() const { return g1_; }
    const BigInt& g0() const { return g0_; }

    QuadElement mul(const QuadElement& x, const QuadElement& y) const {
        // theta^2 = -g1 theta - g0
        BigInt vv = x.v * y.v;
        return {x.u * y.u - g0_ * vv, x.u * y.v + x.v * y.u - g1_ * vv};
    }
    QuadElement sub(const QuadElement& x, const QuadElement& y) const { return {x.u - y.u, x.v - y.v}; }
    BigInt norm(const QuadElement& x) const { return x.u * x.u - g1_ * x.u * x.v + g0_ * x.v * x.v; }
    BigInt trace(const QuadElement& x) const { return 2 * x.u - g1_ * x.v; }

    // sqrt(D) = 2 theta + g1 (one of the two embeddings). A non-integral
    // descriptor is scaled by the square c^2, which leaves k(sqrt beta) unchanged.
    QuadElement from_descriptor(const QuadDescriptor& d) const {
        if (d.c == 0) throw DomainError("element descriptor has zero denominator");
        BigInt u = BigInt(d.a) + BigInt(d.b) * g1_;
        BigInt v = BigInt(2) * d.b;
        if (u % d.c == 0 && v % d.c == 0) return {u / d.c, v / d.c};
        return {u * d.c, v * d.c};
    }

    bool is_square(const QuadElement& x) const {
        if (x.v == 0) {
            // Rational: a square in k iff x or x*D is a rational square.
            if (x.u == 0) return true;
            auto is_sq = [](const BigInt& n) { return n >= 0 && sqrt(n) * sqrt(n) == n; };
            return is_sq(x.u) || is_sq(x.u * k_->abs_disc);
        }
        BigInt nx = norm(x);
        if (nx < 0) return false;
        BigInt root = sqrt(nx);
        if (root * root != nx) return false;
        for (const BigInt n : {root, BigInt(-root)}) {
            BigInt t2 = trace(x) + 2 * n;
            if (t2 < 0) continue;
            BigInt t = sqrt(t2);
            if (t * t != t2 || t == 0) continue;
            // gamma^2 - t gamma + n = 0 with gamma^2 = x gives gamma = (x + n) / t.
            BigInt gu = x.u + n, gv = x.v;
            if (gu % t != 0 || gv % t != 0) continue;
            QuadElement gamma{gu / t, gv / t};
            if (mul(gamma, gamma) == x) return true;
        }
        return false;
    }

private:
    const NumberField* k_;
    BigInt g1_, g0_;
};

struct LocalCharacter {
    std::uint64_t norm = 0;  // N(P)
    int chi = 0;             // +1 split, -1 inert, 0 ramified in l/k
};

namespace detail {

inline int valuation(BigInt n, std::uint64_t p) {
    if (n == 0) throw DomainError("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int legendre(const BigInt& a, std::uint64_t p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::uint64_t e = modp::power(r.convert_to<std::uint64_t>(), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline BigInt pow_int(std::uint64_t p, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Character of an integer a at a prime of degree one over p (completion Q_p).
inline int character_Zp(const BigInt& a, std::uint64_t p) {
    int v = valuation(a, p);
    if (v % 2 == 1) return 0;
    BigInt w = a / pow_int(p, v);
    if (p != 2) return legendre(w, p);
    BigInt r = mod_pos(w, 8);
    if (r == 1) return 1;
    if (r == 5) return -1;
    return 0;
}

inline std::uint64_t search_budget() { return std::uint64_t(1) << 22; }

// Square root of a quadratic residue a mod an odd prime p (Tonelli-Shanks).
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (modp::power(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = modp::power(z, q, p), t = modp::power(a, q, p), r = modp::power(a, (q + 1) / 2, p);
    std::uint64_t m = s;
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = modp::mul(tt, tt, p);
            if (++i == m) throw DomainError("sqrt_mod: not a quadratic residue");
        }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = modp::mul(b, b, p);
        m = i;
        c = modp::mul(b, b, p);
        t = modp::mul(t, c, p);
        r = modp::mul(r, b, p);
    }
    return r;
}

}  // namespace detail

// Quadratic character of beta at the primes of k above the rational prime p.
inline std::vector<LocalCharacter> local_characters(const QuadraticRing& ring, const QuadElement& beta,
                                                    std::uint64_t p) {
    using detail::pow_int;
    const BigInt n_beta = ring.norm(beta);
    if (n_beta == 0) throw DomainError("relative character: beta = 0");
    const auto shape = factor_degrees_mod_p(ring.field(), p);
    std::vector<LocalCharacter> out;

    if (shape.factors.size() == 2) {
        // Split: O/P^j = Z/p^j via theta -> a Hensel-lifted root of g.
        const int j = detail::valuation(n_beta, p) + 3;
        const BigInt m = pow_int(p, j);
        auto g = [&](const BigInt& x) { return x * x + ring.g1() * x + ring.g0(); };
        std::vector<BigInt> roots;
        if (p == 2) {
            for (std::uint64_t r = 0; r < 2; ++r)
                if (detail::mod_pos(g(BigInt(r)), 2) == 0) roots.push_back(BigInt(r));
        } else {
            const std::uint64_t disc = detail::mod_pos(ring.g1() * ring.g1() - 4 * ring.g0(), p).convert_to<std::uint64_t>();
            const std::uint64_t root = detail::sqrt_mod(disc, p);
            const std::uint64_t inv2 = modp::inverse(2, p);
            const std::uint64_t mg1 = detail::mod_pos(-ring.g1(), p).convert_to<std::uint64_t>();
            roots.push_back(BigInt(modp::mul((mg1 + root) % p, inv2, p)));
            roots.push_back(BigInt(modp::mul((mg1 + p - root) % p, inv2, p)));
        }
        for (BigInt r : roots) {
            if (n_beta % p != 0 && p != 2) {
                out.push_back({p, detail::legendre(beta.u + beta.v * r, p)});
                continue;
            }
            // Newton lift to p^j; g'(r) is a unit since p does not ramify.
            for (int it = 0; it < j + 2; ++it) {
                BigInt dg = 2 * r + ring.g1();
                BigInt inv;
                mpz_invert(inv.backend().data(), detail::mod_pos(dg, m).backend().data(), m.backend().data());
                r = detail::mod_pos(r - g(r) * inv, m);
            }
            BigInt image = detail::mod_pos(beta.u + beta.v * r, m);
            out.push_back({p, detail::character_Zp(image, p)});
        }
        return out;
    }

    if (shape.factors[0].residue_degree == 2) {
        // Inert: P = pO, N(P) = p^2, v_P = min of the coordinate valuations.
        const std::uint64_t norm = p * p;
        int v = std::min(beta.u == 0 ? 1 << 20 : detail::valuation(beta.u, p),
                         beta.v == 0 ? 1 << 20 : detail::valuation(beta.v, p));
        if (v % 2 == 1) return {{norm, 0}};
        const BigInt pv = pow_int(p, v);
        QuadElement unit{beta.u / pv, beta.v / pv};
        if (p != 2) return {{norm, detail::legendre(ring.norm(unit), p)}};
        // Dyadic: square mod 8 -> split, square mod 4 only -> inert, else ramified.
        auto square_mod = [&](int e) {
            const std::int64_t m = std::int64_t(1) << e;
            for (std::int64_t s = 0; s < m; ++s)
                for (std::int64_t t = 0; t < m; ++t) {
                    QuadElement d = ring.sub(ring.mul({s, t}, {s, t}), unit);
                    if (d.u % m == 0 && d.v % m == 0) return true;
                }
            return false;
        };
        if (square_mod(3)) return {{norm, 1}};
        if (square_mod(2)) return {{norm, -1}};
        return {{norm, 0}};
    }

    // Ramified in k: P^2 = pO, N(P) = p, v_P(x) = v_p(N x).
    const int v = detail::valuation(n_beta, p);
    if (v % 2 == 1) return {{p, 0}};
    const int e = (p == 2) ? 2 : 0;
    auto square_mod = [&](int level) {
        const int h = (level + 1) / 2;
        const BigInt m = pow_int(p, h);
        if (m * m > BigInt(detail::search_budget())) {
            throw InconclusiveError("relative character at the ramified prime above " + std::to_string(p) +
                                    " needs a search over O/P^" + std::to_string(level) +
                                    "; supply the character value manually");
        }
        const std::uint64_t mm = m.convert_to<std::uint64_t>();
        const BigInt target = pow_int(p, level);
        for (std::uint64_t s = 0; s < mm; ++s)
            for (std::uint64_t t = 0; t < mm; ++t) {
                QuadElement x{BigInt(s), BigInt(t)};
                BigInt nd = ring.norm(ring.sub(ring.mul(x, x), beta));
                if (nd % target == 0) return true;
            }
        return false;
    };
    if (square_mod(v + 2 * e + 1)) return {{p, 1}};
    if (square_mod(v + 2 * e)) return {{p, -1}};
    return {{p, 0}};
}

namespace detail {

// Machine-integer copy of the data needed at primes not dividing 2 D N(beta).
struct SmallQuadData {
    long long u, v, g1, disc, norm;

    static std::optional<SmallQuadData> from(const QuadraticRing& ring, const QuadElement& beta) {
        const BigInt limit = BigInt(1) << 31;
        const BigInt disc = ring.g1() * ring.g1() - 4 * ring.g0();
        const BigInt norm = ring.norm(beta);
        for (const BigInt* x : {&beta.u, &beta.v, &ring.g1(), &disc, &norm})
            if (abs(*x) >= limit) return std::nullopt;
        return SmallQuadData{beta.u.convert_to<long long>(), beta.v.convert_to<long long>(),
                             ring.g1().convert_to<long long>(), disc.convert_to<long long>(),
                             norm.convert_to<long long>()};
    }
};

inline long long residue(long long a, std::uint64_t p) {
    const auto sp = static_cast<long long>(p);
    long long r = a % sp;
    return r < 0 ? r + sp : r;
}

// Characters at an odd prime p with p not dividing D N(beta); false if p
// needs the general treatment.
template <class Locals>
bool fast_characters(const SmallQuadData& q, std::uint64_t p, Locals& out) {
    if (p == 2 || q.disc % static_cast<long long>(p) == 0 || q.norm % static_cast<long long>(p) == 0) return false;
    const auto sp = static_cast<long long>(p);
    const long long d = residue(q.disc, p);
    if (kronecker(d, sp) < 0) {
        out[0] = {2, static_cast<std::int8_t>(kronecker(residue(q.norm, p), sp))};
        return true;
    }
    const std::uint64_t root = sqrt_mod(static_cast<std::uint64_t>(d), p);
    const std::uint64_t inv2 = (p + 1) / 2;
    const std::uint64_t mg1 = static_cast<std::uint64_t>(residue(-q.g1, p));
    const std::uint64_t roots[2] = {modp::mul((mg1 + root) % p, inv2, p), modp::mul((mg1 + p - root) % p, inv2, p)};
    for (int i = 0; i < 2; ++i) {
        long long image = residue(q.u + residue(q.v, p) * static_cast<long long>(roots[i]) % sp, p);
        out[static_cast<std::size_t>(i)] = {1, static_cast<std::int8_t>(kronecker(image, sp))};
    }
    return true;
}

}  // namespace detail

// L(s, l/k) for l = k(sqrt(beta)) as an Euler product over the primes of k
// lying over rational primes p <= cutoff.
inline EulerProductValue relative_L(const NumberField& k, const QuadDescriptor& beta_desc, int s,
                                    std::uint64_t cutoff) {
    if (s < 2) throw DomainError("relative_L: s must be >= 2");
    QuadraticRing ring(k);
    const QuadElement beta = ring.from_descriptor(beta_desc);
    if (ring.is_square(beta)) throw DomainError("relative_L: beta is a square in '" + k.label + "'");
    const auto primes = primes_up_to(cutoff);
    const auto small = detail::SmallQuadData::from(ring, beta);
    using Locals = std::array<std::pair<std::uint8_t, std::int8_t>, 2>;  // (residue degree, chi)
    auto locals = detail::map_primes<Locals>(primes, [&](std::uint64_t p) {
        Locals out{};
        if (small && detail::fast_characters(*small, p, out)) return out;
        auto chars = local_characters(ring, beta, p);
        for (std::size_t i = 0; i < chars.size(); ++i)
            out[i] = {static_cast<std::uint8_t>(chars[i].norm == p ? 1 : 2), static_cast<std::int8_t>(chars[i].chi)};
        return out;
    });
    Real value = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const Real ps = detail::inverse_power(primes[i], s);
        for (auto [f, chi] : locals[i]) {
            if (f == 0 || chi == 0) continue;
            Real x = f == 1 ? ps : ps * ps;
            if (chi > 0)
                value /= 1 - x;
            else
                value /= 1 + x;
        }
    }
    EulerProductValue out{s, cutoff, value, Real(0)};
    out.tail_bound = value_tail(value, euler_log_tail(2, s, cutoff));
    return out;
}

inline EulerProductValue relative_L(const NumberField& k, const QuadDescriptor& beta_desc, int s) {
    return relative_L(k, beta_desc, s, 10'000'000);
}

}  // namespace orbivol
