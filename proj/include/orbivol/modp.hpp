#pragma once

// Polynomials over F_p (p < 2^32, degree <= 8) and the splitting shape of an
// integer polynomial modulo p: distinct-degree factorization with
// multiplicities. Fixed-size storage and lazy reduction keep the per-prime cost
// low enough for Euler products over millions of primes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "orbivol/error.hpp"
#include "orbivol/intpoly.hpp"

namespace orbivol {

struct PrimeFactor {
    int residue_degree = 1;  // f
    int ramification = 1;    // e

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
    friend bool operator<(const PrimeFactor& a, const PrimeFactor& b) {
        return a.residue_degree != b.residue_degree ? a.residue_degree < b.residue_degree
                                                    : a.ramification < b.ramification;
    }
};

struct SplittingType {
    std::uint64_t prime = 0;
    std::vector<PrimeFactor> factors;  // sorted

    int total_degree() const {
        int n = 0;
        for (const auto& f : factors) n += f.residue_degree * f.ramification;
        return n;
    }
};

namespace modp {

inline constexpr int kMaxDegree = 8;

inline std::uint64_t power(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return power(a, p - 2, p); }

// Reduction modulo p. Below 2^25 a floating reciprocal replaces the division,
// and sums of up to eight products of residues stay below 2^53.
struct Modulus {
    std::uint64_t p;
    double inv;
    bool lazy;

    explicit Modulus(std::uint64_t prime) : p(prime), inv(1.0 / static_cast<double>(prime)), lazy(prime < (1u << 25)) {
        if (prime < 2 || prime >= (std::uint64_t(1) << 32)) throw DomainError("modulus must be a prime below 2^32");
    }

    std::uint64_t reduce(std::uint64_t x) const {
        if (!lazy) return x % p;
        auto q = static_cast<std::uint64_t>(static_cast<double>(x) * inv);
        auto r = static_cast<std::int64_t>(x - q * p);
        while (r < 0) r += static_cast<std::int64_t>(p);
        while (r >= static_cast<std::int64_t>(p)) r -= static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r);
    }
};

// Ascending coefficients c[0..n-1]; n == 0 is the zero polynomial.
struct Poly {
    std::array<std::uint64_t, 2 * kMaxDegree + 1> c{};
    int n = 0;

    int deg() const { return n - 1; }
    std::uint64_t lead() const { return c[static_cast<std::size_t>(n - 1)]; }
    void trim() {
        while (n > 0 && c[static_cast<std::size_t>(n - 1)] == 0) --n;
    }
    static Poly x() {
        Poly r;
        r.c[1] = 1;
        r.n = 2;
        return r;
    }
    static Poly constant(std::uint64_t v) {
        Poly r;
        r.c[0] = v;
        r.n = v ? 1 : 0;
        return r;
    }
};

inline Poly reduce(const IntPoly& f, std::uint64_t p) {
    if (f.degree() > kMaxDegree) throw DomainError("mod-p arithmetic supports degree <= 8");
    Poly out;
    const BigInt bp = p;
    for (int k = 0; k <= f.degree(); ++k) {
        BigInt r = f[static_cast<std::size_t>(k)] % bp;
        if (r < 0) r += bp;
        out.c[static_cast<std::size_t>(k)] = r.convert_to<std::uint64_t>();
    }
    out.n = f.degree() + 1;
    out.trim();
    return out;
}

// Same, from coefficients already known to fit in machine integers.
inline Poly reduce(const std::vector<long long>& ascending, std::uint64_t p) {
    Poly out;
    const auto sp = static_cast<long long>(p);
    for (std::size_t k = 0; k < ascending.size(); ++k) {
        long long r = ascending[k] % sp;
        out.c[k] = static_cast<std::uint64_t>(r < 0 ? r + sp : r);
    }
    out.n = static_cast<int>(ascending.size());
    out.trim();
    return out;
}

// a mod m for monic or general m.
inline Poly remainder(Poly a, const Poly& m, const Modulus& md) {
    const int dm = m.deg();
    if (dm < 0) throw DomainError("polynomial division by zero");
    const std::uint64_t p = md.p;
    const std::uint64_t inv = m.lead() == 1 ? 1 : inverse(m.lead(), p);
    for (int k = a.deg(); k >= dm; --k) {
        std::uint64_t top = md.reduce(a.c[static_cast<std::size_t>(k)]);
        if (top == 0) continue;
        std::uint64_t factor = inv == 1 ? top : top * inv % p;
        std::uint64_t neg = p - factor;
        for (int j = 0; j < dm; ++j) {
            std::size_t idx = static_cast<std::size_t>(k - dm + j);
            a.c[idx] = md.reduce(a.c[idx] + neg * m.c[static_cast<std::size_t>(j)]);
        }
        a.c[static_cast<std::size_t>(k)] = 0;
    }
    a.n = std::min(a.n, dm);
    for (int k = 0; k < a.n; ++k) a.c[static_cast<std::size_t>(k)] = md.reduce(a.c[static_cast<std::size_t>(k)]);
    a.trim();
    return a;
}

inline Poly quotient(Poly a, const Poly& m, const Modulus& md) {
    const int dm = m.deg();
    Poly q;
    if (a.deg() < dm) return q;
    const std::uint64_t p = md.p;
    const std::uint64_t inv = inverse(m.lead(), p);
    q.n = a.deg() - dm + 1;
    for (int k = a.deg(); k >= dm; --k) {
        std::uint64_t factor = md.reduce(a.c[static_cast<std::size_t>(k)]) * inv % p;
        q.c[static_cast<std::size_t>(k - dm)] = factor;
        std::uint64_t neg = p - factor;
        for (int j = 0; j <= dm; ++j) {
            std::size_t idx = static_cast<std::size_t>(k - dm + j);
            a.c[idx] = md.reduce(a.c[idx] + neg * m.c[static_cast<std::size_t>(j)]);
        }
    }
    q.trim();
    return q;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Modulus& md) {
    Poly r;
    if (a.n == 0 || b.n == 0) return r;
    r.n = a.n + b.n - 1;
    for (int i = 0; i < a.n; ++i) {
        const std::uint64_t ai = a.c[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < b.n; ++j) {
            std::uint64_t& slot = r.c[static_cast<std::size_t>(i + j)];
            slot += ai * b.c[static_cast<std::size_t>(j)];
            if (!md.lazy) slot %= md.p;
        }
    }
    for (int k = 0; k < r.n; ++k) r.c[static_cast<std::size_t>(k)] = md.reduce(r.c[static_cast<std::size_t>(k)]);
    return remainder(r, m, md);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, const Modulus& md) {
    Poly r = remainder(Poly::constant(1), m, md);
    base = remainder(base, m, md);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, md);
        e >>= 1;
        if (e) base = mulmod(base, base, m, md);
    }
    return r;
}

// g(h) mod m by Horner's rule.
inline Poly compose(const Poly& g, const Poly& h, const Poly& m, const Modulus& md) {
    Poly r;
    for (int k = g.deg(); k >= 0; --k) {
        r = mulmod(r, h, m, md);
        if (r.n == 0) r.n = 1;
        r.c[0] = (r.c[0] + g.c[static_cast<std::size_t>(k)]) % md.p;
        r.trim();
    }
    return r;
}

inline Poly make_monic(Poly a, const Modulus& md) {
    a.trim();
    if (a.n == 0 || a.lead() == 1) return a;
    std::uint64_t inv = inverse(a.lead(), md.p);
    for (int k = 0; k < a.n; ++k) a.c[static_cast<std::size_t>(k)] = a.c[static_cast<std::size_t>(k)] * inv % md.p;
    return a;
}

inline Poly gcd(Poly a, Poly b, const Modulus& md) {
    a.trim();
    b.trim();
    while (b.n != 0) {
        Poly r = remainder(a, b, md);
        a = b;
        b = r;
    }
    return make_monic(a, md);
}

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    a.n = std::max(a.n, b.n);
    for (int k = 0; k < b.n; ++k) {
        std::size_t i = static_cast<std::size_t>(k);
        a.c[i] = (a.c[i] + p - b.c[i]) % p;
    }
    a.trim();
    return a;
}

// Distinct-degree factorization of a monic g with multiplicities. Appends
// (degree, multiplicity) pairs; `squarefree` enables the early exit that
// treats a remaining factor of degree < 2(i+1) as irreducible.
inline void factor_shape(Poly g, const Modulus& md, bool squarefree, std::vector<PrimeFactor>& out) {
    const Poly x = Poly::x();
    const Poly h1 = powmod(x, md.p, g, md);  // x^p mod g
    Poly h = h1;                               // x^(p^i) mod g
    for (int i = 1; g.deg() > 0; ++i) {
        if (i > 1) h = compose(h1, h, g, md);
        if (squarefree && g.deg() < 2 * i) {
            out.push_back({g.deg(), 1});
            break;
        }
        Poly d = gcd(g, sub(h, x, md.p), md);
        if (d.deg() <= 0) continue;
        // d holds each remaining irreducible factor of degree i once; peel
        // layers to count multiplicities.
        std::array<int, kMaxDegree + 1> at_least{};
        int layers = 0;
        Poly layer = d;
        while (layer.deg() > 0) {
            at_least[static_cast<std::size_t>(layers++)] = layer.deg() / i;
            g = quotient(g, layer, md);
            layer = gcd(g, layer, md);
        }
        for (int k = 0; k < layers; ++k) {
            int exact = at_least[static_cast<std::size_t>(k)] - (k + 1 < layers ? at_least[static_cast<std::size_t>(k + 1)] : 0);
            for (int c = 0; c < exact; ++c) out.push_back({i, k + 1});
        }
        if (g.deg() > 0) h = remainder(h, g, md);
    }
}

}  // namespace modp

// Irreducible factors of f mod p as (degree, multiplicity) pairs. The leading
// coefficient of f must be prime to p.
inline SplittingType factor_shape_mod_p(const modp::Poly& reduced, int degree, std::uint64_t p,
                                        bool known_squarefree) {
    modp::Modulus md(p);
    if (reduced.deg() != degree) throw DomainError("factor_shape_mod_p: leading coefficient divisible by p");
    modp::Poly g = modp::make_monic(reduced, md);
    SplittingType out{p, {}};
    modp::factor_shape(g, md, known_squarefree, out.factors);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

inline SplittingType factor_shape_mod_p(const IntPoly& f, std::uint64_t p, bool known_squarefree = false) {
    return factor_shape_mod_p(modp::reduce(f, p), f.degree(), p, known_squarefree);
}

}  // namespace orbivol
