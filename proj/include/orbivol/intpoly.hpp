#pragma once

// Exact integer polynomials: discriminant by resultant, small-degree
// irreducibility and real-root counting. No floating point anywhere.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "orbivol/error.hpp"

namespace orbivol {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// Coefficients in ascending order: coeffs[k] multiplies x^k.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

    // From coefficients written the usual way, leading coefficient first.
    static IntPoly from_descending(const std::vector<long long>& descending) {
        std::vector<BigInt> c(descending.rbegin(), descending.rend());
        return IntPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<BigInt>& coefficients() const { return c_; }
    const BigInt& leading() const { return c_.back(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
        return IntPoly(std::move(d));
    }

    std::vector<long long> descending() const {
        std::vector<long long> out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->convert_to<long long>());
        return out;
    }

    std::string str() const {
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& a = c_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            BigInt mag = abs(a);
            s += (a < 0) ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
            if (mag != 1 || k == 0) s += mag.str();
            if (k >= 1) s += "x";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Resultant via the Sylvester matrix.
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) return 1;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(n - k)];
    return bareiss_determinant(std::move(s));
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline BigInt poly_disc(const IntPoly& f) {
    const int n = f.degree();
    if (n < 2) throw DomainError("poly_disc: degree " + std::to_string(n) + " < 2");
    BigInt r = resultant(f, f.derivative());
    BigInt d = r / f.leading();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

inline BigInt poly_eval(const IntPoly& f, const BigInt& x) {
    BigInt acc = 0;
    for (int k = f.degree(); k >= 0; --k) acc = acc * x + f[static_cast<std::size_t>(k)];
    return acc;
}

inline std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    if (n == 0) return out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

inline bool has_rational_root(const IntPoly& f) {
    if (f.degree() < 1) return false;
    if (f[0] == 0) return true;
    // Monic: rational roots are integer divisors of the constant term.
    if (!f.monic()) throw DomainError("rational root test expects a monic polynomial");
    for (const auto& d : divisors(f[0])) {
        if (poly_eval(f, d) == 0 || poly_eval(f, BigInt(-d)) == 0) return true;
    }
    return false;
}

// Monic quartic splits as (x^2 + p x + q)(x^2 + r x + s) over Z.
inline bool has_quadratic_factor(const IntPoly& f) {
    if (f.degree() != 4 || !f.monic()) return false;
    const BigInt a = f[3], b = f[2], c = f[1], d = f[0];
    if (d == 0) return true;
    for (const auto& qa : divisors(d)) {
        for (const BigInt q : {BigInt(qa), BigInt(-qa)}) {
            BigInt s = d / q;
            // p + r = a, p r = b - q - s
            BigInt pr = b - q - s;
            BigInt disc = a * a - 4 * pr;
            if (disc < 0) continue;
            BigInt root = sqrt(disc);
            if (root * root != disc) continue;
            for (const BigInt sgn : {BigInt(1), BigInt(-1)}) {
                BigInt twice_p = a + sgn * root;
                if (twice_p % 2 != 0) continue;
                BigInt p = twice_p / 2, r = a - p;
                if (p * s + q * r == c) return true;
            }
        }
    }
    return false;
}

// Irreducibility over Q for monic polynomials of degree <= 4.
inline bool irreducible_small(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1 || n > 4) throw DomainError("irreducibility check supports degrees 1..4");
    if (n == 1) return true;
    if (has_rational_root(f)) return false;
    if (n <= 3) return true;
    return !has_quadratic_factor(f);
}

namespace detail {

using QPoly = std::vector<BigRational>;  // ascending

inline void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qrem(QPoly a, const QPoly& b) {
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

inline int sign_at_infinity(const QPoly& p, bool positive) {
    if (p.empty()) return 0;
    int s = p.back() > 0 ? 1 : -1;
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

}  // namespace detail

// Number of distinct real roots, by a Sturm sequence over Q.
inline int real_root_count(const IntPoly& f) {
    using namespace detail;
    QPoly p0(f.coefficients().begin(), f.coefficients().end());
    IntPoly df = f.derivative();
    QPoly p1(df.coefficients().begin(), df.coefficients().end());
    std::vector<QPoly> seq{p0, p1};
    while (true) {
        QPoly r = qrem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    auto variations = [&](bool positive) {
        int count = 0, last = 0;
        for (const auto& p : seq) {
            int s = sign_at_infinity(p, positive);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

}  // namespace orbivol
