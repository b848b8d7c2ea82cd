#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <mutex>
#include <vector>

namespace orbivol {

using Rational = boost::multiprecision::mpq_rational;

// Exact Bernoulli number B_n (convention B_1 = +1/2, irrelevant here since only
// even indices are used). Values are cached; the cache grows on demand.
inline Rational bernoulli(std::size_t n) {
    static std::mutex guard;
    static std::vector<Rational> cache;
    std::lock_guard<std::mutex> lock(guard);
    if (n < cache.size()) return cache[n];
    // Akiyama-Tanigawa: rebuild up to a comfortable bound.
    std::size_t upto = std::max<std::size_t>(n + 1, 2 * cache.size() + 16);
    std::vector<Rational> row(upto);
    std::vector<Rational> out(upto);
    for (std::size_t m = 0; m < upto; ++m) {
        row[m] = Rational(1, static_cast<long>(m + 1));
        for (std::size_t j = m; j >= 1; --j) row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
        out[m] = row[0];
    }
    cache = std::move(out);
    return cache[n];
}

}  // namespace orbivol
