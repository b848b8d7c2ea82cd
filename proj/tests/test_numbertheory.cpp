#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "orbivol/number_field.hpp"
#include "orbivol/primes.hpp"
#include "orbivol/zeta.hpp"

using namespace orbivol;

namespace {

constexpr int kDigits = 30;

std::string data_path(const std::string& name) { return std::string(ORBIVOL_TEST_DATA_DIR) + "/" + name; }

std::vector<PrimeFactor> shape(std::initializer_list<PrimeFactor> f) {
    std::vector<PrimeFactor> v(f);
    std::sort(v.begin(), v.end());
    return v;
}

// Distinct roots of f in F_p by exhaustion.
int root_count(const IntPoly& f, std::uint64_t p) {
    int count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        BigInt v = poly_eval(f, BigInt(x)) % p;
        if (v == 0) ++count;
    }
    return count;
}

// Euler's criterion.
int legendre_euler(long long a, long long p) {
    long long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    std::uint64_t e = modp::power(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2),
                                  static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

}  // namespace

TEST(Primes, Sieve) {
    EXPECT_EQ(primes_up_to(1'000'000).size(), 78498u);
    EXPECT_EQ(primes_up_to(2), (std::vector<std::uint64_t>{2}));
    EXPECT_THROW(primes_up_to(1), DomainError);
    EXPECT_TRUE(is_prime(999983));
    EXPECT_FALSE(is_prime(999981));
    EXPECT_EQ(prime_divisors(475), (std::vector<std::uint64_t>{5, 19}));
}

TEST(Polynomials, DiscriminantsAreExact) {
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, 0, -1, 0, -1})), BigInt(-400));
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, -1, -1})), BigInt(5));
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, -1, 0, 2, -1})), BigInt(-275));
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, -2, 1, -2, 1})), BigInt(-448));
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, -1, -2, -2, -1})), BigInt(-475));
    // Cubic oracle: disc(x^3 + a x + b) = -4a^3 - 27b^2.
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, 0, -7, 3})), BigInt(-4 * (-343) - 27 * 9));
    // Large coefficients stay exact.
    EXPECT_EQ(poly_disc(IntPoly::from_descending({1, 0, -1000000007})), BigInt(4) * 1000000007);
}

TEST(Polynomials, Irreducibility) {
    EXPECT_TRUE(irreducible_small(IntPoly::from_descending({1, 0, -1, 0, -1})));
    EXPECT_FALSE(irreducible_small(IntPoly::from_descending({1, 0, 0, 0, -1})));
    EXPECT_FALSE(irreducible_small(IntPoly::from_descending({1, 0, -5, 0, 6})));  // (x^2-2)(x^2-3)
    EXPECT_EQ(real_root_count(IntPoly::from_descending({1, 0, -1, 0, -1})), 2);
    EXPECT_EQ(real_root_count(IntPoly::from_descending({1, 0, -5, 0, 6})), 4);
}

TEST(Splitting, KnownShapes) {
    const IntPoly k0 = IntPoly::from_descending({1, -1, -1});
    EXPECT_EQ(factor_shape_mod_p(k0, 11).factors, shape({{1, 1}, {1, 1}}));
    EXPECT_EQ(factor_shape_mod_p(k0, 2).factors, shape({{2, 1}}));
    EXPECT_EQ(factor_shape_mod_p(k0, 5).factors, shape({{1, 2}}));
    const IntPoly l2 = IntPoly::from_descending({1, 0, -1, 0, -1});
    EXPECT_EQ(factor_shape_mod_p(l2, 5).factors, shape({{2, 2}}));
    // x^4 - 1 = (x-1)(x+1)(x^2+1) mod 7
    EXPECT_EQ(factor_shape_mod_p(IntPoly::from_descending({1, 0, 0, 0, -1}), 7).factors, shape({{1, 1}, {1, 1}, {2, 1}}));
    // (x-1)^3 (x+1) mod 3
    EXPECT_EQ(factor_shape_mod_p(IntPoly::from_descending({1, -2, 0, 2, -1}), 3).factors, shape({{1, 1}, {1, 3}}));
}

TEST(Splitting, LinearFactorsMatchRootCount) {
    for (const auto& f : builtin_fields()) {
        for (std::uint64_t p : primes_up_to(400)) {
            if (f.poly_discriminant % p == 0) continue;
            auto s = factor_degrees_mod_p(f, p);
            EXPECT_EQ(s.total_degree(), f.degree());
            int linear = static_cast<int>(std::count_if(s.factors.begin(), s.factors.end(),
                                                        [](const PrimeFactor& x) { return x.residue_degree == 1; }));
            EXPECT_EQ(linear, root_count(f.poly, p)) << f.label << " mod " << p;
        }
    }
}

TEST(Splitting, LargePrimesSquarefreeFlag) {
    const auto& l0 = builtin_field("l0");
    for (std::uint64_t p : {9999991ull, 4294967291ull}) {
        auto fast = factor_degrees_mod_p(l0, p);
        auto slow = factor_shape_mod_p(l0.poly, p, false);
        EXPECT_EQ(fast.factors, slow.factors) << p;
    }
    EXPECT_THROW(modp::Modulus(std::uint64_t(1) << 33), DomainError);
}

TEST(Fields, BuiltinsValidate) {
    for (const auto& f : builtin_fields()) {
        EXPECT_TRUE(f.monogenic) << f.label;
        EXPECT_EQ(abs(f.poly_discriminant), f.abs_disc) << f.label;
    }
    EXPECT_THROW(builtin_field("nope"), DependencyError);
}

TEST(Fields, ValidationFailures) {
    EXPECT_THROW(make_field("r", {1, 0, 0, 0, -1}, 2, 1, 256), ValidationError);   // reducible
    EXPECT_THROW(make_field("s", {1, 0, -1, 0, -1}, 4, 0, 400), ValidationError);  // signature
    EXPECT_THROW(make_field("d", {1, 0, -1, 0, -1}, 2, 1, 300), ValidationError);  // discriminant
    EXPECT_THROW(make_field("m", {2, 0, -1}, 2, 0, 8), ValidationError);           // not monic
    EXPECT_THROW(make_field("h", {1, -1, -1}, 2, 0, 5, 0), ValidationError);       // class number
}

TEST(Fields, NonMonogenicRefusal) {
    // Z[sqrt5] has index 2 in the ring of integers of Q(sqrt5).
    auto f = make_field("q5", {1, 0, -5}, 2, 0, 5);
    EXPECT_FALSE(f.monogenic);
    EXPECT_EQ(f.index, 2);
    EXPECT_THROW(dedekind_zeta_euler(f, 2, 1000), DomainError);
    EXPECT_THROW(factor_degrees_mod_p(f, 2), DomainError);
    EXPECT_NO_THROW(factor_degrees_mod_p(f, 3));
}

TEST(Fields, JsonDataMatchesBuiltins) {
    auto loaded = load_fields(std::string(ORBIVOL_DATA_DIR) + "/fields.json");
    ASSERT_EQ(loaded.size(), builtin_fields().size());
    for (const auto& b : builtin_fields()) {
        const NumberField* f = find_field(loaded, b.label);
        ASSERT_NE(f, nullptr) << b.label;
        EXPECT_EQ(f->poly, b.poly);
        EXPECT_EQ(f->r1, b.r1);
        EXPECT_EQ(f->r2, b.r2);
        EXPECT_EQ(f->abs_disc, b.abs_disc);
        EXPECT_EQ(f->class_number, b.class_number);
    }
}

TEST(Fields, JsonErrors) {
    auto extra = load_fields(data_path("fields_extra.json"));
    ASSERT_EQ(extra.size(), 2u);
    EXPECT_EQ(extra[0].label, "q3");
    EXPECT_TRUE(extra[0].monogenic);
    EXPECT_THROW(load_fields(data_path("fields_bad_signature.json")), ValidationError);
    EXPECT_THROW(parse_fields_json("{\"fields\": [ {\"label\": 1"), ParseError);
    EXPECT_THROW(parse_fields_json("[{\"label\": \"x\"}]"), ValidationError);
    EXPECT_THROW(load_fields(data_path("missing.json")), ConfigError);
}

TEST(Characters, KroneckerAgainstEuler) {
    for (long long p : {3LL, 7LL, 11LL, 19LL, 101LL, 997LL})
        for (long long a = -50; a <= 50; ++a) EXPECT_EQ(kronecker(a, p), legendre_euler(a, p)) << a << "/" << p;
    // (D/2) from D mod 8.
    EXPECT_EQ(kronecker(5, 2), -1);
    EXPECT_EQ(kronecker(17, 2), 1);
    EXPECT_EQ(kronecker(8, 2), 0);
    EXPECT_EQ(kronecker(5, 10), 0);
    EXPECT_THROW(kronecker(3, 0), DomainError);
    EXPECT_TRUE(is_fundamental(5));
    EXPECT_TRUE(is_fundamental(8));
    EXPECT_TRUE(is_fundamental(-4));
    EXPECT_FALSE(is_fundamental(20));
    EXPECT_FALSE(is_fundamental(3));
}

TEST(Zeta, HurwitzAgainstDirectSum) {
    WorkingPrecision p(kDigits);
    const Real a = Real("0.3");
    const int N = 20000;
    Real sum = 0;
    for (int k = 0; k < N; ++k) sum += 1 / elem::pow(Real(k) + a, 3);
    const Real x = N + a;
    sum += 1 / (2 * x * x) + 1 / (2 * elem::pow(x, 3)) + Real(1) / (4 * elem::pow(x, 4));
    EXPECT_LT(elem::abs(hurwitz_zeta(3, a) - sum), pow10(-24));
    EXPECT_LT(elem::abs(hurwitz_zeta(2, Real(1)) - zeta_int(2)), pow10(-kDigits));
    EXPECT_THROW(hurwitz_zeta(1, a), DomainError);
}

TEST(Zeta, CatalanConstant) {
    WorkingPrecision p(kDigits);
    EXPECT_LT(elem::abs(dirichlet_L_quadratic(-4, 2) - Real("0.9159655941772190150546035149324")), pow10(-kDigits));
    EXPECT_THROW(dirichlet_L_quadratic(20, 2), DomainError);
}

TEST(Zeta, QuadraticCrossMethod) {
    WorkingPrecision p(kDigits);
    const auto& k0 = builtin_field("k0");
    for (int s : {2, 3, 4}) {
        Real exact = dedekind_zeta_quadratic(5, s);
        auto euler = dedekind_zeta_euler(k0, s, 1'000'000);
        EXPECT_LE(elem::abs(exact - euler.value), euler.tail_bound) << "s = " << s;
    }
    EXPECT_EQ(to_decimal(dedekind_zeta_quadratic(5, 2), 25), "1.161671195618638549758583");
}

TEST(Zeta, TailBoundHonesty) {
    WorkingPrecision p(kDigits);
    for (const char* label : {"l2", "l0"}) {
        const auto& f = builtin_field(label);
        auto a = dedekind_zeta_euler(f, 3, 200'000);
        auto b = dedekind_zeta_euler(f, 3, 400'000);
        EXPECT_LE(elem::abs(a.value - b.value), a.tail_bound) << label;
        EXPECT_LT(b.tail_bound, a.tail_bound);
    }
    EXPECT_THROW(euler_log_tail(2, 3, 10), DomainError);
    EXPECT_THROW(dedekind_zeta_euler(builtin_field("l2"), 1, 1000), DomainError);
}

TEST(RelativeL, ElementArithmetic) {
    QuadraticRing ring(builtin_field("k0"));
    auto beta = ring.from_descriptor({-1, 2, 1});  // -1 + 2 sqrt5
    EXPECT_EQ(ring.norm(beta), -19);
    EXPECT_EQ(ring.trace(beta), -2);
    auto theta = ring.from_descriptor({1, 1, 2});  // (1 + sqrt5)/2
    EXPECT_EQ(ring.norm(theta), -1);
    EXPECT_TRUE(ring.is_square(ring.mul(theta, theta)));
    EXPECT_TRUE(ring.is_square({5, 0}));
    EXPECT_FALSE(ring.is_square(theta));
    EXPECT_FALSE(ring.is_square(beta));
}

TEST(RelativeL, CharactersMatchQuarticSplitting) {
    const auto& k0 = builtin_field("k0");
    const auto& l475 = builtin_field("l475");
    QuadraticRing ring(k0);
    auto beta = ring.from_descriptor({-1, 2, 1});
    int ramified = 0;
    for (std::uint64_t p : primes_up_to(3000)) {
        std::multiset<std::pair<int, int>> expected;  // (f, e) over Q of the primes of l
        for (const auto& c : local_characters(ring, beta, p)) {
            int f = c.norm == p ? 1 : 2;
            int e_k = (p == 5) ? 2 : 1;
            if (c.chi == 1) {
                expected.insert({f, e_k});
                expected.insert({f, e_k});
            } else if (c.chi == -1) {
                expected.insert({2 * f, e_k});
            } else {
                expected.insert({f, 2 * e_k});
                ++ramified;
            }
        }
        std::multiset<std::pair<int, int>> actual;
        for (const auto& x : factor_degrees_mod_p(l475, p).factors) actual.insert({x.residue_degree, x.ramification});
        EXPECT_EQ(actual, expected) << "p = " << p;
    }
    EXPECT_EQ(ramified, 1);  // only the prime above 19
    auto at19 = local_characters(ring, beta, 19);
    ASSERT_EQ(at19.size(), 2u);
    EXPECT_EQ(std::count_if(at19.begin(), at19.end(), [](const LocalCharacter& c) { return c.chi == 0; }), 1);
}

TEST(RelativeL, ThetaRamifiesOnlyAtTwo) {
    QuadraticRing ring(builtin_field("k0"));
    auto theta = ring.from_descriptor({1, 1, 2});
    std::map<std::uint64_t, int> ramified;
    for (std::uint64_t p : primes_up_to(2000))
        for (const auto& c : local_characters(ring, theta, p))
            if (c.chi == 0) ++ramified[p];
    EXPECT_EQ(ramified, (std::map<std::uint64_t, int>{{2, 1}}));
}

TEST(RelativeL, AgreesWithFieldQuotient) {
    WorkingPrecision p(kDigits);
    const auto& k0 = builtin_field("k0");
    auto direct = relative_L(k0, {-1, 2, 1}, 3, 100'000);
    auto quotient = relative_L_quotient(builtin_field("l475"), k0, 3, 100'000);
    EXPECT_LT(elem::abs(direct.value - quotient.value), pow10(-kDigits + 2));
    auto theta = relative_L(k0, {1, 1, 2}, 3, 100'000);
    auto l2 = relative_L_quotient(builtin_field("l2"), k0, 3, 100'000);
    EXPECT_LT(elem::abs(theta.value - l2.value), pow10(-kDigits + 2));
    EXPECT_LE(elem::abs(theta.value - Real("0.99074343959987163366")), theta.tail_bound);
}

TEST(RelativeL, Errors) {
    WorkingPrecision p(kDigits);
    const auto& k0 = builtin_field("k0");
    EXPECT_THROW(relative_L(k0, {1, 1, 2}, 1, 1000), DomainError);
    EXPECT_THROW(relative_L(k0, {4, 0, 1}, 3, 1000), DomainError);  // square
    EXPECT_THROW(relative_L(k0, {1, 1, 0}, 3, 1000), DomainError);
    EXPECT_THROW(relative_L_quotient(builtin_field("l448"), k0, 3, 1000), DomainError);
    EXPECT_THROW(QuadraticRing(builtin_field("l2")), DomainError);
}

TEST(RelativeL, LargeRamifiedPrimeIsInconclusive) {
    WorkingPrecision p(kDigits);
    // Q(sqrt 3001): the ramified prime is too large for the exhaustive local test.
    auto k = make_field("k3001", {1, -1, -750}, 2, 0, 3001);
    EXPECT_NO_THROW(relative_L(k, {2, 0, 1}, 3, 2000));
    EXPECT_THROW(relative_L(k, {2, 0, 1}, 3, 5000), InconclusiveError);
}
