#include <gtest/gtest.h>

#include <cmath>

#include "orbivol/covolume.hpp"

using namespace orbivol;

namespace {

constexpr int kDigits = 30;
constexpr std::uint64_t kCutoff = 1'000'000;

// Values at cutoff 10^7 and their certified tails (about 1e-17).
const char* const kGamma0 = "0.0015345923602061541131";
const char* const kGamma2 = "0.0039693928606232986313";
const char* const k448 = "0.0049977940125879720499";
const char* const k475 = "0.0060941970748183545581";

}  // namespace

TEST(Constants, PrasadFactors) {
    WorkingPrecision p(kDigits);
    auto k = PrasadConstants::current();
    EXPECT_NEAR(k.C.convert_to<double>() / (3.0 / 128.0 / std::pow(M_PI, 9)), 1.0, 1e-14);
    EXPECT_NEAR(k.a.convert_to<double>() / (27.0 / 16.0 / std::pow(M_PI, 11)), 1.0, 1e-14);
    EXPECT_NEAR(k.hyperbolic_factor.convert_to<double>(), 2 * std::pow(M_PI, 3), 1e-12);
}

TEST(Principal, UnitInputs) {
    WorkingPrecision p(kDigits);
    auto k = PrasadConstants::current();
    Real one = 1;
    EXPECT_EQ(principal_mu_covolume(2, one, one, one, one, one), k.C * k.C);
    EXPECT_LT(elem::abs(principal_mu_covolume(3, Real(4), one, one, one, one) / (elem::pow(k.C, 3) * elem::pow(Real(2), 15)) - 1),
              pow10(-kDigits));
    EXPECT_THROW(principal_mu_covolume(1, one, one, one, one, one), DomainError);
    EXPECT_THROW(principal_mu_covolume(2, one, one, one, Real(0), one), DomainError);
}

TEST(Cases, Definitions) {
    auto g2 = lattice_case(CaseLabel::Gamma2);
    EXPECT_EQ(g2.D_k * g2.D_k * g2.D_rel, 400);
    auto g0 = lattice_case(CaseLabel::Gamma0);
    EXPECT_EQ(g0.D_k * g0.D_k * g0.D_rel, 275);
    auto c448 = lattice_case(CaseLabel::Case448);
    EXPECT_EQ(c448.D_k * c448.D_k * c448.D_rel, 448);
    EXPECT_EQ(parse_case("475"), CaseLabel::Case475);
    EXPECT_THROW(parse_case("gamma3"), ValidationError);
}

TEST(Cases, ValuesAtModerateCutoff) {
    WorkingPrecision p(kDigits);
    struct Row {
        CaseLabel label;
        const char* reference;
    };
    for (const auto& row : {Row{CaseLabel::Gamma0, kGamma0}, Row{CaseLabel::Gamma2, kGamma2}, Row{CaseLabel::Case448, k448},
                            Row{CaseLabel::Case475, k475}}) {
        auto r = hyperbolic_covolume(row.label, kCutoff);
        EXPECT_LE(elem::abs(r.hyperbolic_covolume - Real(row.reference)), r.tail_bound + Real("1e-19"))
            << to_string(row.label);
        EXPECT_LT(r.tail_bound, Real("1e-14"));
        EXPECT_EQ(r.provenance.size(), 3u);
    }
}

TEST(Cases, MultiplicityAndOrdering) {
    WorkingPrecision p(kDigits);
    auto g0 = hyperbolic_covolume(CaseLabel::Gamma0, kCutoff);
    auto g1 = hyperbolic_covolume(CaseLabel::Gamma1, kCutoff);
    auto g2 = hyperbolic_covolume(CaseLabel::Gamma2, kCutoff);
    EXPECT_EQ(g1.hyperbolic_covolume, 2 * g0.hyperbolic_covolume);
    EXPECT_LT(g0.hyperbolic_covolume, g1.hyperbolic_covolume);
    EXPECT_LT(g1.hyperbolic_covolume, g2.hyperbolic_covolume);
    EXPECT_LT(g2.hyperbolic_covolume, case_covolume_448(kCutoff));
    EXPECT_LT(case_covolume_448(kCutoff), case_covolume_475(kCutoff));
    EXPECT_GT(case_covolume_448(kCutoff), sieve_threshold());
    EXPECT_GT(case_covolume_475(kCutoff), sieve_threshold());
}

TEST(Cases, ClosedFormMatchesAssembly) {
    WorkingPrecision p(kDigits);
    auto r = hyperbolic_covolume(CaseLabel::Gamma0, kCutoff);
    const Real z2 = r.provenance[0].value, z4 = r.provenance[1].value, L = r.provenance[2].value;
    EXPECT_LT(elem::abs(gamma0_closed_form(z2, z4, L) / r.hyperbolic_covolume - 1), pow10(-kDigits + 1));
}

TEST(Cases, TableRelationWithPrisms) {
    WorkingPrecision p(kDigits);
    auto g0 = hyperbolic_covolume(CaseLabel::Gamma0, kCutoff);
    auto g2 = hyperbolic_covolume(CaseLabel::Gamma2, kCutoff);
    auto p0 = prism::polytope_volume(prism::Polytope::P0);
    auto p1 = prism::polytope_volume(prism::Polytope::P1);
    auto p2 = prism::polytope_volume(prism::Polytope::P2);
    EXPECT_LE(elem::abs(g0.hyperbolic_covolume - 2 * p0.value), g0.tail_bound);
    EXPECT_LE(elem::abs(g0.hyperbolic_covolume - p1.value), g0.tail_bound);
    EXPECT_LE(elem::abs(g2.hyperbolic_covolume - 2 * p2.value), g2.tail_bound);
}

TEST(Cases, MissingOrInconsistentFieldData) {
    WorkingPrecision p(kDigits);
    std::vector<NumberField> only_k0 = {builtin_field("k0")};
    EXPECT_THROW(hyperbolic_covolume(lattice_case(CaseLabel::Gamma0), 10'000, only_k0), DependencyError);
    auto wrong = lattice_case(CaseLabel::Gamma0);
    wrong.D_rel = 12;
    EXPECT_THROW(hyperbolic_covolume(wrong, 10'000, builtin_fields()), DependencyError);
}

TEST(Bounds, SieveValues) {
    WorkingPrecision p(kDigits);
    const double pi = M_PI;
    const double a = 27.0 / 16.0 / std::pow(pi, 11);
    const double h = 2 * std::pow(pi, 3);
    EXPECT_NEAR(bound_deg_ge7().convert_to<double>(), h / 32 * std::pow(std::pow(9.3, 5.5) * a, 7), 1e-9);
    // Printed as 7.657... (truncated); the exact value is 7.65754...
    EXPECT_EQ(to_decimal(bound_deg_ge7(), 10), "7.657542711");
    EXPECT_NEAR(bound_disc(2, Real(27)).convert_to<double>(), h / 32 * std::pow(27.0, 5.5) * a * a, 1e-15);
    EXPECT_GT(bound_disc(2, Real(27)), sieve_threshold());
    EXPECT_LT(bound_disc(2, Real(26)), sieve_threshold());
    EXPECT_GT(bound_disc_pair(2, Real(5), Real(2000)), bound_disc_pair(2, Real(5), Real(1000)));
    EXPECT_GT(bound_classno(2, Real(5), Real(475), 1), bound_classno(2, Real(5), Real(475), 2));
    EXPECT_THROW(bound_disc(1, Real(5)), DomainError);
    EXPECT_THROW(bound_classno(2, Real(5), Real(475), 0), DomainError);
}

TEST(Identity, MatchedDigits) {
    WorkingPrecision p(kDigits);
    EXPECT_EQ(matched_digits(Real(1), Real(1)), kDigits);
    EXPECT_EQ(matched_digits(Real(1), Real("1.000001")), 5);
    EXPECT_EQ(matched_digits(Real(1), Real(3)), 0);
}

TEST(Identity, DegradedAtSmallCutoff) {
    WorkingPrecision p(kDigits);
    auto v = verify_identity(Identity::Gamma0_P0, 11, 100'000);
    EXPECT_GE(v.matched_digits, 11);
    EXPECT_LT(v.achievable_digits, 11);
    EXPECT_TRUE(v.degraded);
    EXPECT_GE(v.matched_digits, v.achievable_digits);
    EXPECT_EQ(v.provenance.size(), 4u);
    EXPECT_EQ(parse_identity("Gamma2_P2"), Identity::Gamma2_P2);
    EXPECT_THROW(parse_identity("gamma1"), ValidationError);
}
