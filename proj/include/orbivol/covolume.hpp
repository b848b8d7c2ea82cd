#pragma once

// Arithmetic covolumes of the principal lattices behind the three smallest
// compact arithmetic 5-orbifolds, the sieve bounds used to rule out other
// fields, and the comparison against the geometric prism volumes.
//
// With C = 3 2^-7 pi^-9 the principal covolume of Lambda in Spin(1,5) is
//   mu = D_k^7.5 (D_l / D_k^2)^2.5 C^d zeta_k(2) zeta_k(4) L_{l/k}(3),
// and the hyperbolic covolume of its normalizer is 2 pi^3 mu / [Gamma : Lambda].

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orbivol/error.hpp"
#include "orbivol/lobachevsky.hpp"
#include "orbivol/number_field.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/prism.hpp"
#include "orbivol/zeta.hpp"

namespace orbivol {

inline constexpr std::uint64_t kDefaultCutoff = 10'000'000;

// Every candidate covolume must exceed this to be excluded by the sieve.
inline Real sieve_threshold() { return Real(4) / 1000; }

struct PrasadConstants {
    Real C;                  // 3 2^-7 pi^-9
    Real a;                  // 3^3 2^-4 pi^-11
    Real hyperbolic_factor;  // 2 pi^3

    static PrasadConstants current() {
        const Real pi = const_pi();
        return {Real(3) / 128 / elem::pow(pi, 9), Real(27) / 16 / elem::pow(pi, 11), 2 * elem::pow(pi, 3)};
    }
};

inline Real principal_mu_covolume(int d, const Real& D_k, const Real& D_rel, const Real& z2, const Real& z4,
                                  const Real& L3) {
    if (d < 2) throw DomainError("principal_mu_covolume: degree " + std::to_string(d) + " < 2");
    if (D_k <= 0 || D_rel <= 0 || z2 <= 0 || z4 <= 0 || L3 <= 0)
        throw DomainError("principal_mu_covolume: inputs must be positive");
    const auto k = PrasadConstants::current();
    return elem::pow(D_k, Real(7.5)) * elem::pow(D_rel, Real(2.5)) * elem::pow(k.C, d) * z2 * z4 * L3;
}

enum class CaseLabel { Gamma0, Gamma1, Gamma2, Case448, Case475 };

inline std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::Gamma0: return "gamma0";
        case CaseLabel::Gamma1: return "gamma1";
        case CaseLabel::Gamma2: return "gamma2";
        case CaseLabel::Case448: return "448";
        case CaseLabel::Case475: return "475";
    }
    return "?";
}

inline CaseLabel parse_case(const std::string& s) {
    for (auto c : {CaseLabel::Gamma0, CaseLabel::Gamma1, CaseLabel::Gamma2, CaseLabel::Case448, CaseLabel::Case475})
        if (to_string(c) == s) return c;
    throw ValidationError("unknown case '" + s + "' (expected gamma0, gamma1, gamma2, 448 or 475)");
}

// How L_{l/k}(3) is obtained.
enum class LSource { FieldQuotient, Character };

struct LatticeCase {
    CaseLabel label;
    int d = 2;
    long long D_k = 0;
    long long D_rel = 0;  // D_l / D_k^2
    int index = 1;        // [Gamma : Lambda]
    std::string k_label;
    std::string l_label;        // FieldQuotient
    QuadDescriptor beta;        // Character: l = k(sqrt(beta))
    LSource source = LSource::FieldQuotient;
    int multiplicity = 1;       // Gamma1 = 2 Gamma0
};

inline LatticeCase lattice_case(CaseLabel c) {
    switch (c) {
        case CaseLabel::Gamma0: return {c, 2, 5, 11, 2, "k0", "l0", {}, LSource::FieldQuotient, 1};
        case CaseLabel::Gamma1: return {c, 2, 5, 11, 2, "k0", "l0", {}, LSource::FieldQuotient, 2};
        case CaseLabel::Gamma2: return {c, 2, 5, 16, 2, "k0", "l2", {}, LSource::FieldQuotient, 1};
        case CaseLabel::Case448: return {c, 2, 8, 7, 8, "k448", "l448", {}, LSource::FieldQuotient, 1};
        case CaseLabel::Case475: return {c, 2, 5, 19, 2, "k0", "", {-1, 2, 1}, LSource::Character, 1};
    }
    throw ValidationError("unknown lattice case");
}

struct ProvenanceEntry {
    std::string name;
    Real value;
    Real tail_bound;
    std::uint64_t cutoff = 0;  // 0: evaluated to full working precision
    std::string method;
};

struct CovolumeReport {
    CaseLabel label;
    Real mu_covolume;
    Real hyperbolic_covolume;
    Real tail_bound;
    std::vector<ProvenanceEntry> provenance;
};

namespace detail {

inline const NumberField& require_field(const std::vector<NumberField>& fields, const std::string& label) {
    const NumberField* f = find_field(fields, label);
    if (f == nullptr) throw DependencyError("field data for '" + label + "' is not available");
    return *f;
}

inline long long quadratic_discriminant(const NumberField& k) {
    if (k.degree() != 2 || !k.monogenic) throw DependencyError("field '" + k.label + "' is not a monogenic quadratic field");
    return k.abs_disc.convert_to<long long>();
}

// L-values are the expensive inputs and several cases share them; results are
// memoized per (inputs, cutoff, working precision).
template <class Compute>
EulerProductValue cached_L(const std::string& key, Compute compute) {
    static std::mutex guard;
    static std::map<std::string, EulerProductValue> cache;
    const std::string full = key + "@" + std::to_string(mpfr_get_default_prec());
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = cache.find(full);
        if (it != cache.end()) return it->second;
    }
    EulerProductValue v = compute();
    std::lock_guard<std::mutex> lock(guard);
    cache.emplace(full, v);
    return v;
}

}  // namespace detail

inline CovolumeReport hyperbolic_covolume(const LatticeCase& c, std::uint64_t cutoff,
                                          const std::vector<NumberField>& fields) {
    const NumberField& k = detail::require_field(fields, c.k_label);
    const long long D = detail::quadratic_discriminant(k);
    if (D != c.D_k) throw DependencyError("field '" + k.label + "' has discriminant " + std::to_string(D) +
                                          ", case expects " + std::to_string(c.D_k));
    CovolumeReport r{c.label, Real(0), Real(0), Real(0), {}};
    const Real z2 = dedekind_zeta_quadratic(D, 2);
    const Real z4 = dedekind_zeta_quadratic(D, 4);
    r.provenance.push_back({"zeta_" + k.label + "(2)", z2, Real(0), 0, "character sum of Hurwitz zeta values"});
    r.provenance.push_back({"zeta_" + k.label + "(4)", z4, Real(0), 0, "character sum of Hurwitz zeta values"});
    EulerProductValue L;
    if (c.source == LSource::FieldQuotient) {
        const NumberField& l = detail::require_field(fields, c.l_label);
        if (l.abs_disc != BigInt(c.D_k * c.D_k * c.D_rel))
            throw DependencyError("field '" + l.label + "' has discriminant " + l.abs_disc.str() +
                                  ", case expects " + std::to_string(c.D_k * c.D_k * c.D_rel));
        L = detail::cached_L(l.label + ":" + l.poly.str() + "/" + k.label + ":" + k.poly.str() + "/" +
                                 std::to_string(cutoff),
                             [&] { return relative_L_quotient(l, k, 3, cutoff); });
        r.provenance.push_back({"L_" + l.label + "/" + k.label + "(3)", L.value, L.tail_bound, cutoff,
                                "Euler product zeta_" + l.label + " / zeta_" + k.label});
    } else {
        L = detail::cached_L(k.label + ":" + k.poly.str() + "/beta:" + std::to_string(c.beta.a) + "," +
                                 std::to_string(c.beta.b) + "," + std::to_string(c.beta.c) + "/" + std::to_string(cutoff),
                             [&] { return relative_L(k, c.beta, 3, cutoff); });
        r.provenance.push_back({"L_" + k.label + "(sqrt(beta))/" + k.label + "(3)", L.value, L.tail_bound, cutoff,
                                "Euler product of the quadratic character of beta = (" + std::to_string(c.beta.a) +
                                    " + " + std::to_string(c.beta.b) + " sqrt" + std::to_string(D) + ")/" +
                                    std::to_string(c.beta.c)});
    }
    const auto consts = PrasadConstants::current();
    r.mu_covolume = principal_mu_covolume(c.d, Real(c.D_k), Real(c.D_rel), z2, z4, L.value);
    const Real scale = consts.hyperbolic_factor * c.multiplicity / c.index;
    r.hyperbolic_covolume = scale * r.mu_covolume;
    // L is the only truncated input; the rest carries working-precision rounding.
    const Real relative_tail = L.tail_bound / L.value;
    r.tail_bound = r.hyperbolic_covolume * (relative_tail + pow10(-WorkingPrecision::digits()));
    return r;
}

inline CovolumeReport hyperbolic_covolume(CaseLabel label, std::uint64_t cutoff = kDefaultCutoff) {
    return hyperbolic_covolume(lattice_case(label), cutoff, builtin_fields());
}

// Gamma0 in the closed form 9 sqrt5^15 sqrt11^5 / (2^14 pi^15) zeta_k(2) zeta_k(4) L(3).
inline Real gamma0_closed_form(const Real& z2, const Real& z4, const Real& L3) {
    const Real pi = const_pi();
    return 9 * elem::pow(elem::sqrt(Real(5)), 15) * elem::pow(elem::sqrt(Real(11)), 5) /
           (elem::pow(Real(2), 14) * elem::pow(pi, 15)) * z2 * z4 * L3;
}

// ---------------------------------------------------------------------------
// Lower bounds of the sieve.

inline Real bound_deg_ge7() {
    const auto k = PrasadConstants::current();
    return k.hyperbolic_factor / 32 * elem::pow(elem::pow(Real(9.3), Real(5.5)) * k.a, 7);
}

inline void require_bound_inputs(int d, const Real& D_k, const char* who) {
    if (d < 2) throw DomainError(std::string(who) + ": degree " + std::to_string(d) + " < 2");
    if (D_k < 1) throw DomainError(std::string(who) + ": discriminant must be >= 1");
}

inline Real bound_disc(int d, const Real& D_k) {
    require_bound_inputs(d, D_k, "bound_disc");
    const auto k = PrasadConstants::current();
    return k.hyperbolic_factor / 32 * elem::pow(D_k, Real(5.5)) * elem::pow(k.a, d);
}

inline Real bound_disc_pair(int d, const Real& D_k, const Real& D_l) {
    require_bound_inputs(d, D_k, "bound_disc_pair");
    if (D_l < 1) throw DomainError("bound_disc_pair: discriminant must be >= 1");
    const auto k = PrasadConstants::current();
    return k.hyperbolic_factor / 32 * elem::pow(D_k, Real(2.5)) * elem::pow(D_l, Real(1.5)) * elem::pow(k.a, d);
}

inline Real bound_classno(int d, const Real& D_k, const Real& D_l, long h_l) {
    require_bound_inputs(d, D_k, "bound_classno");
    if (D_l < 1) throw DomainError("bound_classno: discriminant must be >= 1");
    if (h_l < 1) throw DomainError("bound_classno: class number must be >= 1");
    const auto k = PrasadConstants::current();
    return k.hyperbolic_factor / (Real(h_l) * elem::pow(Real(2), d + 1)) * elem::pow(D_k, Real(7.5)) *
           elem::pow(D_l / (D_k * D_k), Real(2.5)) * elem::pow(k.C, d);
}

inline Real case_covolume_448(std::uint64_t cutoff = kDefaultCutoff) {
    return hyperbolic_covolume(CaseLabel::Case448, cutoff).hyperbolic_covolume;
}

inline Real case_covolume_475(std::uint64_t cutoff = kDefaultCutoff) {
    return hyperbolic_covolume(CaseLabel::Case475, cutoff).hyperbolic_covolume;
}

// ---------------------------------------------------------------------------
// Arithmetic covolume versus twice the prism volume.

enum class Identity { Gamma0_P0, Gamma2_P2 };

inline std::string to_string(Identity id) { return id == Identity::Gamma0_P0 ? "gamma0" : "gamma2"; }

inline Identity parse_identity(const std::string& s) {
    if (s == "gamma0" || s == "Gamma0_P0") return Identity::Gamma0_P0;
    if (s == "gamma2" || s == "Gamma2_P2") return Identity::Gamma2_P2;
    throw ValidationError("unknown identity '" + s + "' (expected gamma0 or gamma2)");
}

struct IdentityCheck {
    Identity which;
    Real lhs;        // arithmetic covolume
    Real rhs;        // 2 * prism volume
    Real lhs_tail;   // Euler-product tail of lhs
    Real rhs_error;  // quadrature error of rhs
    int matched_digits = 0;
    int achievable_digits = 0;  // ceiling implied by lhs_tail + rhs_error
    int target_digits = 0;
    bool degraded = false;      // target above the ceiling
    std::vector<ProvenanceEntry> provenance;
};

// floor(-log10(|a - b| / |a|)), capped at the working precision.
inline int matched_digits(const Real& a, const Real& b) {
    const int cap = WorkingPrecision::digits();
    if (a == b) return cap;
    Real rel = elem::abs(a - b) / elem::abs(a);
    Real digits = -elem::log10(rel);
    int m = static_cast<int>(boost::multiprecision::floor(digits).convert_to<long>());
    return std::clamp(m, 0, cap);
}

inline IdentityCheck verify_identity(Identity which, int target_digits, std::uint64_t cutoff = kDefaultCutoff) {
    const bool g0 = which == Identity::Gamma0_P0;
    CovolumeReport arith = hyperbolic_covolume(g0 ? CaseLabel::Gamma0 : CaseLabel::Gamma2, cutoff);
    prism::PrismVolume geo = prism::polytope_volume(g0 ? prism::Polytope::P0 : prism::Polytope::P2);
    IdentityCheck out{which, arith.hyperbolic_covolume, 2 * geo.value, arith.tail_bound, 2 * geo.error_estimate};
    out.target_digits = target_digits;
    out.matched_digits = matched_digits(out.lhs, out.rhs);
    Real uncertainty = (out.lhs_tail + out.rhs_error) / elem::abs(out.lhs);
    out.achievable_digits = uncertainty > 0 ? std::clamp(static_cast<int>(boost::multiprecision::floor(-elem::log10(uncertainty))
                                                                              .convert_to<long>()),
                                                         0, WorkingPrecision::digits())
                                            : WorkingPrecision::digits();
    out.degraded = target_digits > out.achievable_digits;
    out.provenance = arith.provenance;
    out.provenance.push_back({g0 ? "2 vol5(P0)" : "2 vol5(P2)", out.rhs, out.rhs_error, 0,
                              "tanh-sinh quadrature of the Schlaefli differential"});
    return out;
}

}  // namespace orbivol
