#pragma once

// Volumes of the compact 5-prisms P(alpha) = [5,3,3,3,alpha], alpha in
// [pi/4, 2pi/5]. The Schlaefli differential integrates the volume of the
// codimension-two face, a 3-orthoscheme [5,3,beta(t)], from alpha up to 2pi/5,
// where P(2pi/5) has the closed-form volume zeta(3)/3200.

#include <string>
#include <utility>
#include <vector>

#include "orbivol/error.hpp"
#include "orbivol/lobachevsky.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/quadrature.hpp"

namespace orbivol::prism {

// beta(t) = arctan sqrt(2 - cot^2 t). Defined wherever the radicand is >= 0,
// i.e. for t in [arccot sqrt2, pi - arccot sqrt2].
inline Real beta_of_t(const Real& t) {
    Real cot = elem::cot(t);
    Real radicand = 2 - cot * cot;
    if (radicand < 0) {
        throw DomainError("beta_of_t: 2 - cot^2 t < 0 at t = " + to_decimal(t, 20) +
                          " (outside the prism family range)");
    }
    return elem::atan(elem::sqrt(radicand));
}

// theta for a given face angle beta; the radicand is negative exactly when the
// face [5,3,beta] stops being compact.
inline Real theta_of_beta(const Real& beta) {
    const Real pi = const_pi();
    Real s5 = elem::sin(pi / 5);
    Real sb = elem::sin(beta);
    Real radicand = 1 - 4 * s5 * s5 * sb * sb;
    if (radicand < 0) {
        throw DomainError("theta_of_t: 1 - 4 sin^2(pi/5) sin^2(beta) < 0 at beta = " + to_decimal(beta, 20) +
                          " (non-compact configuration)");
    }
    return elem::atan(elem::sqrt(radicand) / (2 * elem::cos(pi / 5) * elem::cos(beta)));
}

inline Real theta_of_t(const Real& t) { return theta_of_beta(beta_of_t(t)); }

// Lobachevsky's formula for the 3-orthoscheme [5,3,beta] with parameter theta.
inline Real vol3_from_angles(const Real& beta, const Real& theta) {
    const Real pi = const_pi();
    const Real p5 = pi / 5;
    const Real p6 = pi / 6;
    Real sum = lob2(p5 + theta) - lob2(p5 - theta) - lob2(p6 + theta) + lob2(p6 - theta) + lob2(beta + theta) -
               lob2(beta - theta) + 2 * lob2(pi / 2 - theta);
    return sum / 4;
}

inline Real vol3_orthoscheme(const Real& t) {
    Real beta = beta_of_t(t);
    return vol3_from_angles(beta, theta_of_beta(beta));
}

struct PrismVolume {
    Real value;
    Real error_estimate;  // quadrature error, already scaled by 1/4
    std::size_t evaluations = 0;
};

inline Real default_tolerance() { return pow10(-(WorkingPrecision::digits() - 5)); }

inline PrismVolume prism_volume(const Real& alpha, const Real& tol) {
    const Real pi = const_pi();
    const Real lower = pi / 4;
    const Real upper = 2 * pi / 5;
    const Real slack = 16 * epsilon();
    if (alpha < lower - slack || alpha > upper + slack) {
        throw DomainError("prism_volume: alpha = " + to_decimal(alpha, 20) + " outside [pi/4, 2pi/5]");
    }
    Real a = alpha < lower ? lower : (alpha > upper ? upper : alpha);
    // The integrand is scaled by 1/4 afterwards, so 4*tol suffices for the integral.
    auto integral = integrate([](const Real& t) { return vol3_orthoscheme(t); }, a, upper, 4 * tol);
    return {integral.value / 4 + zeta_int(3) / 3200, integral.error_estimate / 4, integral.evaluations};
}

inline PrismVolume prism_volume(const Real& alpha) { return prism_volume(alpha, default_tolerance()); }

// Closed forms for the two non-compact limiting polytopes and P(2pi/5).
inline std::vector<std::pair<std::string, Real>> closed_form_references() {
    const Real pi = const_pi();
    const Real z3 = zeta_int(3);
    const Real l3 = lob3(pi / 5);
    Real cq = 13 * z3 / 9600 + Real(11) / 1152 * l3;
    Real cq2 = -z3 / 4800 + Real(11) / 1152 * l3;
    Real p0 = (cq - cq2) / 5;
    return {{"vol5([5/2,3,3,5,5/2])", cq}, {"vol5([5,3,3,5/2,5])", cq2}, {"vol5(P(2pi/5))", p0}};
}

enum class Polytope { P0, P1, P2 };

inline std::string to_string(Polytope id) {
    switch (id) {
        case Polytope::P0: return "P0";
        case Polytope::P1: return "P1";
        case Polytope::P2: return "P2";
    }
    return "?";
}

inline Polytope parse_polytope(const std::string& s) {
    if (s == "P0" || s == "p0") return Polytope::P0;
    if (s == "P1" || s == "p1") return Polytope::P1;
    if (s == "P2" || s == "p2") return Polytope::P2;
    throw ValidationError("unknown polytope '" + s + "' (expected P0, P1 or P2)");
}

// Dihedral angle alpha of the prism underlying each Coxeter polytope; P1 is the
// double of P0 across its [5,3,3,3] facet.
inline Real polytope_alpha(Polytope id) {
    const Real pi = const_pi();
    return id == Polytope::P2 ? pi / 4 : pi / 3;
}

inline PrismVolume polytope_volume(Polytope id, const Real& tol) {
    PrismVolume v = prism_volume(polytope_alpha(id), tol);
    if (id == Polytope::P1) {
        v.value *= 2;
        v.error_estimate *= 2;
    }
    return v;
}

inline PrismVolume polytope_volume(Polytope id) { return polytope_volume(id, default_tolerance()); }

}  // namespace orbivol::prism
