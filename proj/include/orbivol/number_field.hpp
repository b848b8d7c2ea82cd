#pragma once

// Number fields given by a monic defining polynomial, validated on
// construction, plus the built-in fields used by the covolume computations
// and a JSON loader for user-supplied field data.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbivol/error.hpp"
#include "orbivol/intpoly.hpp"
#include "orbivol/modp.hpp"

namespace orbivol {

struct NumberField {
    std::string label;
    IntPoly poly;
    int r1 = 0;
    int r2 = 0;
    BigInt abs_disc;
    std::optional<long> class_number;
    std::string note;

    // Derived by validate().
    BigInt poly_discriminant;
    BigInt index;  // [O_F : Z[x]/(poly)]
    bool monogenic = false;
    std::vector<long long> small_coefficients;  // ascending, when all fit in 32 bits
    long long small_discriminant = 0;           // |disc(poly)| when it fits, else 0

    int degree() const { return poly.degree(); }
};

// Checks the invariants and fills in the derived members.
inline NumberField validate(NumberField f) {
    const std::string who = "field '" + f.label + "': ";
    const int n = f.poly.degree();
    if (n < 2) throw ValidationError(who + "defining polynomial must have degree >= 2");
    if (!f.poly.monic()) throw ValidationError(who + "defining polynomial must be monic");
    if (f.r1 < 0 || f.r2 < 0 || f.r1 + 2 * f.r2 != n)
        throw ValidationError(who + "signature (" + std::to_string(f.r1) + "," + std::to_string(f.r2) +
                              ") does not satisfy r1 + 2 r2 = " + std::to_string(n));
    if (n <= 4 && !irreducible_small(f.poly)) throw ValidationError(who + f.poly.str() + " is reducible over Q");
    const int real_roots = real_root_count(f.poly);
    if (real_roots != f.r1)
        throw ValidationError(who + f.poly.str() + " has " + std::to_string(real_roots) + " real roots, r1 = " +
                              std::to_string(f.r1));
    if (f.abs_disc <= 0) throw ValidationError(who + "abs_disc must be positive");
    f.poly_discriminant = poly_disc(f.poly);
    const BigInt sign = (f.r2 % 2 == 0) ? 1 : -1;
    if ((f.poly_discriminant > 0 ? 1 : -1) != sign)
        throw ValidationError(who + "discriminant sign disagrees with the signature");
    BigInt d = abs(f.poly_discriminant);
    if (d % f.abs_disc != 0)
        throw ValidationError(who + "abs_disc " + f.abs_disc.str() + " does not divide |disc(poly)| = " + d.str());
    BigInt square = d / f.abs_disc;
    BigInt root = sqrt(square);
    if (root * root != square)
        throw ValidationError(who + "|disc(poly)| / abs_disc = " + square.str() + " is not a square");
    f.index = root;
    f.small_coefficients.clear();
    bool fits = true;
    for (const auto& c : f.poly.coefficients()) fits = fits && abs(c) < (BigInt(1) << 31);
    if (fits)
        for (const auto& c : f.poly.coefficients()) f.small_coefficients.push_back(c.convert_to<long long>());
    f.small_discriminant = d < (BigInt(1) << 62) ? d.convert_to<long long>() : 0;
    f.monogenic = (root == 1);
    if (f.class_number && *f.class_number < 1) throw ValidationError(who + "class number must be >= 1");
    return f;
}

inline NumberField make_field(std::string label, const std::vector<long long>& descending, int r1, int r2,
                              long long abs_disc, std::optional<long> h = std::nullopt, std::string note = {}) {
    NumberField f;
    f.label = std::move(label);
    f.poly = IntPoly::from_descending(descending);
    f.r1 = r1;
    f.r2 = r2;
    f.abs_disc = abs_disc;
    f.class_number = h;
    f.note = std::move(note);
    return validate(std::move(f));
}

// Splitting shape of p in F, read off from the defining polynomial. Valid only
// when p does not divide the index of the equation order.
inline SplittingType factor_degrees_mod_p(const NumberField& f, std::uint64_t p) {
    if (f.index % p == 0) {
        throw DomainError("field '" + f.label + "': prime " + std::to_string(p) + " divides the index " +
                          f.index.str() + "; splitting data must be supplied by the caller");
    }
    if (!f.small_coefficients.empty() && f.small_discriminant != 0) {
        const bool squarefree = static_cast<std::uint64_t>(f.small_discriminant) % p != 0;
        return factor_shape_mod_p(modp::reduce(f.small_coefficients, p), f.degree(), p, squarefree);
    }
    return factor_shape_mod_p(f.poly, p, f.poly_discriminant % p != 0);
}

// Built-in fields. k0 = Q(sqrt5); l2 and l0 are its quadratic extensions of
// discriminants 400 and 275; k448/l448 and l475 are the two sieve cases.
inline const std::vector<NumberField>& builtin_fields() {
    static const std::vector<NumberField> fields = {
        make_field("k0", {1, -1, -1}, 2, 0, 5, 1, "Q(sqrt5)"),
        make_field("l2", {1, 0, -1, 0, -1}, 2, 1, 400, std::nullopt, "k0(sqrt(theta)), theta = (1+sqrt5)/2"),
        make_field("l0", {1, -1, 0, 2, -1}, 2, 1, 275, std::nullopt,
                   "quadratic extension of k0 of discriminant -275"),
        make_field("k448", {1, 0, -2}, 2, 0, 8, 1, "Q(sqrt2)"),
        make_field("l448", {1, -2, 1, -2, 1}, 2, 1, 448, std::nullopt,
                   "quadratic extension of k448 of discriminant -448"),
        make_field("l475", {1, -1, -2, -2, -1}, 2, 1, 475, std::nullopt,
                   "k0(sqrt(-1 + 2 sqrt5))"),
    };
    return fields;
}

inline const NumberField* find_field(const std::vector<NumberField>& fields, const std::string& label) {
    for (const auto& f : fields)
        if (f.label == label) return &f;
    return nullptr;
}

inline const NumberField& builtin_field(const std::string& label) {
    const NumberField* f = find_field(builtin_fields(), label);
    if (f == nullptr) throw DependencyError("no built-in field labelled '" + label + "'");
    return *f;
}

// Field records: {"fields": [{"label", "poly" (leading coefficient first),
// "r1", "r2", "abs_disc", "h" (optional), "note" (optional)}]}.
inline std::vector<NumberField> parse_fields_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("field data: ") + e.what(), e.byte);
    }
    const nlohmann::json& list = doc.is_array() ? doc : doc.value("fields", nlohmann::json::array());
    if (!list.is_array()) throw ValidationError("field data: 'fields' must be an array");
    std::vector<NumberField> out;
    for (const auto& rec : list) {
        try {
            std::optional<long> h;
            if (rec.contains("h") && !rec["h"].is_null()) h = rec["h"].get<long>();
            out.push_back(make_field(rec.at("label").get<std::string>(), rec.at("poly").get<std::vector<long long>>(),
                                     rec.at("r1").get<int>(), rec.at("r2").get<int>(),
                                     rec.at("abs_disc").get<long long>(), h, rec.value("note", std::string())));
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("field data: malformed record: ") + e.what());
        }
    }
    return out;
}

inline std::vector<NumberField> load_fields(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open field data file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_fields_json(text);
}

}  // namespace orbivol
