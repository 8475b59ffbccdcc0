#pragma once

#include "unitsum/classifier.hpp"
#include "unitsum/families.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitsum {

using Json = nlohmann::ordered_json;

/// Field-spec syntax error (distinct from an invalid/reducible polynomial).
struct FieldSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline BigInt parse_int(const std::string& s) {
    if (s.empty()) throw FieldSpecError("field spec: empty integer");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw FieldSpecError("field spec: bare sign");
    for (; i < s.size(); i++)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw FieldSpecError("field spec: bad integer '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

// one term of a polynomial string: [coef][*] [x [^ exp]]
inline void parse_poly_term(const std::string& term, std::array<BigInt, 4>& coeffs) {
    if (term.empty()) throw FieldSpecError("field spec: empty term");
    size_t xpos = term.find('x');
    if (xpos == std::string::npos) {
        coeffs[0] += parse_int(term);
        return;
    }
    std::string coef = term.substr(0, xpos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    BigInt c = coef.empty() || coef == "+" ? BigInt(1) : coef == "-" ? BigInt(-1) : parse_int(coef);
    std::string rest = term.substr(xpos + 1);
    int exp = 1;
    if (!rest.empty()) {
        if (rest[0] != '^') throw FieldSpecError("field spec: expected '^' in '" + term + "'");
        std::string e = rest.substr(1);
        if (e != "1" && e != "2" && e != "3")
            throw FieldSpecError("field spec: exponent must be 1, 2, or 3");
        exp = e[0] - '0';
    }
    coeffs[static_cast<size_t>(exp)] += c;
}

} // namespace detail

/// Parse a cubic field spec: either the coefficient triple "a2,a1,a0" of
/// x^3 + a2 x^2 + a1 x + a0, or a polynomial string like "x^3 - 2*x^2 + 1".
/// Whitespace-insensitive.  Throws FieldSpecError on syntax problems; the
/// returned polynomial may still be rejected later as a field (reducible).
inline IntPoly parse_field_spec(const std::string& spec) {
    std::string s = detail::strip_spaces(spec);
    if (s.empty()) throw FieldSpecError("field spec: empty");

    if (s.find('x') == std::string::npos) {
        std::vector<BigInt> parts;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                parts.push_back(detail::parse_int(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(detail::parse_int(cur));
        if (parts.size() != 3)
            throw FieldSpecError("field spec: expected three coefficients a2,a1,a0");
        return IntPoly::cubic(parts[0], parts[1], parts[2]);
    }

    // split on top-level +/- signs (every sign starts a new term)
    std::array<BigInt, 4> coeffs{0, 0, 0, 0};
    std::string term;
    for (size_t i = 0; i < s.size(); i++) {
        if ((s[i] == '+' || s[i] == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            detail::parse_poly_term(term, coeffs);
            term.clear();
        }
        term += s[i];
    }
    detail::parse_poly_term(term, coeffs);
    if (coeffs[3] != 1)
        throw FieldSpecError("field spec: polynomial must be a monic cubic in x");
    return IntPoly::cubic(coeffs[2], coeffs[1], coeffs[0]);
}

// ---------------------------------------------------------------------------
// JSON serialization (all big integers and rationals as decimal strings)
// ---------------------------------------------------------------------------

inline Json to_json(const FieldPtr& K) {
    return Json{{"defining_poly", K->defining_poly().str()},
                {"disc_poly", to_decimal(K->disc_poly())},
                {"classification", to_string(K->classification())}};
}

inline Json to_json(const FieldElement& x) {
    return Json::array({to_decimal(x.c0()), to_decimal(x.c1()), to_decimal(x.c2())});
}

inline Json to_json(const UnitSolution& s) {
    Json j{{"n", to_decimal(s.n)},
           {"eps", to_json(s.eps)},
           {"delta", to_json(s.delta)},
           {"provenance", to_string(s.prov)}};
    if (s.prov == Provenance::family_simplest_cubic || s.prov == Provenance::family_la)
        j["family_param"] = to_decimal(s.family_param);
    return j;
}

inline Json to_json(const NkReport& rep) {
    Json entries = Json::array();
    Json values = Json::array();
    for (const auto& e : rep.entries) {
        values.push_back(to_decimal(e.n));
        Json je{{"n", to_decimal(e.n)}, {"tag", e.tag}};
        if (e.witness) je["witness"] = to_json(*e.witness);
        entries.push_back(std::move(je));
    }
    Json aliases = Json::array();
    for (const auto& a : rep.simplest_aliases) aliases.push_back(to_decimal(a));
    for (const auto& a : rep.la_aliases) aliases.push_back(to_decimal(a));
    return Json{{"field", to_json(rep.field)}, {"values", std::move(values)},
                {"entries", std::move(entries)}, {"complete", rep.complete},
                {"family_aliases", std::move(aliases)}, {"caveats", rep.caveats}};
}

inline Json to_json(const TableVerification& ver) {
    Json checks = Json::array();
    for (const auto& c : ver.checks) {
        Json jc{{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    return Json{{"all_ok", ver.all_ok},
                {"cyclic_classes", ver.cyclic_classes},
                {"complex_classes", ver.complex_classes},
                {"checks", std::move(checks)}};
}

inline Json to_json(const MdReport& rep) {
    Json vals = Json::array();
    for (const auto& [i, j, n] : rep.values)
        vals.push_back(Json{{"i", i}, {"j", j}, {"n", to_decimal(n)}});
    return Json{{"d", rep.d},
                {"modulus", rep.modulus.str()},
                {"units_verified", rep.units_verified},
                {"evaluations_verified", rep.evaluations_verified},
                {"values", std::move(vals)}};
}

inline Json to_json(const FamilyIdentity& id) {
    return Json{{"eps", to_json(id.eps)}, {"delta", to_json(id.delta)},
                {"n", to_decimal(id.n)}, {"sum_ok", id.sum_ok}, {"units_ok", id.units_ok}};
}

inline Json to_json(const EnnolaReport& rep) {
    Json ids = Json::array();
    for (const auto& id : rep.identities) ids.push_back(to_json(id));
    Json j{{"l", to_decimal(rep.l)},
           {"field", to_json(rep.field)},
           {"identities", std::move(ids)},
           {"printed_fourth_verifies", rep.printed_fourth_verifies},
           {"variant_fourth_verifies", rep.variant_fourth_verifies}};
    if (rep.fourth_variant) j["fourth_variant"] = to_json(*rep.fourth_variant);
    return j;
}

// ---------------------------------------------------------------------------
// TSV / pretty rendering
// ---------------------------------------------------------------------------

inline std::string tsv_row(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += '\t';
        out += c;
        first = false;
    }
    out += '\n';
    return out;
}

inline std::string solution_tsv(const UnitSolution& s) {
    return tsv_row({to_decimal(s.n), s.eps.str(), s.delta.str(), to_string(s.prov)});
}

inline std::string nk_tsv(const NkReport& rep) {
    std::string out = tsv_row({"n", "eps", "delta", "tag"});
    for (const auto& e : rep.entries)
        out += tsv_row({to_decimal(e.n), e.witness ? e.witness->eps.str() : "-",
                        e.witness ? e.witness->delta.str() : "-", e.tag});
    return out;
}

inline std::string nk_pretty(const NkReport& rep) {
    std::ostringstream os;
    os << "field: " << rep.field->defining_poly().str()
       << "  (disc " << to_decimal(rep.field->disc_poly()) << ", "
       << to_string(rep.cls) << ")\n";
    os << "N_K =";
    for (const auto& e : rep.entries) os << " " << to_decimal(e.n);
    os << "\n";
    for (const auto& e : rep.entries) {
        os << "  " << to_decimal(e.n) << " [" << e.tag << "]";
        if (e.witness) os << "  " << e.witness->eps.str() << " + " << e.witness->delta.str();
        os << "\n";
    }
    if (!rep.simplest_aliases.empty() || !rep.la_aliases.empty()) {
        os << "family aliases:";
        for (const auto& a : rep.simplest_aliases) os << " " << to_decimal(a);
        for (const auto& a : rep.la_aliases) os << " " << to_decimal(a);
        os << "\n";
    }
    for (const auto& c : rep.caveats) os << "caveat: " << c << "\n";
    return os.str();
}

inline std::string verification_pretty(const TableVerification& ver) {
    std::ostringstream os;
    for (const auto& c : ver.checks) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << ver.cyclic_classes << " cyclic + " << ver.complex_classes
       << " complex sporadic classes " << (ver.all_ok ? "verified" : "FAILED") << "\n";
    return os.str();
}

} // namespace unitsum
