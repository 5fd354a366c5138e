#pragma once
/**
 * @file serialize.hpp
 * @brief Versioned input documents and the octonion text formats.
 *
 * An octonion serializes as an array of 8 numbers in basis order
 * (1, i, j, k, kl, jl, il, l); vectors and matrices as nested arrays.
 * See docs/formats.md for the full format description.
 */

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

namespace octo {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VersionUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kFormatVersion = "1";

using json = nlohmann::json;

inline json to_json(const Octonion& o) {
    json arr = json::array();
    for (int q = 0; q < 8; ++q) arr.push_back(o[q]);
    return arr;
}

inline Octonion octonion_from_json(const json& arr) {
    if (!arr.is_array() || arr.size() != 8)
        throw ParseError("octonion: expected array of 8 numbers");
    std::array<double, 8> c{};
    for (int q = 0; q < 8; ++q) {
        if (!arr[q].is_number()) throw ParseError("octonion: non-numeric coefficient");
        c[static_cast<std::size_t>(q)] = arr[q].get<double>();
        if (!std::isfinite(c[static_cast<std::size_t>(q)]))
            throw ParseError("octonion: non-finite coefficient");
    }
    return Octonion(c);
}

inline json to_json(const OctVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(to_json(v[i]));
    return arr;
}

inline OctVector vector_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty()) throw ParseError("vector: expected array");
    OctVector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[i] = octonion_from_json(arr[i]);
    return v;
}

enum class DocumentKind { hermitian2, hermitian3, vector, pair };

struct InputDocument {
    DocumentKind kind;
    Hermitian2Params hermitian2;
    Hermitian3Params hermitian3;
    OctVector vector;
    Octonion lambda;  ///< only for kind == pair
};

namespace detail {

inline double number_field(const json& doc, const char* name) {
    if (!doc.contains(name) || !doc.at(name).is_number())
        throw ParseError(std::string("missing or non-numeric field: ") + name);
    const double v = doc.at(name).get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string("non-finite field: ") + name);
    return v;
}

inline void reject_unknown(const json& doc, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ParseError("unknown field: " + key);
    }
}

}  // namespace detail

/// Strict parse of a versioned input document.
inline InputDocument parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (!doc.contains("version") || !doc.at("version").is_string())
        throw ParseError("missing version");
    if (doc.at("version").get<std::string>() != kFormatVersion)
        throw VersionUnsupported("unsupported version: " +
                                 doc.at("version").get<std::string>());
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw ParseError("missing kind");

    const std::string kind = doc.at("kind").get<std::string>();
    InputDocument out{};
    if (kind == "hermitian2") {
        detail::reject_unknown(doc, {"version", "kind", "p", "m", "a"});
        out.kind = DocumentKind::hermitian2;
        out.hermitian2.p = detail::number_field(doc, "p");
        out.hermitian2.m = detail::number_field(doc, "m");
        if (!doc.contains("a")) throw ParseError("missing field: a");
        out.hermitian2.a = octonion_from_json(doc.at("a"));
    } else if (kind == "hermitian3") {
        detail::reject_unknown(doc, {"version", "kind", "p", "m", "n", "a", "b", "c"});
        out.kind = DocumentKind::hermitian3;
        out.hermitian3.p = detail::number_field(doc, "p");
        out.hermitian3.m = detail::number_field(doc, "m");
        out.hermitian3.n = detail::number_field(doc, "n");
        for (const char* name : {"a", "b", "c"})
            if (!doc.contains(name))
                throw ParseError(std::string("missing field: ") + name);
        out.hermitian3.a = octonion_from_json(doc.at("a"));
        out.hermitian3.b = octonion_from_json(doc.at("b"));
        out.hermitian3.c = octonion_from_json(doc.at("c"));
    } else if (kind == "vector") {
        detail::reject_unknown(doc, {"version", "kind", "entries"});
        out.kind = DocumentKind::vector;
        if (!doc.contains("entries")) throw ParseError("missing field: entries");
        out.vector = vector_from_json(doc.at("entries"));
    } else if (kind == "pair") {
        detail::reject_unknown(doc, {"version", "kind", "entries", "lambda"});
        out.kind = DocumentKind::pair;
        if (!doc.contains("entries") || !doc.contains("lambda"))
            throw ParseError("pair requires entries and lambda");
        out.vector = vector_from_json(doc.at("entries"));
        out.lambda = octonion_from_json(doc.at("lambda"));
    } else {
        throw ParseError("unknown kind: " + kind);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Octonion mini-syntax: signed terms with real coefficients over the names
// {1, i, j, k, kl, jl, il, l}, e.g. "1+kl", "0.5i - 2jl", "-3".
// ---------------------------------------------------------------------------

namespace detail {

inline int basis_index(const std::string& name) {
    for (int q = 0; q < 8; ++q)
        if (name == basis::names[static_cast<std::size_t>(q)]) return q;
    return -1;
}

}  // namespace detail

inline Octonion parse_octonion_expr(const std::string& text) {
    Octonion out;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty octonion expression");
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1.0 : 1.0;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        if (pos >= text.size()) throw ParseError("dangling sign");

        // Optional numeric coefficient.
        double coeff = 1.0;
        bool have_number = false;
        {
            const char* begin = text.c_str() + pos;
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end != begin) {
                coeff = value;
                pos += static_cast<std::size_t>(end - begin);
                have_number = true;
            }
        }
        if (pos < text.size() && text[pos] == '*') ++pos;

        // Optional basis name.
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        const std::string name = text.substr(start, pos - start);
        int idx = 0;
        if (!name.empty()) {
            idx = detail::basis_index(name);
            if (idx < 0) throw ParseError("unknown basis name: " + name);
        } else if (!have_number) {
            throw ParseError("expected coefficient or basis name at position " +
                             std::to_string(pos));
        }
        out[idx] += sign * coeff;
        first = false;
        skip_ws();
    }
    return out;
}

/// Inverse of parse_octonion_expr, stable term order (basis order).
inline std::string format_octonion(const Octonion& o) {
    std::ostringstream out;
    out.precision(17);
    bool any = false;
    for (int q = 0; q < 8; ++q) {
        const double c = o[q];
        if (c == 0.0) continue;
        if (any)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        const double mag = std::abs(c);
        if (q == 0) {
            out << mag;
        } else {
            if (mag != 1.0) out << mag;
            out << basis::names[static_cast<std::size_t>(q)];
        }
        any = true;
    }
    if (!any) out << "0";
    return out.str();
}

}  // namespace octo
