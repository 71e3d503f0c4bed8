#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latticetri/charpoly.hpp"
#include "latticetri/errors.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/idempotent.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/permutation.hpp"
#include "latticetri/reducibility.hpp"
#include "latticetri/semigroup.hpp"
#include "latticetri/triangularize.hpp"

namespace latticetri {

using nlohmann::json;

// Wire formats. All exact values travel as canonical rational strings so a
// report parses back bit-for-bit; doubles appear only in the explicitly
// approximate spectral-radius field.

inline json rational_to_json(const Rational& value) { return format_rational(value); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Int(j.get<std::uint64_t>()));
        return Rational(Int(j.get<std::int64_t>()));
    }
    throw ParseError("matrix entry must be a rational string or an integer");
}

inline json vector_to_json(const VecR& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(rational_to_json(v));
    return out;
}

/// Grid of rational strings; used for rectangular blocks inside reports.
inline json grid_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Square-matrix schema: {"n": int, "entries": [[ "p/q" | int, ... ], ...]}.
inline json matrix_to_json(const Matrix& m) {
    if (!m.is_square()) throw DomainError("matrix_to_json: matrix must be square");
    return json{{"n", m.dim()}, {"entries", grid_to_json(m)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON must be an object with fields 'n' and 'entries'");
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
        throw ParseError("matrix field 'n' must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw ParseError("matrix field 'entries' must be an array of n rows");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix row must be an array of n entries");
        for (std::size_t j2 = 0; j2 < n; ++j2) m(i, j2) = rational_from_json(row[j2]);
    }
    return m;
}

/// Coordinate-ideal schema: {"n": int, "members": [int, ...]}.
inline json ideal_to_json(const CoordIdeal& ideal) {
    return json{{"n", ideal.ambient()}, {"members", ideal.members()}};
}

inline CoordIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("members"))
        throw ParseError("ideal JSON must be an object with fields 'n' and 'members'");
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
        throw ParseError("ideal field 'n' must be a positive integer");
    std::vector<std::size_t> members;
    for (const json& v : j["members"]) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw ParseError("ideal members must be nonnegative integers");
        members.push_back(v.get<std::size_t>());
    }
    try {
        return CoordIdeal(j["n"].get<std::size_t>(), std::move(members));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline json chain_to_json(const IdealChain& chain) {
    json members = json::array();
    for (const CoordIdeal& m : chain.members()) members.push_back(m.members());
    return json{{"n", chain.ambient()}, {"members", std::move(members)}};
}

inline json permutation_to_json(const Permutation& p) { return json(p.image()); }

inline json charpoly_to_json(const CharPoly& p) {
    // Ascending coefficients, constant term first.
    json out = json::array();
    for (const Rational& c : p.coefficients()) out.push_back(rational_to_json(c));
    return out;
}

inline json witness_to_json(const ReducibilityWitness& w) {
    return json{{"f", vector_to_json(w.f)},
                {"phi", vector_to_json(w.phi)},
                {"A", grid_to_json(w.a)},
                {"B", grid_to_json(w.b)},
                {"ideal", ideal_to_json(w.ideal)}};
}

inline json criteria_report_to_json(const CriteriaReport& report) {
    json out{{"structural", report.structural},
             {"nilpotent_offdiag", report.nilpotent_offdiag},
             {"charpoly_diag", report.charpoly_diag},
             {"triangularizable", report.triangularizable()}};
    out["permutation"] = report.permutation ? permutation_to_json(*report.permutation) : json();
    out["chain"] = report.chain ? chain_to_json(*report.chain) : json();
    return out;
}

inline json word_to_json(const Word& w) { return json(w); }

inline json verdict_to_json(const SemigroupVerdict& v) {
    json out{{"each_triangularizable", v.each_triangularizable},
             {"diag_condition", v.diag_condition},
             {"checked_pairs", v.checked_pairs},
             {"hypothesis_scope", to_string(v.hypothesis_scope)},
             {"commonly_triangularizable", v.commonly_triangularizable},
             {"closure", json{{"size", v.closure_size}, {"complete", v.closure_complete}}}};
    out["permutation"] = v.permutation ? permutation_to_json(*v.permutation) : json();
    out["chain"] = v.chain ? chain_to_json(*v.chain) : json();
    out["counterexample_pair"] =
        v.counterexample_pair
            ? json{{"s", word_to_json(v.counterexample_pair->first)},
                   {"t", word_to_json(v.counterexample_pair->second)}}
            : json();
    return out;
}

inline json decomposition_to_json(const IdempotentDecomposition& d) {
    json parts = json::array();
    for (const RankOnePart& part : d.parts)
        parts.push_back(json{{"support", ideal_to_json(part.support)},
                             {"x", vector_to_json(part.column)},
                             {"phi", vector_to_json(part.functional)}});
    return json{{"kernel", ideal_to_json(d.kernel)},
                {"core", ideal_to_json(d.core)},
                {"cokernel", ideal_to_json(d.cokernel)},
                {"core_idempotent", grid_to_json(d.core_idempotent)},
                {"kernel_coupling", grid_to_json(d.kernel_coupling)},
                {"cokernel_coupling", grid_to_json(d.cokernel_coupling)},
                {"corner", grid_to_json(d.corner)},
                {"parts", std::move(parts)},
                {"rank", d.parts.size()}};
}

}  // namespace latticetri
