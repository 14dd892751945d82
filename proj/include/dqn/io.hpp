#ifndef DQN_IO_HPP
#define DQN_IO_HPP

#include <json.hpp>

#include <string>

#include "dimension.hpp"
#include "groebner.hpp"
#include "pbw.hpp"
#include "scalar.hpp"

namespace dqn {

using nlohmann::json;

inline json to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

inline json to_json(const Scalar& s) {
    return json{{"num", to_json(s.numerator())}, {"den", to_json(s.denominator())}};
}

inline json to_json(const Monomial& m, int n) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(m.exp[static_cast<std::size_t>(i) * n + j]);
        rows.push_back(row);
    }
    return rows;
}

/// Exact interchange form of an element: exponent matrices row-major,
/// coefficients as ascending-degree rational strings.
inline json element_to_json(const Element& f, const OrderSpec& order, int n) {
    json terms = json::array();
    std::vector<const std::pair<const Monomial, Scalar>*> sorted;
    for (const auto& t : f.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) {
        return compare_pbw(a->first, b->first, order, n) == Ordering::greater;
    });
    for (auto* t : sorted)
        terms.push_back(json{{"coeff", to_json(t->second)}, {"exp", to_json(t->first, n)}});
    return json{{"n", n}, {"order", order.name()}, {"terms", terms}};
}

inline QPoly qpoly_from_json(const json& arr) {
    std::vector<Rational> coeffs;
    for (const auto& c : arr) coeffs.emplace_back(c.get<std::string>());
    return QPoly(std::move(coeffs));
}

inline Scalar scalar_from_json(const json& j) {
    return Scalar(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

inline Element element_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Element out;
    for (const auto& t : j.at("terms")) {
        Monomial m = Monomial::unit(n);
        const auto& rows = t.at("exp");
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj)
                m.exp[static_cast<std::size_t>(i) * n + jj] = rows.at(i).at(jj).get<unsigned>();
        out.add_term(std::move(m), scalar_from_json(t.at("coeff")));
    }
    return out;
}

inline json to_json(const DimensionReport& r, int n, const std::string& order_name,
                    const std::vector<std::string>& generator_texts) {
    json witness = json::array();
    for (const auto& g : r.witness_variable_set)
        witness.push_back("d[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]");
    json hv = json::array();
    for (const auto& v : r.hilbert_values) hv.push_back(v.str());
    return json{{"n", n},
                {"order", order_name},
                {"generators", generator_texts},
                {"gk_dim", r.gk_dim},
                {"witness", witness},
                {"hilbert_values", hv},
                {"growth_dimension", r.growth_dimension},
                {"cross_checked", r.cross_checked}};
}

inline const char* to_string(EliminationVerdict v) {
    switch (v) {
        case EliminationVerdict::nonzero: return "nonzero";
        case EliminationVerdict::zero: return "zero";
        default: return "unverified";
    }
}

inline json to_json(const EliminationCertificate& cert, const OrderSpec& order, int n) {
    json entries = json::array();
    for (const auto& e : cert.entries) {
        json keep = json::array();
        for (const auto& g : e.keep)
            keep.push_back("d[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]");
        json basis = json::array();
        for (const auto& b : e.intersection_basis) basis.push_back(to_string(b, order, n));
        entries.push_back(
            json{{"keep", keep}, {"verdict", to_string(e.verdict)}, {"intersection", basis}});
    }
    return json{{"t", cert.t}, {"entries", entries}, {"passed", cert.passed}};
}

}  // namespace dqn

#endif
