#ifndef DQN_GROEBNER_HPP
#define DQN_GROEBNER_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "pbw.hpp"

namespace dqn {

/// A left ideal L = sum D_q(n)·xi_i given by generators and the monomial
/// ordering to compute under.
struct IdealPresentation {
    std::vector<Element> generators;
    OrderSpec order = OrderSpec::paper_lex();
};

/// Cofactor vector over a fixed generator list: rep[k] is the left
/// multiplier of generator k.
using Representation = std::vector<Element>;

inline Element apply_representation(const Representation& rep, const std::vector<Element>& gens,
                                    const Algebra& alg) {
    Element out;
    for (std::size_t k = 0; k < rep.size(); ++k)
        if (!rep[k].is_zero()) out += multiply(rep[k], gens[k], alg);
    return out;
}

/// Left division: returns r with f = sum q_i * g_i + r and no monomial of r
/// divisible by any LM(g_i). Left multiplication twists coefficients by
/// powers of q, so each step recomputes the actual product.
inline Element left_normal_form(const Element& f, const std::vector<Element>& G,
                                const OrderSpec& order, const Algebra& alg,
                                std::vector<Element>* quotients = nullptr) {
    const int n = alg.n();
    if (quotients) quotients->assign(G.size(), Element{});
    std::vector<Monomial> lead(G.size(), Monomial::unit(n));
    for (std::size_t k = 0; k < G.size(); ++k) lead[k] = lm(G[k], order, n).first;

    Element p = f;
    Element r;
    while (!p.is_zero()) {
        auto [m, c] = lm(p, order, n);
        std::size_t hit = G.size();
        for (std::size_t k = 0; k < G.size(); ++k)
            if (lead[k].divides(m)) {
                hit = k;
                break;
            }
        if (hit == G.size()) {
            r.add_term(m, c);
            p.add_term(m, -c);
            continue;
        }
        Monomial u = m - lead[hit];
        Element prod = multiply(Element(u, Scalar(1)), G[hit], alg);
        Scalar d = prod.terms().at(m);  // = LC(prod), leading monomials multiply
        Scalar factor = c / d;
        p -= prod.scaled(factor);
        if (quotients) (*quotients)[hit].add_term(u, factor);
    }
    return r;
}

/// S-polynomial: with gamma the exponentwise lcm of the leading monomials
/// and u, v the monomial cofactors, (u*f)/LC(u*f) - (v*g)/LC(v*g).
inline Element s_polynomial(const Element& f, const Element& g, const OrderSpec& order,
                            const Algebra& alg) {
    const int n = alg.n();
    Monomial lf = lm(f, order, n).first;
    Monomial lg = lm(g, order, n).first;
    Monomial gamma = Monomial::lcm(lf, lg);
    Element pf = multiply(Element(gamma - lf, Scalar(1)), f, alg);
    Element pg = multiply(Element(gamma - lg, Scalar(1)), g, alg);
    return pf.scaled(lm(pf, order, n).second.inverse()) -
           pg.scaled(lm(pg, order, n).second.inverse());
}

struct CompletionEvent {
    std::size_t a = 0;
    std::size_t b = 0;
    bool reduced_to_zero = false;
    std::size_t adjoined_index = 0;  // valid when !reduced_to_zero
};

struct GroebnerBasis {
    std::vector<Element> elements;  // monic, inter-reduced, LM-ascending
    OrderSpec order = OrderSpec::paper_lex();
    std::vector<CompletionEvent> trace;
    /// elements[k] = sum_i representations[k][i] * original generator i
    std::vector<Representation> representations;
};

namespace detail {

inline bool pairs_solvable(const OrderSpec& order, const Algebra& alg) {
    // generator-pair half of the solvability check; cheap enough to run on
    // every completion entry point
    SolvabilityReport r = validate_ordering(order, alg, 0);
    for (const auto& pr : r.generator_pair_results)
        if (!pr.ok) return false;
    return true;
}

}  // namespace detail

/// Left Buchberger completion in the solvable polynomial algebra D_q(n).
/// Pair selection follows the normal strategy (smallest lcm under the
/// active order, ties by pair index). The product criterion is deliberately
/// not applied: disjoint leading supports still interact through the F2
/// tails, so every pair is processed.
inline GroebnerBasis buchberger(const IdealPresentation& L, const Algebra& alg) {
    const int n = alg.n();
    const OrderSpec& order = L.order;
    if (!detail::pairs_solvable(order, alg))
        throw order_not_solvable(order.name() + " for n=" + std::to_string(n));

    GroebnerBasis out;
    out.order = order;

    std::vector<Element> basis;
    std::vector<Representation> reps;
    for (std::size_t k = 0; k < L.generators.size(); ++k) {
        const Element& g = L.generators[k];
        if (g.is_zero()) continue;
        Scalar lc = lm(g, order, n).second;
        basis.push_back(g.scaled(lc.inverse()));
        Representation rep(L.generators.size());
        rep[k] = Element::unit(n, lc.inverse());
        reps.push_back(std::move(rep));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);

    auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& p) {
        return Monomial::lcm(lm(basis[p.first], order, n).first,
                             lm(basis[p.second], order, n).first);
    };

    while (!pairs.empty()) {
        std::size_t best = 0;
        Monomial best_lcm = lcm_of(pairs[0]);
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            Monomial cand = lcm_of(pairs[k]);
            if (compare_pbw(cand, best_lcm, order, n) == Ordering::less) {
                best = k;
                best_lcm = std::move(cand);
            }
        }
        auto [a, b] = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        Element sp = s_polynomial(basis[a], basis[b], order, alg);
        // representation of the S-polynomial from those of its parents
        Representation sp_rep(L.generators.size());
        {
            Monomial la = lm(basis[a], order, n).first;
            Monomial lb = lm(basis[b], order, n).first;
            Monomial gamma = Monomial::lcm(la, lb);
            Element pa = multiply(Element(gamma - la, Scalar(1)), basis[a], alg);
            Element pb = multiply(Element(gamma - lb, Scalar(1)), basis[b], alg);
            Scalar ca = lm(pa, order, n).second.inverse();
            Scalar cb = lm(pb, order, n).second.inverse();
            Element ua(Monomial(gamma - la), ca);
            Element ub(Monomial(gamma - lb), cb);
            for (std::size_t k = 0; k < sp_rep.size(); ++k) {
                if (!reps[a][k].is_zero()) sp_rep[k] += multiply(ua, reps[a][k], alg);
                if (!reps[b][k].is_zero()) sp_rep[k] -= multiply(ub, reps[b][k], alg);
            }
        }

        std::vector<Element> quot;
        Element r = left_normal_form(sp, basis, order, alg, &quot);

        CompletionEvent ev;
        ev.a = a;
        ev.b = b;
        if (r.is_zero()) {
            ev.reduced_to_zero = true;
            out.trace.push_back(ev);
            continue;
        }
        Representation r_rep = sp_rep;
        for (std::size_t g = 0; g < basis.size(); ++g) {
            if (quot[g].is_zero()) continue;
            for (std::size_t k = 0; k < r_rep.size(); ++k)
                if (!reps[g][k].is_zero()) r_rep[k] -= multiply(quot[g], reps[g][k], alg);
        }
        Scalar lc = lm(r, order, n).second;
        Element monic_r = r.scaled(lc.inverse());
        for (auto& comp : r_rep) comp = comp.scaled(lc.inverse());

        std::size_t idx = basis.size();
        for (std::size_t g = 0; g < basis.size(); ++g) pairs.emplace_back(g, idx);
        basis.push_back(std::move(monic_r));
        reps.push_back(std::move(r_rep));
        ev.reduced_to_zero = false;
        ev.adjoined_index = idx;
        out.trace.push_back(ev);
    }

    // inter-reduce to the unique reduced monic basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<Element> others;
            std::vector<std::size_t> other_idx;
            for (std::size_t g = 0; g < basis.size(); ++g)
                if (g != k) {
                    others.push_back(basis[g]);
                    other_idx.push_back(g);
                }
            std::vector<Element> quot;
            Element r = left_normal_form(basis[k], others, order, alg, &quot);
            if (r == basis[k]) continue;
            changed = true;
            Representation rep = reps[k];
            for (std::size_t g = 0; g < others.size(); ++g) {
                if (quot[g].is_zero()) continue;
                const Representation& orep = reps[other_idx[g]];
                for (std::size_t i = 0; i < rep.size(); ++i)
                    if (!orep[i].is_zero()) rep[i] -= multiply(quot[g], orep[i], alg);
            }
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(k));
                reps.erase(reps.begin() + static_cast<long>(k));
            } else {
                Scalar lc = lm(r, order, n).second;
                basis[k] = r.scaled(lc.inverse());
                for (auto& comp : rep) comp = comp.scaled(lc.inverse());
                reps[k] = std::move(rep);
            }
            break;  // indices shifted, restart the scan
        }
    }

    std::vector<std::size_t> perm(basis.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        return compare_pbw(lm(basis[x], order, n).first, lm(basis[y], order, n).first, order, n) ==
               Ordering::less;
    });
    for (std::size_t k : perm) {
        out.elements.push_back(basis[k]);
        out.representations.push_back(reps[k]);
    }
    return out;
}

inline bool ideal_membership(const Element& f, const IdealPresentation& L, const Algebra& alg) {
    GroebnerBasis G = buchberger(L, alg);
    return left_normal_form(f, G.elements, G.order, alg).is_zero();
}

/// Serializes the basis with its completion trace.
inline std::string to_string(const GroebnerBasis& G, int n) {
    std::string out;
    out += "order: " + G.order.name() + "\n";
    for (std::size_t k = 0; k < G.elements.size(); ++k)
        out += "g" + std::to_string(k) + " = " + to_string(G.elements[k], G.order, n) + "\n";
    out += "trace:\n";
    for (const auto& ev : G.trace) {
        out += "  pair (" + std::to_string(ev.a) + "," + std::to_string(ev.b) + ") -> ";
        out += ev.reduced_to_zero ? "reduced-to-zero"
                                  : "adjoined as element " + std::to_string(ev.adjoined_index);
        out += "\n";
    }
    return out;
}

}  // namespace dqn

#endif
