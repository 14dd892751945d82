#ifndef DQN_PBW_HPP
#define DQN_PBW_HPP

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "free_algebra.hpp"
#include "scalar.hpp"

namespace dqn {

/// Exponent matrix of a PBW monomial d_11^k11 ... d_nn^knn, stored
/// row-major. The map key order (plain vector comparison) is only a storage
/// order; all mathematical comparisons go through OrderSpec.
struct Monomial {
    std::vector<unsigned> exp;

    static Monomial unit(int n) { return {std::vector<unsigned>(static_cast<std::size_t>(n) * n, 0)}; }
    static Monomial generator(int n, int row, int col) {
        Monomial m = unit(n);
        m.exp[static_cast<std::size_t>(row - 1) * n + (col - 1)] = 1;
        return m;
    }

    unsigned degree() const { return std::accumulate(exp.begin(), exp.end(), 0u); }
    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& o) const {
        for (std::size_t k = 0; k < exp.size(); ++k)
            if (exp[k] > o.exp[k]) return false;
        return true;
    }

    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (std::size_t k = 0; k < out.exp.size(); ++k) out.exp[k] += b.exp[k];
        return out;
    }
    /// componentwise difference; requires b | a
    friend Monomial operator-(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (std::size_t k = 0; k < out.exp.size(); ++k) out.exp[k] -= b.exp[k];
        return out;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (std::size_t k = 0; k < out.exp.size(); ++k)
            out.exp[k] = std::max(out.exp[k], b.exp[k]);
        return out;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Monomial orderings on the PBW basis. paper_lex is the ordering of the
/// solvability proof: total degree first, then reverse-lex in the letter
/// order "row ascending, column descending within a row". natural_lex uses
/// the plain index-induced letter order instead (it is not a monomial
/// ordering for D_q(n); kept for the negative tests).
class OrderSpec {
public:
    enum class Kind {
        paper_lex,
        deg_paper_lex,
        natural_lex,
        index_lex_desc,
        index_lex_asc,
        block_elimination
    };

    static OrderSpec paper_lex() { return OrderSpec(Kind::paper_lex); }
    static OrderSpec deg_paper_lex() { return OrderSpec(Kind::deg_paper_lex); }
    static OrderSpec natural_lex() { return OrderSpec(Kind::natural_lex); }
    /// Ungraded pure lex, most significant variable d[n,n] (desc) or
    /// d[1,1] (asc). Not degree compatible; useful as inner orders of
    /// block eliminations, where a single eliminated variable must
    /// sometimes outweigh a product of two others.
    static OrderSpec index_lex_desc() { return OrderSpec(Kind::index_lex_desc); }
    static OrderSpec index_lex_asc() { return OrderSpec(Kind::index_lex_asc); }
    static OrderSpec block_elimination(std::vector<bool> keep, OrderSpec inner, OrderSpec outer) {
        OrderSpec s(Kind::block_elimination);
        s.keep_ = std::move(keep);
        s.inner_ = std::make_shared<OrderSpec>(std::move(inner));
        s.outer_ = std::make_shared<OrderSpec>(std::move(outer));
        return s;
    }

    Kind kind() const { return kind_; }
    const std::vector<bool>& keep() const { return keep_; }
    const OrderSpec& inner() const { return *inner_; }
    const OrderSpec& outer() const { return *outer_; }

    std::string name() const {
        switch (kind_) {
            case Kind::paper_lex: return "paper-lex";
            case Kind::deg_paper_lex: return "deg-paper-lex";
            case Kind::natural_lex: return "natural-lex";
            case Kind::index_lex_desc: return "index-lex-desc";
            case Kind::index_lex_asc: return "index-lex-asc";
            default: {
                std::string out = "elim:";
                bool first = true;
                for (std::size_t k = 0; k < keep_.size(); ++k)
                    if (keep_[k]) {
                        if (!first) out += ",";
                        first = false;
                        out += std::to_string(k);
                    }
                return out;
            }
        }
    }

    /// Orders compatible with total degree support Hilbert-function counting.
    bool degree_compatible() const {
        return kind_ == Kind::paper_lex || kind_ == Kind::deg_paper_lex ||
               kind_ == Kind::natural_lex;
    }

private:
    explicit OrderSpec(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<bool> keep_;
    std::shared_ptr<OrderSpec> inner_;
    std::shared_ptr<OrderSpec> outer_;
};

/// Letter order of the solvability proof: d_kl < d_ij iff k<i, or k=i and
/// l>j (columns reversed within a row).
inline Ordering compare_generators_paper(const Gen& a, const Gen& b) {
    if (a.row != b.row) return a.row < b.row ? Ordering::less : Ordering::greater;
    if (a.col != b.col) return a.col > b.col ? Ordering::less : Ordering::greater;
    return Ordering::equal;
}

inline Ordering compare_generators_natural(const Gen& a, const Gen& b) {
    if (a == b) return Ordering::equal;
    return a < b ? Ordering::less : Ordering::greater;
}

namespace detail {

/// Reverse-lex tie-break among equal-degree monomials: scanning variables
/// in ascending rank, the first exponent difference decides, and having
/// more of the smaller variable makes the monomial smaller. This is the
/// unique +-compatible extension of the letter order that keeps the F2
/// tails d_sj d_it below d_st d_ij.
template <typename RankedIndices>
inline Ordering compare_revlex(const Monomial& u, const Monomial& v,
                               const RankedIndices& ascending) {
    for (std::size_t k : ascending) {
        if (u.exp[k] != v.exp[k]) return u.exp[k] > v.exp[k] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

/// Variable indices in ascending paper rank: rows ascending, columns
/// descending within a row.
inline std::vector<std::size_t> paper_ascending(int n) {
    std::vector<std::size_t> out;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= 0; --j) out.push_back(static_cast<std::size_t>(i) * n + j);
    return out;
}

inline std::vector<std::size_t> natural_ascending(int n) {
    std::vector<std::size_t> out(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
}

}  // namespace detail

inline Ordering compare_pbw(const Monomial& u, const Monomial& v, const OrderSpec& order, int n) {
    // All base orders compare total degree first (shorter factor sequences,
    // in particular proper prefixes, come first), then a reverse-lex
    // tie-break in the respective letter ranking decides.
    switch (order.kind()) {
        case OrderSpec::Kind::paper_lex:
        case OrderSpec::Kind::deg_paper_lex: {
            unsigned du = u.degree(), dv = v.degree();
            if (du != dv) return du < dv ? Ordering::less : Ordering::greater;
            return detail::compare_revlex(u, v, detail::paper_ascending(n));
        }
        case OrderSpec::Kind::natural_lex: {
            unsigned du = u.degree(), dv = v.degree();
            if (du != dv) return du < dv ? Ordering::less : Ordering::greater;
            return detail::compare_revlex(u, v, detail::natural_ascending(n));
        }
        case OrderSpec::Kind::index_lex_desc: {
            for (std::size_t k = u.exp.size(); k-- > 0;)
                if (u.exp[k] != v.exp[k])
                    return u.exp[k] < v.exp[k] ? Ordering::less : Ordering::greater;
            return Ordering::equal;
        }
        case OrderSpec::Kind::index_lex_asc: {
            for (std::size_t k = 0; k < u.exp.size(); ++k)
                if (u.exp[k] != v.exp[k])
                    return u.exp[k] < v.exp[k] ? Ordering::less : Ordering::greater;
            return Ordering::equal;
        }
        case OrderSpec::Kind::block_elimination: {
            // eliminated block decides first, so kept-only monomials sit at
            // the bottom
            const auto& keep = order.keep();
            Monomial ue = u, ve = v;
            for (std::size_t k = 0; k < keep.size(); ++k)
                if (keep[k]) ue.exp[k] = ve.exp[k] = 0;
            Ordering c = compare_pbw(ue, ve, order.inner(), n);
            if (c != Ordering::equal) return c;
            Monomial uk = u, vk = v;
            for (std::size_t k = 0; k < keep.size(); ++k)
                if (!keep[k]) uk.exp[k] = vk.exp[k] = 0;
            return compare_pbw(uk, vk, order.outer(), n);
        }
    }
    return Ordering::equal;
}

/// Finitely supported K-linear combination of PBW monomials; an element of
/// D_q(n) in normal form.
class Element {
public:
    using Terms = std::map<Monomial, Scalar>;

    Element() = default;
    Element(Monomial m, Scalar c) { add_term(std::move(m), std::move(c)); }

    static Element unit(int n, Scalar c = Scalar(1)) { return Element(Monomial::unit(n), std::move(c)); }
    static Element generator(int n, int row, int col) {
        return Element(Monomial::generator(n, row, col), Scalar(1));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element scaled(const Scalar& c) const {
        Element out;
        if (c.is_zero()) return out;
        for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * c);
        return out;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Leading term of f under the given ordering.
inline std::pair<Monomial, Scalar> lm(const Element& f, const OrderSpec& order, int n) {
    if (f.is_zero()) throw zero_element{};
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (compare_pbw(best->first, it->first, order, n) == Ordering::less) best = it;
    return {best->first, best->second};
}

/// Immutable context for D_q(n): size, field configuration, and the
/// confluent rewriting system of the defining relations.
class Algebra {
public:
    Algebra(int n, FieldConfig field = {})
        : n_(n), field_(std::move(field)), relations_(generate_relations(n, field_)),
          rules_(relations_) {}

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    int n() const { return n_; }
    const FieldConfig& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const RuleIndex& rules() const { return rules_; }

private:
    int n_;
    FieldConfig field_;
    std::vector<Relation> relations_;
    RuleIndex rules_;
};

inline Word to_word(const Monomial& m, int n) {
    Word w;
    for (std::size_t k = 0; k < m.exp.size(); ++k) {
        Gen g{static_cast<int>(k) / n + 1, static_cast<int>(k) % n + 1};
        for (unsigned e = 0; e < m.exp[k]; ++e) w.push_back(g);
    }
    return w;
}

inline FreePoly to_free(const Element& f, int n) {
    FreePoly out;
    for (const auto& [m, c] : f.terms()) out.add_term(to_word(m, n), c);
    return out;
}

/// Reads a normal word back as a PBW monomial; the word must be
/// index-nondecreasing (= contain no leading word of S).
inline Monomial from_word(const Word& w, int n) {
    Monomial m = Monomial::unit(n);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0 && w[k] < w[k - 1]) throw not_normal_form(to_string(w));
        m.exp[static_cast<std::size_t>(w[k].row - 1) * n + (w[k].col - 1)] += 1;
    }
    return m;
}

inline Element from_free(const FreePoly& f, int n) {
    Element out;
    for (const auto& [w, c] : f.terms()) out.add_term(from_word(w, n), c);
    return out;
}

/// Product in D_q(n): concatenate canonical words, rewrite to normal form,
/// read the result back in the PBW basis.
inline Element multiply(const Element& f, const Element& g, const Algebra& alg,
                        ReductionStrategy strategy = ReductionStrategy::leftmost) {
    Element out;
    for (const auto& [mf, cf] : f.terms()) {
        Word wf = to_word(mf, alg.n());
        for (const auto& [mg, cg] : g.terms()) {
            Word w = wf;
            Word wg = to_word(mg, alg.n());
            w.insert(w.end(), wg.begin(), wg.end());
            FreePoly nf = reduce(FreePoly(std::move(w), cf * cg), alg.rules(), strategy);
            for (const auto& [u, c] : nf.terms()) out.add_term(from_word(u, alg.n()), c);
        }
    }
    return out;
}

struct GeneratorPairResult {
    Gen lower;  // a_i
    Gen upper;  // a_j, with a_i < a_j in the ordering
    Scalar lambda;
    Element tail;  // f_ji
    bool ok = false;
};

struct SolvabilityReport {
    OrderSpec ordering = OrderSpec::paper_lex();
    std::vector<GeneratorPairResult> generator_pair_results;
    int degree_cap = 0;
    bool condition2_ok = false;
    bool condition3_ok = false;
    std::string failure_note;
    bool passed = false;
};

namespace detail {

inline void enumerate_monomials(int n, unsigned degree, std::vector<Monomial>& out) {
    Monomial m = Monomial::unit(n);
    std::size_t slots = m.exp.size();
    // compositions of `degree` into n^2 parts
    std::vector<unsigned> part(slots, 0);
    auto rec = [&](auto&& self, std::size_t k, unsigned rest) -> void {
        if (k + 1 == slots) {
            part[k] = rest;
            out.push_back({part});
            return;
        }
        for (unsigned e = 0; e <= rest; ++e) {
            part[k] = e;
            self(self, k + 1, rest - e);
        }
    };
    if (slots > 0) rec(rec, 0, degree);
}

}  // namespace detail

/// All PBW monomials of total degree exactly `degree`.
inline std::vector<Monomial> monomials_of_degree(int n, unsigned degree) {
    std::vector<Monomial> out;
    detail::enumerate_monomials(n, degree, out);
    return out;
}

inline std::vector<Monomial> monomials_up_to_degree(int n, unsigned cap) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= cap; ++d) detail::enumerate_monomials(n, d, out);
    return out;
}

/// Checks Definition-style solvability of the ordering: every ordered
/// generator pair decomposes as a_j a_i = lambda a_i a_j + f_ji with
/// LM(f_ji) below a_i a_j, and the bounded monomial-ordering axioms hold on
/// all products of total degree <= degree_cap. Well-orderedness is not
/// decided mechanically.
inline SolvabilityReport validate_ordering(const OrderSpec& order, const Algebra& alg,
                                           int degree_cap) {
    if (alg.n() < 2) throw bad_dimension(alg.n());
    const int n = alg.n();
    SolvabilityReport report;
    report.ordering = order;
    report.degree_cap = degree_cap;

    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back({i, j});
    std::sort(gens.begin(), gens.end(), [&](const Gen& a, const Gen& b) {
        return compare_pbw(Monomial::generator(n, a.row, a.col),
                           Monomial::generator(n, b.row, b.col), order, n) == Ordering::less;
    });

    bool pairs_ok = true;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            GeneratorPairResult pr;
            pr.lower = gens[a];
            pr.upper = gens[b];
            Element prod = multiply(Element::generator(n, gens[b].row, gens[b].col),
                                    Element::generator(n, gens[a].row, gens[a].col), alg);
            Monomial expected = Monomial::generator(n, gens[a].row, gens[a].col) +
                                Monomial::generator(n, gens[b].row, gens[b].col);
            auto it = prod.terms().find(expected);
            if (it == prod.terms().end()) {
                pr.ok = false;
            } else {
                pr.lambda = it->second;
                pr.tail = prod;
                pr.tail.add_term(expected, -pr.lambda);
                pr.ok = pr.tail.is_zero() ||
                        compare_pbw(lm(pr.tail, order, n).first, expected, order, n) ==
                            Ordering::less;
            }
            pairs_ok = pairs_ok && pr.ok;
            report.generator_pair_results.push_back(std::move(pr));
        }

    auto mons = monomials_up_to_degree(n, static_cast<unsigned>(degree_cap));
    const Monomial one = Monomial::unit(n);

    report.condition2_ok = true;
    for (const auto& a : mons)
        for (const auto& b : mons) {
            if (a.degree() + b.degree() > static_cast<unsigned>(degree_cap)) continue;
            Element ab = multiply(Element(a, Scalar(1)), Element(b, Scalar(1)), alg);
            for (const auto& e : mons) {
                if (a.degree() + b.degree() + e.degree() > static_cast<unsigned>(degree_cap))
                    continue;
                Element p = multiply(ab, Element(e, Scalar(1)), alg);
                Monomial gamma = lm(p, order, n).first;
                if (gamma == one || b == gamma) continue;
                if (compare_pbw(b, gamma, order, n) != Ordering::less) {
                    report.condition2_ok = false;
                    report.failure_note = "condition (2) fails for beta=" +
                                          std::to_string(b.degree()) + "-deg monomial";
                    goto cond2_done;
                }
            }
        }
cond2_done:

    report.condition3_ok = true;
    for (const auto& g : mons)
        for (const auto& a : mons) {
            if (g.degree() + a.degree() > static_cast<unsigned>(degree_cap)) continue;
            for (const auto& b : mons) {
                if (g.degree() + a.degree() + b.degree() > static_cast<unsigned>(degree_cap))
                    continue;
                if (compare_pbw(a, b, order, n) != Ordering::less) continue;
                for (const auto& e : mons) {
                    if (g.degree() + a.degree() + b.degree() + e.degree() >
                        static_cast<unsigned>(degree_cap))
                        continue;
                    Element pa = multiply(multiply(Element(g, Scalar(1)), Element(a, Scalar(1)), alg),
                                          Element(e, Scalar(1)), alg);
                    Element pb = multiply(multiply(Element(g, Scalar(1)), Element(b, Scalar(1)), alg),
                                          Element(e, Scalar(1)), alg);
                    Monomial la = lm(pa, order, n).first;
                    Monomial lb = lm(pb, order, n).first;
                    if (lb == one) continue;
                    if (compare_pbw(la, lb, order, n) != Ordering::less) {
                        report.condition3_ok = false;
                        report.failure_note = "condition (3) fails";
                        goto cond3_done;
                    }
                }
            }
        }
cond3_done:

    report.passed = pairs_ok && report.condition2_ok && report.condition3_ok;
    return report;
}

inline std::string to_string(const Monomial& m, int n) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.exp.size(); ++k) {
        if (m.exp[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += "d[" + std::to_string(static_cast<int>(k) / n + 1) + "," +
               std::to_string(static_cast<int>(k) % n + 1) + "]";
        if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
    }
    return out;
}

/// Canonical printing: terms descending under the active ordering,
/// coefficients parenthesized when compound.
inline std::string to_string(const Element& f, const OrderSpec& order, int n) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Scalar>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
        return compare_pbw(a->first, b->first, order, n) == Ordering::greater;
    });
    std::string out;
    for (auto* t : terms) {
        std::string cs = to_string(t->second);
        bool negative = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) cs = cs.substr(1);
        bool compound = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (compound && cs.front() != '(') cs = "(" + cs + ")";
        if (t->first.is_unit()) {
            out += cs;
        } else if (cs == "1") {
            out += to_string(t->first, n);
        } else {
            out += cs + "*" + to_string(t->first, n);
        }
    }
    return out;
}

}  // namespace dqn

#endif
