#ifndef DQN_FREE_ALGEBRA_HPP
#define DQN_FREE_ALGEBRA_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace dqn {

/// A generator D_ij of the free algebra, indexed from 1.
struct Gen {
    int row;
    int col;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

inline std::string to_string(const Gen& g) {
    return "D[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

/// A word in the free monoid on the generators; the empty word is 1.
using Word = std::vector<Gen>;

enum class Ordering { less, equal, greater };

/// Deg-lex: degree first, then lexicographic in the letter order
/// D_kl < D_ij iff k<i, or k=i and l<j.
inline Ordering compare_deglex(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? Ordering::less : Ordering::greater;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] != v[k]) return u[k] < v[k] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

struct WordDegLexLess {
    bool operator()(const Word& u, const Word& v) const {
        return compare_deglex(u, v) == Ordering::less;
    }
};

/// Finitely supported K-linear combination of words; no zero coefficients
/// are stored.
class FreePoly {
public:
    using Terms = std::map<Word, Scalar, WordDegLexLess>;

    FreePoly() = default;
    FreePoly(Word w, Scalar c) { add_term(std::move(w), std::move(c)); }

    static FreePoly monomial(Word w) { return FreePoly(std::move(w), Scalar(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word w, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::pair<Word, Scalar> leading_term() const {
        if (terms_.empty()) throw zero_polynomial{};
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    Word leading_word() const { return leading_term().first; }

    FreePoly& operator+=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    FreePoly& operator-=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }

    FreePoly scaled(const Scalar& c) const {
        FreePoly out;
        if (c.is_zero()) return out;
        for (const auto& [w, a] : terms_) out.terms_.emplace(w, a * c);
        return out;
    }

    FreePoly monic() const {
        return scaled(leading_term().second.inverse());
    }

    /// prefix * this * suffix
    FreePoly in_context(const Word& prefix, const Word& suffix) const {
        FreePoly out;
        for (const auto& [w, c] : terms_) {
            Word u;
            u.reserve(prefix.size() + w.size() + suffix.size());
            u.insert(u.end(), prefix.begin(), prefix.end());
            u.insert(u.end(), w.begin(), w.end());
            u.insert(u.end(), suffix.begin(), suffix.end());
            out.terms_.emplace(std::move(u), c);
        }
        return out;
    }

    friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
        FreePoly out;
        for (const auto& [u, c] : a.terms_)
            for (const auto& [v, d] : b.terms_) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out.add_term(std::move(w), c * d);
            }
        return out;
    }

    friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FreePoly& a, const FreePoly& b) { return !(a == b); }

private:
    Terms terms_;
};

enum class RelationKind { A, B, C };

/// One defining relation of D_q(n) as an element of the free algebra,
/// oriented so its leading word has length 2.
struct Relation {
    RelationKind kind;
    // kind A, B: (i,j,s,t); kind C: (i,j,k) with j>k, fourth entry unused
    int i = 0, j = 0, s = 0, t = 0;
    FreePoly poly;
    Gen lead_first;
    Gen lead_second;

    std::string name() const {
        switch (kind) {
            case RelationKind::A:
                return "f[" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(s) + "," + std::to_string(t) + "]";
            case RelationKind::B:
                return "g[" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(s) + "," + std::to_string(t) + "]";
            default:
                return "h[" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(i) + "," + std::to_string(s) + "]";
        }
    }
};

/// The defining relation set S of D_q(n):
///   (a) f_ijst = D_ij D_st - q D_st D_ij          (i>s, j<=t)
///   (b) g_ijst = D_ij D_st - D_st D_ij - (q-1) D_sj D_it   (i>s, j>t)
///   (c) h_ijik = D_ij D_ik - D_ik D_ij            (j>k, stored once per pair)
inline std::vector<Relation> generate_relations(int n, const FieldConfig& cfg = {}) {
    if (n < 2) throw bad_dimension(n);
    std::vector<Relation> out;
    const Scalar q = Scalar::q(cfg);
    const Scalar qm1 = Scalar::q_minus_one(cfg);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int s = 1; s < i; ++s)
                for (int t = 1; t <= n; ++t) {
                    Relation r;
                    r.i = i;
                    r.j = j;
                    r.s = s;
                    r.t = t;
                    r.lead_first = {i, j};
                    r.lead_second = {s, t};
                    r.poly.add_term({{i, j}, {s, t}}, Scalar(1));
                    if (j <= t) {
                        r.kind = RelationKind::A;
                        r.poly.add_term({{s, t}, {i, j}}, -q);
                    } else {
                        r.kind = RelationKind::B;
                        r.poly.add_term({{s, t}, {i, j}}, Scalar(-1));
                        r.poly.add_term({{s, j}, {i, t}}, -qm1);
                    }
                    out.push_back(std::move(r));
                }
    // same-row commutators, one per unordered pair, oriented j > k
    for (int i = 1; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
            for (int k = 1; k < j; ++k) {
                Relation r;
                r.kind = RelationKind::C;
                r.i = i;
                r.j = j;
                r.s = k;
                r.lead_first = {i, j};
                r.lead_second = {i, k};
                r.poly.add_term({{i, j}, {i, k}}, Scalar(1));
                r.poly.add_term({{i, k}, {i, j}}, Scalar(-1));
                out.push_back(std::move(r));
            }
    return out;
}

/// Lookup from length-2 leading words to their relations.
class RuleIndex {
public:
    explicit RuleIndex(const std::vector<Relation>& rels) {
        for (const auto& r : rels) index_.emplace(std::make_pair(r.lead_first, r.lead_second), &r);
    }

    const Relation* find(const Gen& a, const Gen& b) const {
        auto it = index_.find({a, b});
        return it == index_.end() ? nullptr : it->second;
    }

    std::size_t size() const { return index_.size(); }

private:
    std::map<std::pair<Gen, Gen>, const Relation*> index_;
};

inline bool is_normal_word(const Word& w, const RuleIndex& rules) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (rules.find(w[p], w[p + 1])) return false;
    return true;
}

enum class ReductionStrategy { leftmost, rightmost };

/// One recorded rewriting step: coeff * prefix * monic(rule) * suffix was
/// subtracted from the running polynomial.
struct ReductionStep {
    const Relation* rule;
    Word prefix;
    Word suffix;
    Scalar coeff;
};

/// Rewrites f to its normal form modulo the relation set indexed by `rules`.
/// Each step replaces an occurrence of a leading word by the lower terms of
/// its (monic) rule; every replacement is strictly deg-lex smaller, so the
/// loop terminates.
inline FreePoly reduce(const FreePoly& f, const RuleIndex& rules,
                       ReductionStrategy strategy = ReductionStrategy::leftmost,
                       std::vector<ReductionStep>* trace = nullptr) {
    FreePoly work = f;
    FreePoly result;
    while (!work.is_zero()) {
        auto [w, c] = work.leading_term();
        work.add_term(w, -c);

        const Relation* rule = nullptr;
        std::size_t pos = 0;
        if (strategy == ReductionStrategy::leftmost) {
            for (std::size_t p = 0; p + 1 < w.size(); ++p)
                if ((rule = rules.find(w[p], w[p + 1]))) {
                    pos = p;
                    break;
                }
        } else {
            for (std::size_t p = w.size(); p >= 2; --p)
                if ((rule = rules.find(w[p - 2], w[p - 1]))) {
                    pos = p - 2;
                    break;
                }
        }
        if (!rule) {
            result.add_term(std::move(w), c);
            continue;
        }

        Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
        Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
        // tail = leading word - monic rule; all its words are below the lead
        FreePoly tail = FreePoly({rule->lead_first, rule->lead_second}, Scalar(1)) -
                        rule->poly.monic();
        work += tail.in_context(prefix, suffix).scaled(c);
        if (trace) trace->push_back({rule, std::move(prefix), std::move(suffix), c});
    }
    return result;
}

inline FreePoly reduce(const FreePoly& f, const std::vector<Relation>& rels,
                       ReductionStrategy strategy = ReductionStrategy::leftmost,
                       std::vector<ReductionStep>* trace = nullptr) {
    return reduce(f, RuleIndex(rels), strategy, trace);
}

/// An intersection overlap w = lead(left)·x = y·lead(right) of two
/// length-2 leading words; w always has length 3 with split position 1.
struct Ambiguity {
    Word w;
    const Relation* left;
    const Relation* right;
    std::size_t overlap_split = 1;
};

/// Enumerates all intersection ambiguities of the relation set. Leading
/// words all have length 2 and are pairwise distinct, so no inclusion
/// ambiguities can occur; this is asserted, not assumed.
inline std::vector<Ambiguity> ambiguities(const std::vector<Relation>& rels) {
    RuleIndex idx(rels);
    if (idx.size() != rels.size())
        throw std::logic_error("duplicate leading words in relation set");
    for (const auto& r : rels)
        if (r.poly.leading_word().size() != 2)
            throw std::logic_error("relation with leading word of length != 2");

    std::vector<Ambiguity> out;
    for (const auto& g1 : rels)
        for (const auto& g2 : rels) {
            if (g1.lead_second != g2.lead_first) continue;
            out.push_back({{g1.lead_first, g1.lead_second, g2.lead_second}, &g1, &g2});
        }
    return out;
}

/// The intersection composition (g1, g2)_w = monic(g1)·x - y·monic(g2).
inline FreePoly composition(const Ambiguity& amb) {
    Word suffix{amb.w[2]};
    Word prefix{amb.w[0]};
    return amb.left->poly.monic().in_context({}, suffix) -
           amb.right->poly.monic().in_context(prefix, {});
}

struct GsbFailure {
    Ambiguity ambiguity;
    FreePoly normal_form;
};

struct GsbReport {
    int n = 0;
    std::size_t ambiguity_count = 0;
    std::vector<GsbFailure> failures;
    bool passed = false;
};

/// Checks that every composition of the given relation set reduces to zero.
inline GsbReport verify_relations(int n, const std::vector<Relation>& rels) {
    GsbReport report;
    report.n = n;
    RuleIndex idx(rels);
    auto ambs = ambiguities(rels);
    report.ambiguity_count = ambs.size();
    for (const auto& amb : ambs) {
        FreePoly nf = reduce(composition(amb), idx);
        if (!nf.is_zero()) report.failures.push_back({amb, std::move(nf)});
    }
    report.passed = report.failures.empty();
    return report;
}

/// Mechanically re-proves that the defining relations of D_q(n) form a
/// Groebner-Shirshov basis.
inline GsbReport verify_gsb(int n, const FieldConfig& cfg = {}) {
    return verify_relations(n, generate_relations(n, cfg));
}

inline std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += "*";
        out += to_string(w[k]);
    }
    return out;
}

inline std::string to_string(const FreePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    // descending deg-lex
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = to_string(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) cs = cs.substr(1);
        bool compound = cs.find('+') != std::string::npos ||
                        cs.find('-') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (w.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += to_string(w);
        } else {
            out += cs + "*" + to_string(w);
        }
    }
    return out;
}

/// One relation per line, for golden-file exports.
inline std::string relation_listing(const std::vector<Relation>& rels) {
    std::string out;
    for (const auto& r : rels) out += r.name() + ": " + to_string(r.poly) + "\n";
    return out;
}

}  // namespace dqn

#endif
