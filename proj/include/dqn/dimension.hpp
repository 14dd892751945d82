#ifndef DQN_DIMENSION_HPP
#define DQN_DIMENSION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "pbw.hpp"

namespace dqn {

using boost::multiprecision::cpp_int;

inline cpp_int binomial(unsigned top, unsigned bottom) {
    if (bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    cpp_int out = 1;
    for (unsigned k = 1; k <= bottom; ++k) {
        out *= top - bottom + k;
        out /= k;
    }
    return out;
}

/// Closed-form Hilbert data of D_q(n): the series 1/(1-t)^(n^2) and its
/// coefficient function.
struct HilbertSeries {
    int n = 0;
    std::string closed_form;
};

inline HilbertSeries hilbert_series(int n) {
    if (n < 2) throw bad_dimension(n);
    return {n, "1/(1-t)^" + std::to_string(n * n)};
}

/// Coefficient of t^k in 1/(1-t)^(n^2): the number of PBW monomials of
/// total degree k.
inline cpp_int hilbert_function(int n, unsigned k) {
    if (n < 2) throw bad_dimension(n);
    unsigned v = static_cast<unsigned>(n) * static_cast<unsigned>(n);
    return binomial(k + v - 1, v - 1);
}

/// Minimal generators of the leading-monomial ideal of a reduced Groebner
/// basis: an antichain under componentwise divisibility.
struct StaircaseIdeal {
    std::vector<Monomial> minimal_generators;

    static StaircaseIdeal from_basis(const GroebnerBasis& G, int n) {
        std::vector<Monomial> lms;
        for (const auto& g : G.elements) lms.push_back(lm(g, G.order, n).first);
        StaircaseIdeal out;
        for (std::size_t a = 0; a < lms.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < lms.size(); ++b)
                if (a != b && lms[b].divides(lms[a]) && !(lms[a].divides(lms[b]) && b > a)) {
                    redundant = true;
                    break;
                }
            if (!redundant) out.minimal_generators.push_back(lms[a]);
        }
        return out;
    }

    bool contains(const Monomial& m) const {
        for (const auto& g : minimal_generators)
            if (g.divides(m)) return true;
        return false;
    }
};

/// Number of degree-k standard monomials of the quotient; requires a
/// degree-compatible ordering so that leading monomials respect the
/// grading.
inline cpp_int quotient_hilbert_function(const GroebnerBasis& G, unsigned k, int n) {
    if (!G.order.degree_compatible() && !G.elements.empty())
        throw order_not_degree_compatible{};
    StaircaseIdeal st = StaircaseIdeal::from_basis(G, n);
    cpp_int count = 0;
    for (const auto& m : monomials_of_degree(n, k))
        if (!st.contains(m)) ++count;
    return count;
}

struct DimensionReport {
    int gk_dim = 0;
    std::vector<Gen> witness_variable_set;
    std::vector<cpp_int> hilbert_values;  // h(0..k_max)
    int growth_dimension = 0;             // 1 + degree of the eventual polynomial
    bool cross_checked = false;           // growth_dimension == gk_dim
};

namespace detail {

inline std::vector<std::size_t> mask_to_indices(unsigned long mask, std::size_t vars) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < vars; ++k)
        if (mask & (1ul << k)) out.push_back(k);
    return out;
}

/// Dimension from Hilbert values by repeated finite differencing of the
/// stable tail: the first difference order that vanishes identically gives
/// 1 + the polynomial degree.
inline int growth_dimension(const std::vector<cpp_int>& values, std::size_t tail_start) {
    std::vector<cpp_int> v(values.begin() + static_cast<long>(tail_start), values.end());
    for (int j = 0;; ++j) {
        if (std::all_of(v.begin(), v.end(), [](const cpp_int& x) { return x == 0; })) return j;
        if (v.size() < 2) return -1;  // window exhausted before the differences stabilized
        for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = v[k + 1] - v[k];
        v.pop_back();
    }
}

}  // namespace detail

/// GK dimension of D_q(n)/L from the staircase of a reduced basis: the
/// maximum size of a variable subset meeting no generator support, with
/// the lexicographically first witness of that size, cross-checked against
/// the growth of the quotient Hilbert function.
inline DimensionReport gk_dim_quotient(const GroebnerBasis& G, const Algebra& alg) {
    const int n = alg.n();
    const std::size_t vars = static_cast<std::size_t>(n) * n;
    StaircaseIdeal st = StaircaseIdeal::from_basis(G, n);

    std::vector<unsigned long> supports;
    for (const auto& g : st.minimal_generators) {
        unsigned long s = 0;
        for (std::size_t k = 0; k < vars; ++k)
            if (g.exp[k] > 0) s |= 1ul << k;
        supports.push_back(s);
    }

    int best_size = -1;
    std::vector<std::size_t> best;
    for (unsigned long mask = 0; mask < (1ul << vars); ++mask) {
        bool ok = true;
        for (unsigned long s : supports)
            if ((s & mask) == s) {
                ok = false;
                break;
            }
        if (!ok) continue;
        auto idx = detail::mask_to_indices(mask, vars);
        int size = static_cast<int>(idx.size());
        if (size > best_size || (size == best_size && idx < best)) {
            best_size = size;
            best = std::move(idx);
        }
    }
    DimensionReport report;
    report.gk_dim = std::max(best_size, 0);
    for (std::size_t k : best)
        report.witness_variable_set.push_back({static_cast<int>(k) / n + 1,
                                               static_cast<int>(k) % n + 1});

    // Hilbert-growth cross-check under a degree-compatible order.
    const GroebnerBasis* basis = &G;
    GroebnerBasis recomputed;
    if (!G.order.degree_compatible() && !G.elements.empty()) {
        recomputed = buchberger({G.elements, OrderSpec::deg_paper_lex()}, alg);
        basis = &recomputed;
    }
    unsigned tail_start = 0;
    for (const auto& g : StaircaseIdeal::from_basis(*basis, n).minimal_generators)
        tail_start += g.degree();
    unsigned k_max = tail_start + vars + 2;
    for (unsigned k = 0; k <= k_max; ++k)
        report.hilbert_values.push_back(quotient_hilbert_function(*basis, k, n));
    report.growth_dimension = detail::growth_dimension(report.hilbert_values, tail_start);
    report.cross_checked = report.growth_dimension == report.gk_dim;
    return report;
}

inline std::size_t gen_index(const Gen& g, int n) {
    return static_cast<std::size_t>(g.row - 1) * n + (g.col - 1);
}

/// Nonempty proper subset of the generators, listed in index order.
struct KeepSet {
    std::vector<bool> mask;  // one flag per generator, row-major

    static KeepSet of(const std::vector<Gen>& gens, int n) {
        KeepSet out;
        out.mask.assign(static_cast<std::size_t>(n) * n, false);
        for (const auto& g : gens) out.mask[gen_index(g, n)] = true;
        return out;
    }

    std::vector<Gen> generators(int n) const {
        std::vector<Gen> out;
        for (std::size_t k = 0; k < mask.size(); ++k)
            if (mask[k]) out.push_back({static_cast<int>(k) / n + 1, static_cast<int>(k) % n + 1});
        return out;
    }

    bool supports(const Monomial& m) const {
        for (std::size_t k = 0; k < mask.size(); ++k)
            if (!mask[k] && m.exp[k] > 0) return false;
        return true;
    }
};

/// Builds a validated elimination ordering for the keep-set, or throws
/// order_not_solvable when no candidate passes: F2 tails can recombine
/// eliminated variables into kept ones, so existence is genuinely
/// case-by-case.
inline OrderSpec elimination_order(const KeepSet& keep, const Algebra& alg,
                                   int validation_cap = 2) {
    // graded inners first; the ungraded pure-lex inners cover keep-sets
    // where one eliminated variable must dominate a product of two others
    // (e.g. d22 above d12*d21 when only d11 is kept)
    const std::vector<OrderSpec> inners = {OrderSpec::deg_paper_lex(), OrderSpec::paper_lex(),
                                           OrderSpec::index_lex_desc(), OrderSpec::index_lex_asc()};
    for (const auto& inner : inners) {
        OrderSpec cand = OrderSpec::block_elimination(keep.mask, inner, OrderSpec::deg_paper_lex());
        if (validate_ordering(cand, alg, validation_cap).passed) return cand;
    }
    throw order_not_solvable("no validated elimination order for keep-set");
}

/// Groebner-based intersection with the kept subalgebra span: returns the
/// basis elements all of whose monomials are supported on the keep-set.
/// An empty result certifies zero intersection.
inline std::vector<Element> eliminate(const IdealPresentation& L, const KeepSet& keep,
                                      const Algebra& alg) {
    OrderSpec order = elimination_order(keep, alg);
    GroebnerBasis G = buchberger({L.generators, order}, alg);
    std::vector<Element> out;
    for (const auto& g : G.elements) {
        bool kept = true;
        for (const auto& [m, c] : g.terms())
            if (!keep.supports(m)) {
                kept = false;
                break;
            }
        if (kept) out.push_back(g);
    }
    return out;
}

enum class EliminationVerdict { nonzero, zero, unverified };

struct EliminationEntry {
    std::vector<Gen> keep;
    EliminationVerdict verdict = EliminationVerdict::unverified;
    std::vector<Element> intersection_basis;
};

struct EliminationCertificate {
    int t = 0;  // GK dimension of the quotient, computed, not trusted
    std::vector<EliminationEntry> entries;
    bool passed = false;  // every verified keep-set of size t+1 met L nontrivially
};

/// Checks the elimination property: for every keep-set of size t+1 that
/// admits a validated elimination ordering, L meets the kept span
/// nontrivially. Keep-sets without a validated ordering are reported as
/// unverified, never asserted.
inline EliminationCertificate elimination_certificate(const IdealPresentation& L,
                                                      const Algebra& alg) {
    const int n = alg.n();
    const std::size_t vars = static_cast<std::size_t>(n) * n;
    GroebnerBasis G = buchberger({L.generators, OrderSpec::deg_paper_lex()}, alg);
    EliminationCertificate cert;
    cert.t = gk_dim_quotient(G, alg).gk_dim;

    unsigned size = static_cast<unsigned>(cert.t) + 1;
    std::vector<std::size_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    bool more = size <= vars;
    cert.passed = true;
    while (more) {
        KeepSet keep;
        keep.mask.assign(vars, false);
        for (std::size_t k : idx) keep.mask[k] = true;
        EliminationEntry entry;
        entry.keep = keep.generators(n);
        if (size == vars) {
            // keep-set is everything; the intersection is L itself
            entry.verdict = EliminationVerdict::nonzero;
            entry.intersection_basis = G.elements;
        } else {
            try {
                entry.intersection_basis = eliminate(L, keep, alg);
                entry.verdict = entry.intersection_basis.empty() ? EliminationVerdict::zero
                                                                 : EliminationVerdict::nonzero;
            } catch (const order_not_solvable&) {
                entry.verdict = EliminationVerdict::unverified;
            }
        }
        if (entry.verdict == EliminationVerdict::zero) cert.passed = false;
        cert.entries.push_back(std::move(entry));

        // next combination
        more = false;
        for (std::size_t k = size; k-- > 0;) {
            if (idx[k] + (size - k) < vars) {
                ++idx[k];
                for (std::size_t m = k + 1; m < size; ++m) idx[m] = idx[m - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return cert;
}

}  // namespace dqn

#endif
