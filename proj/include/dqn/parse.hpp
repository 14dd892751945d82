#ifndef DQN_PARSE_HPP
#define DQN_PARSE_HPP

#include <cctype>
#include <string>

#include "errors.hpp"
#include "pbw.hpp"

namespace dqn {

namespace detail {

/// Recursive-descent evaluator for element expressions:
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := atom ['^' int]
///   atom  := uint | 'q' | 'd[' int ',' int ']' | '(' expr ')'
/// Inputs are normalized on the fly: generator factors may appear in any
/// order, multiplication is the algebra product.
class ElementParser {
public:
    ElementParser(const std::string& src, const Algebra& alg) : src_(src), alg_(alg) {}

    Element run() {
        Element e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw parse_error(pos_, "end of input");
        return e;
    }

private:
    Element expr() {
        Element acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Element term() {
        Element acc = unary();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = multiply(acc, unary(), alg_);
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                Element rhs = unary();
                acc = acc.scaled(as_scalar(rhs, at).inverse());
            } else {
                return acc;
            }
        }
    }

    Element unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return Element{} - unary();
        }
        return power();
    }

    Element power() {
        Element base = atom();
        skip_ws();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        long e = integer();
        if (negative) return Element::unit(alg_.n(), as_scalar(base, at).pow(-static_cast<int>(e)));
        Element acc = Element::unit(alg_.n());
        for (long k = 0; k < e; ++k) acc = multiply(acc, base, alg_);
        return acc;
    }

    Element atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (c == 'q') {
            ++pos_;
            return Element::unit(alg_.n(), Scalar::q(alg_.field()));
        }
        if (c == 'd' || c == 'D') {
            ++pos_;
            expect('[');
            std::size_t at = pos_;
            long i = integer();
            expect(',');
            long j = integer();
            expect(']');
            if (i < 1 || i > alg_.n() || j < 1 || j > alg_.n())
                throw index_out_of_range(static_cast<int>(i), static_cast<int>(j), alg_.n());
            (void)at;
            return Element::generator(alg_.n(), static_cast<int>(i), static_cast<int>(j));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Element::unit(alg_.n(), Scalar(Rational(integer())));
        }
        throw parse_error(pos_, "number, 'q', 'd[i,j]' or '('");
    }

    Scalar as_scalar(const Element& e, std::size_t at) const {
        if (e.is_zero()) return Scalar(0);
        if (e.terms().size() == 1 && e.terms().begin()->first.is_unit())
            return e.terms().begin()->second;
        throw parse_error(at, "a scalar operand");
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error(pos_, "an integer");
        return std::stol(src_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw parse_error(pos_, std::string("'") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    const std::string& src_;
    const Algebra& alg_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an element expression and returns it in PBW normal form.
inline Element parse_element(const std::string& src, const Algebra& alg) {
    return detail::ElementParser(src, alg).run();
}

/// Parses a coefficient expression (no generators allowed).
inline Scalar parse_scalar(const std::string& src, const FieldConfig& cfg = {}) {
    Algebra scratch(2, cfg);
    Element e = parse_element(src, scratch);
    if (e.is_zero()) return Scalar(0);
    if (e.terms().size() == 1 && e.terms().begin()->first.is_unit())
        return e.terms().begin()->second;
    throw parse_error(0, "a scalar expression");
}

}  // namespace dqn

#endif
