#ifndef DQN_SCALAR_HPP
#define DQN_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dqn {

using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in the quantum parameter q over the rationals.
/// Coefficients are stored ascending by degree; the zero polynomial is the
/// empty vector and no trailing zeros are kept.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    QPoly(long c) : QPoly(Rational(c)) {}
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly variable() { return QPoly(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& leading_coefficient() const {
        if (is_zero()) throw zero_polynomial{};
        return coeffs_.back();
    }

    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
        return QPoly(std::move(out));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    QPoly operator-() const {
        QPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPoly(std::move(out));
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw zero_polynomial{};
        QPoly r = a;
        std::vector<Rational> qc(a.coeffs_.size() > b.coeffs_.size() - 1
                                     ? a.coeffs_.size() - b.coeffs_.size() + 1
                                     : 0,
                                 Rational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Rational c = r.coeffs_.back() / b.coeffs_.back();
            qc[shift] += c;
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
                r.coeffs_[shift + k] -= c * b.coeffs_[k];
            r.trim();
        }
        return {QPoly(std::move(qc)), r};
    }

    /// Monic gcd over Q[q].
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(Rational(1) / a.coeffs_.back());
        return a;
    }

    QPoly scaled(const Rational& c) const {
        if (c == 0) return {};
        QPoly out = *this;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }

    QPoly pow(unsigned e) const {
        QPoly acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Coefficient field configuration: symbolic q, or q specialized to a fixed
/// nonzero rational.
class FieldConfig {
public:
    FieldConfig() = default;
    static FieldConfig symbolic() { return {}; }
    static FieldConfig specialized(const Rational& value) {
        if (value == 0) throw zero_q{};
        FieldConfig cfg;
        cfg.q_value_ = value;
        return cfg;
    }

    bool is_specialized() const { return q_value_.has_value(); }
    const Rational& q_value() const { return *q_value_; }

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    std::optional<Rational> q_value_;
};

/// Element of K = Q(q): a rational function num/den in canonical form
/// (coprime, monic denominator, zero is 0/1).
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw zero_polynomial{};
        canonicalize();
    }
    explicit Scalar(QPoly num) : num_(std::move(num)), den_(1) {}

    /// The quantum parameter itself, respecting specialization.
    static Scalar q(const FieldConfig& cfg) {
        if (cfg.is_specialized()) return Scalar(cfg.q_value());
        return Scalar(QPoly::variable());
    }
    static Scalar q_minus_one(const FieldConfig& cfg) { return q(cfg) - Scalar(1); }

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(1) && den_ == QPoly(1); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const {
        Scalar out = *this;
        out.num_ = -out.num_;
        return out;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw inversion_of_zero{};
        return Scalar(den_, num_);
    }

    Scalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        return Scalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Evaluate at a concrete q value; the denominator must not vanish there.
    Rational evaluate(const Rational& qv) const {
        Rational d = den_.evaluate(qv);
        if (d == 0) throw inversion_of_zero{};
        return num_.evaluate(qv) / d;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::divmod(num_, g).first;
            den_ = QPoly::divmod(den_, g).first;
        }
        Rational lc = den_.leading_coefficient();
        if (lc != 1) {
            num_ = num_.scaled(Rational(1) / lc);
            den_ = den_.scaled(Rational(1) / lc);
        }
    }
    QPoly num_;
    QPoly den_;
};

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Prints a polynomial in q with integer-style coefficients, descending
/// powers, zero terms omitted: e.g. "q^2-1".
inline std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coefficient(static_cast<std::size_t>(k));
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool unit = (a == 1);
        if (k == 0 || !unit) os << a;
        if (k > 0) {
            if (!unit) os << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

inline std::string to_string(const Scalar& s) {
    bool num_compound = s.numerator().degree() > 0 &&
                        [&] {
                            int nonzero = 0;
                            for (const auto& c : s.numerator().coefficients())
                                if (c != 0) ++nonzero;
                            return nonzero > 1;
                        }();
    if (s.denominator() == QPoly(1)) {
        return to_string(s.numerator());
    }
    std::string num = num_compound ? "(" + to_string(s.numerator()) + ")" : to_string(s.numerator());
    std::string den = s.denominator().is_constant() ? to_string(s.denominator())
                                                    : "(" + to_string(s.denominator()) + ")";
    return num + "/" + den;
}

}  // namespace dqn

#endif
