#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "baxter/rational.hpp"

namespace baxter {

// The indeterminate reserved for the weight lambda.
inline const std::string kWeightName = "L";

// Commutative monomial: sparse exponent map, no zero exponents stored.
// Total order is graded lexicographic (degree first, then the exponent
// map compared entrywise), which fixes term order everywhere.
class Monomial {
  public:
    using Map = std::map<std::string, int>;

    Monomial() = default;
    explicit Monomial(Map exps) : e_(std::move(exps)) {
        for (auto it = e_.begin(); it != e_.end();) {
            if (it->second == 0) it = e_.erase(it);
            else if (it->second < 0) throw std::invalid_argument("Monomial: negative exponent");
            else ++it;
        }
    }
    static Monomial var(const std::string& name, int exp = 1) {
        Map m;
        if (exp != 0) m[name] = exp;
        return Monomial(std::move(m));
    }

    bool is_identity() const { return e_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [name, k] : e_) d += k;
        return d;
    }
    int exponent(const std::string& name) const {
        auto it = e_.find(name);
        return it == e_.end() ? 0 : it->second;
    }
    const Map& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const {
        Map m = e_;
        for (const auto& [name, k] : o.e_) m[name] += k;
        return Monomial(std::move(m));
    }
    Monomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("Monomial: negative power");
        Map m;
        if (k > 0)
            for (const auto& [name, ex] : e_) m[name] = ex * k;
        return Monomial(std::move(m));
    }

    // Splits off one indeterminate: returns the monomial with `name`
    // removed and stores its exponent in `exp_out`.
    Monomial without(const std::string& name, int& exp_out) const {
        Map m = e_;
        auto it = m.find(name);
        exp_out = (it == m.end()) ? 0 : it->second;
        if (it != m.end()) m.erase(it);
        return Monomial(std::move(m));
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e_ < o.e_;
    }

    std::string str() const {
        if (e_.empty()) return "1";
        std::string s;
        for (const auto& [name, k] : e_) {
            if (!s.empty()) s += '*';
            s += name;
            if (k != 1) s += '^' + std::to_string(k);
        }
        return s;
    }

  private:
    Map e_;
};

struct PolyParseError : std::runtime_error {
    std::size_t position;
    std::string expected;
    PolyParseError(std::size_t pos, const std::string& what_expected)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": expected " + what_expected),
          position(pos),
          expected(what_expected) {}
};

// Exact multivariate polynomial over Rational. Canonical form: no zero
// coefficients; terms keyed by Monomial in graded-lex order. Values are
// immutable in spirit: all operations return fresh polynomials.
class Poly {
  public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) t_[Monomial()] = c; }
    Poly(long n) : Poly(Rational(n)) {}
    Poly(int n) : Poly(Rational(n)) {}

    static Poly var(const std::string& name, int exp = 1) {
        return Poly::term(Rational(1), Monomial::var(name, exp));
    }
    // The weight symbol lambda.
    static Poly weight() { return var(kWeightName); }
    static Poly term(const Rational& c, const Monomial& m) {
        Poly p;
        if (!c.is_zero()) p.t_[m] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_identity());
    }
    Rational constant_value() const {
        if (t_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("Poly: not a constant");
        return t_.begin()->second;
    }
    // Coefficient of the identity monomial (the constant term), defined
    // for every polynomial.
    Rational constant_term() const {
        auto it = t_.find(Monomial());
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }
    int degree() const {  // total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [ma, ca] : t_)
            for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly operator*(const Rational& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : t_) r.t_[m] = k * c;
        return r;
    }
    Poly operator/(const Rational& c) const {
        if (c.is_zero()) throw std::invalid_argument("Poly: division by zero rational");
        return *this * (Rational(1) / c);
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly: negative power");
        Poly r(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return t_ != o.t_; }
    // Arbitrary total order (for use as a map key).
    bool operator<(const Poly& o) const {
        return std::lexicographical_compare(
            t_.begin(), t_.end(), o.t_.begin(), o.t_.end(),
            [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
    }

    // Simultaneous substitution of indeterminates; unbound names stay.
    Poly subst(const std::map<std::string, Poly>& bindings) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            Poly factor(c);
            for (const auto& [name, exp] : m.exponents()) {
                auto it = bindings.find(name);
                if (it == bindings.end()) factor *= Poly::var(name, exp);
                else factor *= it->second.pow(exp);
            }
            r += factor;
        }
        return r;
    }
    Poly subst(const std::string& name, const Poly& value) const {
        return subst(std::map<std::string, Poly>{{name, value}});
    }

    // Terms printed leading term first (descending graded-lex), in the
    // grammar: coef '*' factors | factors | coef, joined by ' + '/' - '.
    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c.abs();
            if (s.empty()) s += (c.sign() < 0) ? "-" : "";
            else s += (c.sign() < 0) ? " - " : " + ";
            if (m.is_identity()) s += a.str();
            else if (a.is_one()) s += m.str();
            else s += a.str() + '*' + m.str();
        }
        return s;
    }

    static Poly parse(const std::string& text);

  private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Terms t_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

}  // namespace baxter
