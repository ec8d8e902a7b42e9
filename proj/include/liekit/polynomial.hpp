#pragma once

#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

/// Variable name -> exponent, exponents >= 1 only. The empty monomial is 1.
using Monomial = std::map<std::string, unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [_, e] : m) d += e;
    return d;
}

/// Lexicographic order on monomials: compare exponents variable by variable
/// in name order, higher exponent first (alpha^2 before alpha*beta before
/// beta^2). A variable absent from a monomial has exponent zero.
inline bool lex_monomial_before(const Monomial& a, const Monomial& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.end();
}

/// Multivariate polynomial over Scalar in named parameters; the coefficient
/// ring of parametric structure constants. Zero coefficients are never
/// stored, so equality is map equality. Supports +, -, *, nonnegative
/// integer powers and exact evaluation - no division by parameters.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Scalar& c) {
        if (!liekit::is_zero(c)) terms_.emplace(Monomial{}, c);
    }
    Polynomial(long c) : Polynomial(Scalar(c)) {}
    Polynomial(int c) : Polynomial(Scalar(c)) {}

    static Polynomial variable(const std::string& name, unsigned exp = 1) {
        Polynomial p;
        if (exp == 0) return Polynomial(1);
        p.terms_.emplace(Monomial{{name, exp}}, Scalar(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Scalar constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Scalar(0) : terms_.begin()->second;
    }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    std::set<std::string> variables() const {
        std::set<std::string> vars;
        for (const auto& [m, _] : terms_)
            for (const auto& [name, __] : m) vars.insert(name);
        return vars;
    }

    Polynomial operator-() const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) m[name] += e;
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc(1);
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// Divide every coefficient; exact, divisor must be nonzero.
    Polynomial divided_by(const Scalar& c) const {
        if (liekit::is_zero(c)) throw std::domain_error("division by zero");
        Polynomial out;
        for (const auto& [m, v] : terms_) out.terms_.emplace(m, v / c);
        return out;
    }

    /// Exact evaluation; every variable of the polynomial must be assigned.
    Scalar evaluate(const std::map<std::string, Scalar>& assignment) const {
        Scalar total(0);
        for (const auto& [m, c] : terms_) {
            Scalar term = c;
            for (const auto& [name, e] : m) {
                auto it = assignment.find(name);
                if (it == assignment.end())
                    throw std::invalid_argument("unassigned parameter: " + name);
                term *= pow_int(it->second, static_cast<long>(e));
            }
            total += term;
        }
        return total;
    }

    /// Canonical rendering: terms by total degree descending, ties broken by
    /// the monomial's lexicographic order; rationals as p or p/q;
    /// coefficient 1 omitted on nonconstant monomials. Parses back to an
    /// equal polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            unsigned da = total_degree(a.first), db = total_degree(b.first);
            if (da != db) return da > db;
            return lex_monomial_before(a.first, b.first);
        });
        std::string out;
        for (std::size_t t = 0; t < ordered.size(); ++t) {
            const auto& [m, c] = ordered[t];
            Scalar a = c;
            if (t == 0) {
                if (sgn(a) < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += sgn(a) < 0 ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            bool coeff_one = a == 1;
            if (!coeff_one || m.empty()) out += liekit::to_string(a);
            bool first_factor = coeff_one && !m.empty();
            for (const auto& [name, e] : m) {
                if (!first_factor) out += "*";
                first_factor = false;
                out += name;
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void add_term(const Monomial& m, const Scalar& c) {
        if (liekit::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (liekit::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<Monomial, Scalar> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace liekit
