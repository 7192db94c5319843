#pragma once

// Sparse multivariate polynomials in x_1, x_2, ... over the integers.
//
// Terms live in an ordered map keyed by the exponent vector with trailing
// zeros trimmed, so two polynomials are equal exactly when their maps are.
// Coefficients are arbitrary precision and zero coefficients are never stored.

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace schubert {

using Integer = boost::multiprecision::cpp_int;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents) : exp_(std::move(exponents)) { trim(); }

    // x_var^power, var is 1-based.
    static Monomial variable(int var, unsigned power = 1) {
        std::vector<unsigned> e(var, 0);
        e[var - 1] = power;
        return Monomial(std::move(e));
    }

    unsigned operator[](int var) const {
        return (var >= 1 && var <= static_cast<int>(exp_.size())) ? exp_[var - 1] : 0;
    }
    const std::vector<unsigned>& exponents() const { return exp_; }
    int num_vars() const { return static_cast<int>(exp_.size()); }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exp_) d += e;
        return d;
    }

    Monomial with(int var, unsigned power) const {
        std::vector<unsigned> e = exp_;
        if (static_cast<int>(e.size()) < var) e.resize(var, 0);
        e[var - 1] = power;
        return Monomial(std::move(e));
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<unsigned> e(std::max(a.exp_.size(), b.exp_.size()), 0);
        for (std::size_t k = 0; k < a.exp_.size(); ++k) e[k] += a.exp_[k];
        for (std::size_t k = 0; k < b.exp_.size(); ++k) e[k] += b.exp_[k];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < exp_.size(); ++k) {
            if (!exp_[k]) continue;
            if (!first) os << '*';
            first = false;
            os << 'x' << (k + 1);
            if (exp_[k] > 1) os << '^' << exp_[k];
        }
        return first ? "1" : os.str();
    }

private:
    void trim() {
        while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    }
    std::vector<unsigned> exp_;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(Integer constant) { add_term(Monomial{}, std::move(constant)); } // NOLINT
    Polynomial(int constant) : Polynomial(Integer(constant)) {}                  // NOLINT

    static Polynomial monomial(const Monomial& m, Integer coeff = 1) {
        Polynomial p;
        p.add_term(m, std::move(coeff));
        return p;
    }
    static Polynomial variable(int var) { return monomial(Monomial::variable(var)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Monomial& m, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
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
    friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    friend Polynomial operator*(const Integer& k, const Polynomial& p) {
        Polynomial out;
        if (k == 0) return out;
        for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Image under the variable swap x_i <-> x_{i+1}.
    Polynomial swap_variables(int i) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            unsigned ei = m[i], ej = m[i + 1];
            out.add_term(m.with(i, ej).with(i + 1, ei), c);
        }
        return out;
    }

    bool all_coefficients_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
    }

    // Sorted human-readable form, e.g. "x1^2*x2 + 2*x1*x3". Terms appear in
    // decreasing lexicographic order of exponent vectors.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool constant = m.degree() == 0;
            if (constant) {
                os << mag;
            } else {
                if (mag != 1) os << mag << '*';
                os << m.to_string();
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

/// Exact quotient of f by (x_i - x_{i+1}); throws internal_error on a nonzero remainder.
inline Polynomial divide_by_linear_difference(const Polynomial& f, int i) {
    // Synthetic division: repeatedly cancel the term of highest x_i degree.
    Polynomial rest = f;
    Polynomial quotient;
    const Monomial xnext = Monomial::variable(i + 1);
    while (true) {
        const Monomial* lead = nullptr;
        unsigned best = 0;
        for (const auto& [m, c] : rest.terms()) {
            if (m[i] > best) {
                best = m[i];
                lead = &m;
            }
        }
        if (best == 0) break;
        Monomial m = *lead;
        Integer c = rest.coefficient(m);
        Monomial q = m.with(i, m[i] - 1);
        quotient.add_term(q, c);
        rest.add_term(m, -c);
        rest.add_term(q * xnext, c);
    }
    if (!rest.is_zero()) throw internal_error("divided difference left a nonzero remainder");
    return quotient;
}

/// The divided difference operator (f - s_i f) / (x_i - x_{i+1}).
inline Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1) throw argument_error("divided difference index must be positive");
    return divide_by_linear_difference(f - f.swap_variables(i), i);
}

} // namespace schubert
