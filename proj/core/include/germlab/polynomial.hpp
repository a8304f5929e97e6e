#pragma once

#include "germlab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace germlab {

// Exponent vector; length always equals the variable count of the owning ring.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Multivariate polynomial over Q. Terms are kept in a canonical map keyed by
/// exponent vector; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial zero(std::vector<std::string> vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial variable(std::vector<std::string> vars, const std::string& name);
    static Polynomial monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const; // total degree, -1 for the zero polynomial
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int n) const;
    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(const std::string& var) const;

    /// Remaps this polynomial into the ring `new_vars`; every variable with a
    /// nonzero exponent must occur in `new_vars`.
    Polynomial in_ring(const std::vector<std::string>& new_vars) const;

    /// Renames variables according to `renaming` (old name -> new name).
    Polynomial rename(const std::map<std::string, std::string>& renaming,
                      const std::vector<std::string>& new_vars) const;

    /// Substitutes polynomials for a subset of variables. Unmapped variables
    /// must exist in the target ring of the images.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

    Rational eval_at_origin() const;
    bool vanishes_at_origin() const { return eval_at_origin() == 0; }
    bool uses_var(const std::string& name) const;

    /// Coefficients of this polynomial viewed as univariate in `var`;
    /// index j holds the coefficient of var^j (a polynomial in the same ring
    /// with var-exponent zero).
    std::vector<Polynomial> coefficients_in(const std::string& var) const;

    std::string str() const;

private:
    int var_index(const std::string& name) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Parses the polynomial text grammar: identifiers as variables, `^` powers,
/// optional `*`, rational coefficients as `a/b`.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

/// Parses with the variable list inferred from the text (first-appearance order).
Polynomial parse_polynomial(const std::string& text);

/// Exact quotient h / (u - v) for a polynomial h vanishing under u := v.
/// Throws std::invalid_argument if the substitution h|_{u=v} is nonzero.
Polynomial divide_by_linear_difference(const Polynomial& h, const std::string& u,
                                       const std::string& v);

} // namespace germlab
