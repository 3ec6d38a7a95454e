#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kantorkit/rational.hpp"

namespace kantorkit {

/// Interned indeterminate. Ids are process-local; anything user visible
/// (printing, ordering for output) goes through the name.
using Var = std::uint32_t;

Var intern(std::string_view name);
const std::string& var_name(Var v);

/// Natural order on names: digit runs compare numerically, so u2 < u10.
bool name_less(std::string_view a, std::string_view b);

/// Sorted, duplicate-free set of indeterminates.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::vector<Var> vars);
    VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

    bool contains(Var v) const;
    void insert(Var v);
    const std::vector<Var>& items() const& { return vars_; }
    /// By value on temporaries, so `for (Var v : p.variables().items())` is safe.
    std::vector<Var> items() && { return std::move(vars_); }
    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }

private:
    std::vector<Var> vars_;
};

class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    static Monomial of(Var v, std::uint32_t exponent = 1);
    /// Factors must be sorted by Var with positive exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent(Var v) const;

    Monomial operator*(const Monomial& other) const;
    /// this / other, when other divides this.
    std::optional<Monomial> divide(const Monomial& other) const;
    /// Componentwise minimum of exponents.
    Monomial gcd(const Monomial& other) const;

    /// Lexicographic order on variable ids; a genuine monomial order.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term& other) const { return mono == other.mono && coeff == other.coeff; }
};

/// Sparse multivariate polynomial over the rationals. Terms are kept
/// sorted (descending monomial order) with no zero coefficients, so
/// structural equality is polynomial equality.
class Poly {
public:
    Poly() = default;
    Poly(int c);
    Poly(long c);
    Poly(const Rational& c);

    static Poly variable(Var v);
    static Poly variable(std::string_view name);
    static Poly monomial(Monomial m, Rational c);
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial, nullopt otherwise.
    std::optional<Rational> as_constant() const;
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(Var v) const;
    /// Maximal total degree of any term restricted to `vars`.
    std::uint32_t degree_in(const VarSet& vars) const;
    VarSet variables() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    bool operator==(const Poly& other) const = default;

    /// Canonical text, terms ordered by ascending degree then
    /// lexicographically by variable name: "-1/2*u1 + u3^2".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& p, std::uint32_t exponent);

/// Applies a (possibly partial) substitution; unbound indeterminates stay.
Poly poly_substitute(const Poly& p, const std::map<Var, Poly>& bindings);

/// Full evaluation; throws Error(SymbolicEntries) if a variable is unbound.
Rational evaluate(const Poly& p, const std::map<Var, Rational>& point);

/// Groups p by the part of each monomial that lies in `vars`:
/// p = sum over keys m of m * result[m], with result[m] free of `vars`.
std::map<Monomial, Poly> coefficients_in(const Poly& p, const VarSet& vars);

/// num / den when den divides num exactly.
std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

/// Greatest common monomial factor of all terms (one for zero).
Monomial monomial_content(const Poly& p);

/// Scales p so its last term in display order has coefficient one.
/// Zero stays zero.
Poly monic(const Poly& p);

/// Parses "+ - * / ^ ( )", rational literals and identifiers.
/// Division is only allowed by nonzero constants.
Poly parse_poly(std::string_view text);

}  // namespace kantorkit
