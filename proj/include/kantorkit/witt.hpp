#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "kantorkit/rational.hpp"

namespace kantorkit {

/// Generator L_i or I_i of the graded algebra W.
struct GradedGen {
    enum class Kind { L, I };
    Kind kind;
    std::int64_t index;

    static GradedGen L(std::int64_t i) { return {Kind::L, i}; }
    static GradedGen I(std::int64_t i) { return {Kind::I, i}; }

    auto operator<=>(const GradedGen&) const = default;
    std::string to_string() const;
};

/// Finitely supported combination of generators; zero coefficients are never stored.
class GradedElement {
public:
    GradedElement() = default;
    GradedElement(GradedGen g, Rational c = 1);

    const std::map<GradedGen, Rational>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    Rational coeff(GradedGen g) const;
    void add(GradedGen g, const Rational& c);

    GradedElement& operator+=(const GradedElement& other);
    GradedElement& operator-=(const GradedElement& other);
    GradedElement& operator*=(const Rational& c);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
    bool operator==(const GradedElement&) const = default;

    /// "2*L1 - 1/2*I-3", generators in (kind, index) order; "0" when empty.
    std::string to_string() const;

private:
    std::map<GradedGen, Rational> support_;
};

/// Parses "L1 + 2*I-3 - 1/2*L0".
GradedElement parse_graded(const std::string& text);

struct WittConfig {
    /// Shift in [L_m, I_n] = (m - n - a) I_{m+n}.
    Rational a = 0;
    /// Weight in x . y = w (x y).
    GradedElement w;
};

/// L_i L_j = L_{i+j}, L_i I_j = I_i L_j = I_{i+j}, I_i I_j = 0.
GradedElement witt_juxt(const GradedElement& x, const GradedElement& y);
GradedElement witt_dot(const GradedElement& x, const GradedElement& y, const WittConfig& cfg);
GradedElement witt_bracket(const GradedElement& x, const GradedElement& y, const WittConfig& cfg);

/// Closed formulas for the Kantor products [[ [,], . ]] and [[ ., [,] ]].
GradedElement witt_star(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                        const WittConfig& cfg);
GradedElement witt_curly(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                         const WittConfig& cfg);

/// The same two products computed from the three-term Kantor definition.
GradedElement witt_star_direct(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                               const WittConfig& cfg);
GradedElement witt_curly_direct(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                                const WittConfig& cfg);

}  // namespace kantorkit
