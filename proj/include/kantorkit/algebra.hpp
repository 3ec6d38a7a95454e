#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kantorkit/linalg.hpp"
#include "kantorkit/poly.hpp"

namespace kantorkit {

/// Coordinate vector over a fixed basis, entries may be symbolic.
class Element {
public:
    Element() = default;
    explicit Element(std::size_t dim) : coords_(dim) {}
    explicit Element(std::vector<Poly> coords) : coords_(std::move(coords)) {}

    static Element basis(std::size_t dim, std::size_t i);
    static Element from_rationals(const Vector& v);
    /// prefix1 e1 + ... + prefixN eN with fresh indeterminates, e.g. u1..u3.
    static Element symbolic(std::size_t dim, std::string_view prefix = "u");

    std::size_t dim() const { return coords_.size(); }
    Poly& operator[](std::size_t i) { return coords_[i]; }
    const Poly& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Poly>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws Error(SymbolicEntries).
    Vector to_rational() const;
    Element substitute(const std::map<Var, Poly>& bindings) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Poly& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Poly& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Poly& c) { return a *= c; }
    Element operator-() const;
    bool operator==(const Element& other) const = default;

    /// "-u3*e1 - 1/2*u1*e3"; multi-term coefficients are parenthesised.
    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    std::vector<Poly> coords_;
};

/// Bilinear product as a structure tensor: at(i, j, k) is the coefficient
/// of e_k in e_i e_j (all indices 0-based).
class Multiplication {
public:
    Multiplication() = default;
    explicit Multiplication(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    static Multiplication zero(std::size_t dim) { return Multiplication(dim); }
    /// Tabulates f on basis pairs.
    static Multiplication tabulate(std::size_t dim,
                                   const std::function<Element(const Element&, const Element&)>& f);

    std::size_t dim() const { return dim_; }
    Poly& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    /// e_i e_j as an element.
    Element product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, const Element& value);

    bool is_zero() const;
    bool is_rational() const;
    VarSet variables() const;
    Multiplication substitute(const std::map<Var, Poly>& bindings) const;
    /// Opposite product (x, y) -> y x.
    Multiplication opposite() const;

    Multiplication& operator+=(const Multiplication& other);
    Multiplication& operator-=(const Multiplication& other);
    Multiplication& operator*=(const Poly& c);
    friend Multiplication operator+(Multiplication a, const Multiplication& b) { return a += b; }
    friend Multiplication operator-(Multiplication a, const Multiplication& b) { return a -= b; }
    friend Multiplication operator*(const Poly& c, Multiplication a) { return a *= c; }
    Multiplication operator-() const;
    bool operator==(const Multiplication& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Poly> c_;
};

Element multiply(const Multiplication& m, const Element& x, const Element& y);

/// Named operation on the underlying space of an algebra.
struct Slot {
    std::string name;
    Multiplication mult;
};

struct Algebra {
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::string> params;
    /// Polynomials required to vanish on admissible parameter values.
    std::vector<Poly> constraints;
    std::vector<Slot> slots;

    std::size_t dim() const { return slots.empty() ? basis.size() : slots.front().mult.dim(); }
    const Multiplication& mult() const { return slots.at(0).mult; }
    /// Throws Error(SlotMismatch) for an unknown name.
    const Multiplication& slot(std::string_view name) const;
    bool has_slot(std::string_view name) const;

    /// Checks label count, shared dimension and declared parameters.
    void validate() const;
};

/// Algebra with one slot named "mult" and labels e1..en.
Algebra make_algebra(std::string name, Multiplication m, std::vector<std::string> params = {});
std::vector<std::string> default_labels(std::size_t dim);

// Subspace computations; all need rational tensors (Error SymbolicEntries).

Subspace annihilator(const Multiplication& m);
/// span{u v : u in a, v in b}.
Subspace product_space(const Multiplication& m, const Subspace& a, const Subspace& b);

struct DerivedIndices {
    /// Least s with A^(s) = 0, where A^(0) = A and A^(k+1) = A^(k) A^(k);
    /// metabelian algebras have index 2.
    std::optional<std::size_t> solvability;
    /// Least k with A^k = 0, where A^k = sum over p+q=k of A^p A^q.
    std::optional<std::size_t> nilpotency;
};
DerivedIndices derived_indices(const Multiplication& m);

Subspace nucleus(const Multiplication& m);
Subspace centralizer(const Multiplication& m, const Element& x);

/// Structure tensor in the basis e'_i = sum_j M(j, i) e_j. Throws SingularMatrix.
Multiplication apply_basis_change(const Multiplication& m, const Matrix& M);
/// True iff apply_basis_change(a, M) == b.
bool verify_isomorphism(const Matrix& M, const Multiplication& a, const Multiplication& b);

/// Matrix with polynomial entries, row-major.
using PolyMatrix = std::vector<std::vector<Poly>>;
Poly determinant(const PolyMatrix& M);
/// Inverse-free check that the columns of M span a basis in which a reads
/// as b: a(M e_i, M e_j) = M b(e_i, e_j) and det M is not the zero
/// polynomial. Statements hold wherever det M does not vanish.
bool intertwines(const PolyMatrix& M, const Multiplication& a, const Multiplication& b);

}  // namespace kantorkit
