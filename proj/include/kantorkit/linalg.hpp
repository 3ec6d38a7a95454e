#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kantorkit/poly.hpp"
#include "kantorkit/rational.hpp"

namespace kantorkit {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vector operator*(const Vector& v) const;
    bool operator==(const Matrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
Rational determinant(Matrix m);
/// Throws Error(SingularMatrix).
Matrix inverse(const Matrix& m);

/// Linear subspace of Q^n with a basis in reduced echelon form, so two
/// subspaces are equal iff their bases are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

/// Solution of an affine system: every pivot unknown is an affine
/// polynomial in the free unknowns.
struct LinearSolution {
    std::map<Var, Poly> pivots;
    std::vector<Var> free;

    /// Substitution sending pivots to their values and free unknowns to themselves.
    std::map<Var, Poly> bindings() const { return pivots; }
};

/// Solves a system of polynomials that are affine in `unknowns` with
/// rational coefficients. Throws NonlinearInput, ForeignSymbol or
/// InconsistentSystem.
LinearSolution solve_linear(const std::vector<Poly>& system, const std::vector<Var>& unknowns);

}  // namespace kantorkit
