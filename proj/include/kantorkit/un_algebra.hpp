#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kantorkit/algebra.hpp"

namespace kantorkit {

/// Index (i, j, k) of the elementary multiplication a_ij^k, 1-based.
/// Ordered by k first, then (i, j), matching the usual table layout.
struct UnIndex {
    std::size_t i = 1, j = 1, k = 1;

    auto key() const { return std::tuple(k, i, j); }
    bool operator<(const UnIndex& o) const { return key() < o.key(); }
    bool operator==(const UnIndex& o) const = default;

    /// "a12^1"; indices are comma separated when n > 9.
    std::string to_string(std::size_t n = 9) const;
};

/// Element of U(n): a combination of elementary multiplications.
class UnElement {
public:
    UnElement() = default;
    explicit UnElement(std::size_t n) : n_(n) {}
    static UnElement elementary(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

    std::size_t dim() const { return n_; }
    const std::map<UnIndex, Poly>& coeffs() const { return coeffs_; }
    Poly coeff(const UnIndex& idx) const;
    void add(const UnIndex& idx, const Poly& c);
    bool is_zero() const { return coeffs_.empty(); }

    UnElement& operator+=(const UnElement& other);
    friend UnElement operator+(UnElement a, const UnElement& b) { return a += b; }
    friend UnElement operator*(const Poly& c, const UnElement& x);
    bool operator==(const UnElement& other) const = default;

    /// "-a12^1 - a21^1", "0" when empty.
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::map<UnIndex, Poly> coeffs_;
};

/// Single entry c[i][j][k] = 1 (1-based). Throws IndexOutOfRange.
Multiplication elementary(std::size_t i, std::size_t j, std::size_t k, std::size_t n);
Multiplication to_multiplication(const UnElement& x);
UnElement decompose(const Multiplication& m);

/// Reference vector v1, the default for U(n) brackets.
Element first_basis_vector(std::size_t n);

/// decompose(kantor_product(x, y, u)); u defaults to v1.
UnElement un_bracket(const UnElement& x, const UnElement& y, const std::optional<Element>& u = std::nullopt);

struct UnTableEntry {
    UnIndex left, right;
    UnElement value;
};

/// All n^6 brackets of elementary multiplications: grouped by the left
/// operand, in index order for both operands.
std::vector<UnTableEntry> un_table(std::size_t n, const std::optional<Element>& u = std::nullopt);

}  // namespace kantorkit
