#pragma once

#include <utility>

#include "kantorkit/algebra.hpp"
#include "kantorkit/linalg.hpp"

namespace kantorkit {

/// Entrywise sum dot + bracket.
Multiplication sum_product(const Multiplication& dot, const Multiplication& bracket);

/// [x, y] = x D(y) - D(x) y, where D(e_i) = sum_k D(k, i) e_k.
/// Throws NotCommutativeAssociative or NotDerivation.
Multiplication bracket_from_derivation(const Multiplication& dot, const Matrix& D);

/// True iff D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for every basis pair.
bool is_derivation(const Multiplication& dot, const Matrix& D);

/// (kantor_product(circ, dot, u), kantor_product(dot, circ, u)).
std::pair<Multiplication, Multiplication> kantor_pair(const Multiplication& dot, const Multiplication& circ,
                                                      const Element& u);

}  // namespace kantorkit
