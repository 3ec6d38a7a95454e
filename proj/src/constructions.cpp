#include "kantorkit/constructions.hpp"

#include "kantorkit/error.hpp"
#include "kantorkit/identities.hpp"
#include "kantorkit/kantor.hpp"

namespace kantorkit {

namespace {

void require_same_dim(const Multiplication& a, const Multiplication& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimMismatch, "multiplications of dimension " + std::to_string(a.dim()) + " and " +
                                                std::to_string(b.dim()));
}

Element apply(const Matrix& D, const Element& x)
{
    Element out(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k)
        for (std::size_t i = 0; i < x.dim(); ++i)
            if (!is_zero(D(k, i))) out[k] += x[i] * D(k, i);
    return out;
}

}  // namespace

Multiplication sum_product(const Multiplication& dot, const Multiplication& bracket)
{
    require_same_dim(dot, bracket);
    return dot + bracket;
}

bool is_derivation(const Multiplication& dot, const Matrix& D)
{
    std::size_t n = dot.dim();
    if (D.rows() != n || D.cols() != n) throw Error(ErrorKind::DimMismatch, "derivation matrix has the wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element ei = Element::basis(n, i), ej = Element::basis(n, j);
            Element lhs = apply(D, dot.product(i, j));
            Element rhs = multiply(dot, apply(D, ei), ej) + multiply(dot, ei, apply(D, ej));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Multiplication bracket_from_derivation(const Multiplication& dot, const Matrix& D)
{
    if (!check_identity(dot, builtin("commutative_associative")).holds)
        throw Error(ErrorKind::NotCommutativeAssociative, "the product is not commutative and associative");
    if (!is_derivation(dot, D)) throw Error(ErrorKind::NotDerivation, "the matrix is not a derivation");
    return Multiplication::tabulate(dot.dim(), [&](const Element& x, const Element& y) {
        return multiply(dot, x, apply(D, y)) - multiply(dot, apply(D, x), y);
    });
}

std::pair<Multiplication, Multiplication> kantor_pair(const Multiplication& dot, const Multiplication& circ,
                                                      const Element& u)
{
    require_same_dim(dot, circ);
    return {kantor_product(circ, dot, u), kantor_product(dot, circ, u)};
}

}  // namespace kantorkit
