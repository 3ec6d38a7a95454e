#include "kantorkit/kantor.hpp"

#include "kantorkit/error.hpp"

namespace kantorkit {

namespace {

void check_dims(const Multiplication& a, const Multiplication& b, const Element& u)
{
    if (a.dim() != b.dim() || a.dim() != u.dim())
        throw Error(ErrorKind::DimMismatch, "Kantor product of dimensions " + std::to_string(a.dim()) + ", " +
                                                std::to_string(b.dim()) + " with a vector of length " +
                                                std::to_string(u.dim()));
}

// op[p][k] = coefficient of e_k in a(u, e_p) (left) or a(e_p, u) (right).
std::vector<std::vector<Poly>> operator_matrix(const Multiplication& a, const Element& u, bool left)
{
    std::size_t n = a.dim();
    std::vector<std::vector<Poly>> op(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < n; ++k) {
                const Poly& c = left ? a.at(i, p, k) : a.at(p, i, k);
                if (!c.is_zero()) op[p][k] += u[i] * c;
            }
    }
    return op;
}

// Shared body: with op the left (resp. right) operator of a by u, the
// entries are op(b(e_i, e_j)) - b(op e_i, e_j) - b(e_i, op e_j).
Multiplication assemble(const Multiplication& b, const std::vector<std::vector<Poly>>& op)
{
    std::size_t n = b.dim();
    Multiplication out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Poly v;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!b.at(i, j, p).is_zero() && !op[p][k].is_zero()) v += b.at(i, j, p) * op[p][k];
                    if (!op[i][p].is_zero() && !b.at(p, j, k).is_zero()) v -= op[i][p] * b.at(p, j, k);
                    if (!op[j][p].is_zero() && !b.at(i, p, k).is_zero()) v -= op[j][p] * b.at(i, p, k);
                }
                out.at(i, j, k) = std::move(v);
            }
    return out;
}

}  // namespace

Multiplication kantor_product(const Multiplication& a, const Multiplication& b, const Element& u)
{
    check_dims(a, b, u);
    return assemble(b, operator_matrix(a, u, true));
}

Multiplication kantor_square(const Multiplication& a, const Element& u)
{
    return kantor_product(a, a, u);
}

Multiplication right_kantor_product(const Multiplication& a, const Multiplication& b, const Element& u)
{
    check_dims(a, b, u);
    return assemble(b, operator_matrix(a, u, false));
}

Multiplication right_kantor_square(const Multiplication& a, const Element& u)
{
    return right_kantor_product(a, a, u);
}

}  // namespace kantorkit
