#pragma once

#include "kantorkit/algebra.hpp"

namespace kantorkit {

/// [[a, b]](x, y) = a(u, b(x, y)) - b(a(u, x), y) - b(x, a(u, y)).
Multiplication kantor_product(const Multiplication& a, const Multiplication& b, const Element& u);

/// x * y = u(xy) - (ux)y - x(uy).
Multiplication kantor_square(const Multiplication& a, const Element& u);

/// Mirror image: a(b(x, y), u) - b(a(x, u), y) - b(x, a(y, u)).
Multiplication right_kantor_product(const Multiplication& a, const Multiplication& b, const Element& u);
Multiplication right_kantor_square(const Multiplication& a, const Element& u);

}  // namespace kantorkit
