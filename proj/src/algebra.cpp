#include "kantorkit/algebra.hpp"

#include <algorithm>
#include <set>

#include "kantorkit/error.hpp"

namespace kantorkit {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw Error(ErrorKind::DimMismatch,
                    std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

Rational rational_entry(const Poly& p)
{
    auto c = p.as_constant();
    if (!c) throw Error(ErrorKind::SymbolicEntries, "entry '" + p.to_string() + "' is not rational");
    return *c;
}

// Rational copy of a structure tensor, flat in the same layout.
std::vector<Rational> rational_tensor(const Multiplication& m)
{
    std::size_t n = m.dim();
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = rational_entry(m.at(i, j, k));
    return t;
}

Vector unit(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

Vector multiply_rational(const std::vector<Rational>& t, std::size_t n, const Vector& x, const Vector& y)
{
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = t[(i * n + j) * n + k];
                if (!is_zero(c)) r[k] += xy * c;
            }
        }
    }
    return r;
}

// Kernel of the stacked rows, as a subspace of Q^n.
Subspace solve_rows(std::size_t n, const std::vector<Vector>& rows)
{
    if (rows.empty()) return Subspace::full(n);
    Matrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) m(r, j) = rows[r][j];
    return Subspace::span(n, kernel(m));
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element Element::basis(std::size_t dim, std::size_t i)
{
    if (i >= dim) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1));
    Element e(dim);
    e.coords_[i] = Poly(1);
    return e;
}

Element Element::from_rationals(const Vector& v)
{
    Element e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e.coords_[i] = Poly(v[i]);
    return e;
}

Element Element::symbolic(std::size_t dim, std::string_view prefix)
{
    Element e(dim);
    for (std::size_t i = 0; i < dim; ++i) e.coords_[i] = Poly::variable(std::string(prefix) + std::to_string(i + 1));
    return e;
}

bool Element::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Element::is_rational() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_constant(); });
}

Vector Element::to_rational() const
{
    Vector v;
    for (auto& p : coords_) v.push_back(rational_entry(p));
    return v;
}

Element Element::substitute(const std::map<Var, Poly>& bindings) const
{
    Element e(dim());
    for (std::size_t i = 0; i < dim(); ++i) e.coords_[i] = poly_substitute(coords_[i], bindings);
    return e;
}

Element& Element::operator+=(const Element& other)
{
    require_dim(dim(), other.dim(), "element sum");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    require_dim(dim(), other.dim(), "element difference");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Element& Element::operator*=(const Poly& c)
{
    for (auto& p : coords_) p *= c;
    return *this;
}

Element Element::operator-() const
{
    Element e(dim());
    for (std::size_t i = 0; i < dim(); ++i) e.coords_[i] = -coords_[i];
    return e;
}

std::string Element::to_string(const std::vector<std::string>& labels) const
{
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Poly& p = coords_[i];
        if (p.is_zero()) continue;
        std::string label = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
        if (p.terms().size() == 1) {
            const Term& t = p.terms().front();
            bool negative = sgn(t.coeff) < 0;
            Poly mag = negative ? -p : p;
            out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            out += mag == Poly(1) ? label : mag.to_string() + "*" + label;
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + p.to_string() + ")*" + label;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Multiplication

Multiplication Multiplication::tabulate(std::size_t dim,
                                        const std::function<Element(const Element&, const Element&)>& f)
{
    Multiplication m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.set_product(i, j, f(Element::basis(dim, i), Element::basis(dim, j)));
    return m;
}

Element Multiplication::product(std::size_t i, std::size_t j) const
{
    Element e(dim_);
    for (std::size_t k = 0; k < dim_; ++k) e[k] = at(i, j, k);
    return e;
}

void Multiplication::set_product(std::size_t i, std::size_t j, const Element& value)
{
    require_dim(dim_, value.dim(), "product value");
    for (std::size_t k = 0; k < dim_; ++k) at(i, j, k) = value[k];
}

bool Multiplication::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Multiplication::is_rational() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_constant(); });
}

VarSet Multiplication::variables() const
{
    std::vector<Var> vs;
    for (auto& p : c_)
        for (auto v : p.variables().items()) vs.push_back(v);
    return VarSet(std::move(vs));
}

Multiplication Multiplication::substitute(const std::map<Var, Poly>& bindings) const
{
    Multiplication m(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i) m.c_[i] = poly_substitute(c_[i], bindings);
    return m;
}

Multiplication Multiplication::opposite() const
{
    Multiplication m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m.at(i, j, k) = at(j, i, k);
    return m;
}

Multiplication& Multiplication::operator+=(const Multiplication& other)
{
    require_dim(dim_, other.dim_, "tensor sum");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

Multiplication& Multiplication::operator-=(const Multiplication& other)
{
    require_dim(dim_, other.dim_, "tensor difference");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
    return *this;
}

Multiplication& Multiplication::operator*=(const Poly& c)
{
    for (auto& p : c_) p *= c;
    return *this;
}

Multiplication Multiplication::operator-() const
{
    Multiplication m(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i) m.c_[i] = -c_[i];
    return m;
}

Element multiply(const Multiplication& m, const Element& x, const Element& y)
{
    require_dim(m.dim(), x.dim(), "multiply");
    require_dim(m.dim(), y.dim(), "multiply");
    std::size_t n = m.dim();
    Element r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            std::optional<Poly> xy;
            for (std::size_t k = 0; k < n; ++k) {
                const Poly& c = m.at(i, j, k);
                if (c.is_zero()) continue;
                if (!xy) xy = x[i] * y[j];
                r[k] += *xy * c;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Algebra

const Multiplication& Algebra::slot(std::string_view slot_name) const
{
    for (auto& s : slots)
        if (s.name == slot_name) return s.mult;
    throw Error(ErrorKind::SlotMismatch, "algebra '" + name + "' has no operation '" + std::string(slot_name) + "'");
}

bool Algebra::has_slot(std::string_view slot_name) const
{
    return std::any_of(slots.begin(), slots.end(), [&](const Slot& s) { return s.name == slot_name; });
}

void Algebra::validate() const
{
    if (slots.empty()) throw Error(ErrorKind::SlotMismatch, "algebra '" + name + "' has no operation");
    std::size_t n = slots.front().mult.dim();
    if (basis.size() != n)
        throw Error(ErrorKind::DimMismatch, "algebra '" + name + "' has " + std::to_string(basis.size()) +
                                                " labels for dimension " + std::to_string(n));
    std::set<Var> declared;
    for (auto& p : params) declared.insert(intern(p));
    auto check = [&](const VarSet& vs, const std::string& where) {
        for (auto v : vs.items())
            if (!declared.count(v))
                throw Error(ErrorKind::UndeclaredParam,
                            "'" + var_name(v) + "' in " + where + " of '" + name + "' is not a declared parameter");
    };
    for (auto& s : slots) {
        require_dim(n, s.mult.dim(), "algebra operations");
        check(s.mult.variables(), "operation '" + s.name + "'");
    }
    for (auto& c : constraints) check(c.variables(), "constraints");
}

std::vector<std::string> default_labels(std::size_t dim)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

Algebra make_algebra(std::string name, Multiplication m, std::vector<std::string> params)
{
    Algebra a;
    a.name = std::move(name);
    a.basis = default_labels(m.dim());
    a.params = std::move(params);
    a.slots.push_back(Slot{"mult", std::move(m)});
    return a;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace annihilator(const Multiplication& m)
{
    std::size_t n = m.dim();
    auto t = rational_tensor(m);
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vector left(n), right(n);
            for (std::size_t i = 0; i < n; ++i) {
                left[i] = t[(i * n + j) * n + k];
                right[i] = t[(j * n + i) * n + k];
            }
            rows.push_back(std::move(left));
            rows.push_back(std::move(right));
        }
    return solve_rows(n, rows);
}

Subspace product_space(const Multiplication& m, const Subspace& a, const Subspace& b)
{
    std::size_t n = m.dim();
    auto t = rational_tensor(m);
    std::vector<Vector> prods;
    for (auto& x : a.basis())
        for (auto& y : b.basis()) prods.push_back(multiply_rational(t, n, x, y));
    return Subspace::span(n, prods);
}

DerivedIndices derived_indices(const Multiplication& m)
{
    std::size_t n = m.dim();
    DerivedIndices out;

    Subspace d = Subspace::full(n);
    for (std::size_t s = 0; s <= n + 1; ++s) {
        if (d.is_zero()) {
            out.solvability = s;
            break;
        }
        Subspace next = product_space(m, d, d);
        if (next == d) break;
        d = std::move(next);
    }

    // powers[k] holds A^k; powers[0] is unused.
    std::vector<Subspace> powers{Subspace::zero(n), Subspace::full(n)};
    for (std::size_t k = 1; k <= n + 2; ++k) {
        if (powers[k].is_zero()) {
            out.nilpotency = k;
            break;
        }
        Subspace next = Subspace::zero(n);
        for (std::size_t p = 1; p <= k; ++p) next = next + product_space(m, powers[p], powers[k + 1 - p]);
        if (next == powers[k]) break;
        powers.push_back(std::move(next));
    }
    return out;
}

Subspace nucleus(const Multiplication& m)
{
    std::size_t n = m.dim();
    auto t = rational_tensor(m);
    // assoc[((i n + j) n + l) n + k] = coefficient of e_k in As(e_i, e_j, e_l).
    std::vector<Rational> assoc(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vector lhs = multiply_rational(t, n, multiply_rational(t, n, unit(n, i), unit(n, j)), unit(n, l));
                Vector rhs = multiply_rational(t, n, unit(n, i), multiply_rational(t, n, unit(n, j), unit(n, l)));
                for (std::size_t k = 0; k < n; ++k) assoc[((i * n + j) * n + l) * n + k] = lhs[k] - rhs[k];
            }
    auto at = [&](std::size_t i, std::size_t j, std::size_t l, std::size_t k) -> const Rational& {
        return assoc[((i * n + j) * n + l) * n + k];
    };
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                Vector r0(n), r1(n), r2(n);
                for (std::size_t i = 0; i < n; ++i) {
                    r0[i] = at(i, a, b, k);
                    r1[i] = at(a, i, b, k);
                    r2[i] = at(a, b, i, k);
                }
                rows.push_back(std::move(r0));
                rows.push_back(std::move(r1));
                rows.push_back(std::move(r2));
            }
    return solve_rows(n, rows);
}

Subspace centralizer(const Multiplication& m, const Element& x)
{
    std::size_t n = m.dim();
    require_dim(n, x.dim(), "centralizer");
    auto t = rational_tensor(m);
    Vector xv = x.to_rational();
    std::vector<Vector> rows;
    // Row k: the e_k coordinate of x y - y x as a linear form in y.
    for (std::size_t k = 0; k < n; ++k) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) row[j] += xv[i] * (t[(i * n + j) * n + k] - t[(j * n + i) * n + k]);
        rows.push_back(std::move(row));
    }
    return solve_rows(n, rows);
}

// ---------------------------------------------------------------------------
// Basis change

Multiplication apply_basis_change(const Multiplication& m, const Matrix& M)
{
    std::size_t n = m.dim();
    if (M.rows() != n || M.cols() != n)
        throw Error(ErrorKind::DimMismatch, "basis change matrix does not match dimension " + std::to_string(n));
    Matrix inv = inverse(M);
    std::vector<Element> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(Element::from_rationals(M.column(i)));
    Multiplication out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element p = multiply(m, cols[i], cols[j]);
            for (std::size_t k = 0; k < n; ++k) {
                Poly v;
                for (std::size_t c = 0; c < n; ++c)
                    if (!is_zero(inv(k, c))) v += p[c] * inv(k, c);
                out.at(i, j, k) = std::move(v);
            }
        }
    return out;
}

bool verify_isomorphism(const Matrix& M, const Multiplication& a, const Multiplication& b)
{
    require_dim(a.dim(), b.dim(), "isomorphism");
    return apply_basis_change(a, M) == b;
}

Poly determinant(const PolyMatrix& M)
{
    std::size_t n = M.size();
    if (n == 0) return Poly(1);
    for (auto& row : M)
        if (row.size() != n) throw Error(ErrorKind::DimMismatch, "determinant of a non-square matrix");
    if (n == 1) return M[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(M[r][j]);
            minor.push_back(std::move(row));
        }
        Poly term = M[0][c] * determinant(minor);
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

bool intertwines(const PolyMatrix& M, const Multiplication& a, const Multiplication& b)
{
    std::size_t n = a.dim();
    require_dim(n, b.dim(), "intertwining");
    require_dim(n, M.size(), "intertwining matrix");
    if (determinant(M).is_zero()) return false;
    std::vector<Element> cols;
    for (std::size_t i = 0; i < n; ++i) {
        Element col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = M[r][i];
        cols.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element lhs = multiply(a, cols[i], cols[j]);
            Element rhs(n);
            for (std::size_t k = 0; k < n; ++k)
                if (!b.at(i, j, k).is_zero()) rhs += b.at(i, j, k) * cols[k];
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace kantorkit
