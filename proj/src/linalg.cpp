#include "kantorkit/linalg.hpp"

#include <sstream>

#include "kantorkit/error.hpp"

namespace kantorkit {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d)
{
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols)
{
    std::size_t n = cols.empty() ? 0 : cols.front().size();
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n) throw Error(ErrorKind::DimMismatch, "columns of unequal length");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimMismatch, "matrix product shapes differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (v.size() != cols_) throw Error(ErrorKind::DimMismatch, "matrix-vector shapes differ");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << kantorkit::to_string((*this)(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

RowEchelon rref(Matrix m)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<Vector> kernel(const Matrix& m)
{
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

Rational determinant(Matrix m)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimMismatch, "determinant of a non-square matrix");
    Rational det = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::SingularMatrix, "non-square matrix has no inverse");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Q");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw Error(ErrorKind::DimMismatch, "vector outside ambient space");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    auto e = rref(std::move(m));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient);
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return span(ambient, vs);
}

bool Subspace::contains(const Vector& v) const
{
    auto vs = basis_;
    vs.push_back(v);
    return span(ambient_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const
{
    return (*this + other).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimMismatch, "subspaces of different spaces");
    auto vs = basis_;
    vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, vs);
}

std::string Subspace::to_string() const
{
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        os << (i ? ", (" : "(");
        for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << kantorkit::to_string(basis_[i][j]);
        os << ')';
    }
    os << '}';
    return os.str();
}

LinearSolution solve_linear(const std::vector<Poly>& system, const std::vector<Var>& unknowns)
{
    std::map<Var, std::size_t> column;
    for (std::size_t i = 0; i < unknowns.size(); ++i) column.emplace(unknowns[i], i);
    const std::size_t n = unknowns.size();

    // Augmented rows [coefficients | -constant].
    std::vector<Vector> rows;
    for (const auto& p : system) {
        Vector row(n + 1);
        for (const auto& t : p.terms()) {
            const auto& f = t.mono.factors();
            if (f.empty()) {
                row[n] -= t.coeff;
                continue;
            }
            if (t.mono.degree() > 1) {
                bool any_unknown = false;
                for (auto& [v, e] : f) any_unknown = any_unknown || column.count(v);
                throw Error(any_unknown ? ErrorKind::NonlinearInput : ErrorKind::ForeignSymbol,
                            "term '" + t.mono.to_string() + "' in '" + p.to_string() + "'");
            }
            auto it = column.find(f.front().first);
            if (it == column.end())
                throw Error(ErrorKind::ForeignSymbol,
                            "'" + var_name(f.front().first) + "' is not an unknown of the system");
            row[it->second] += t.coeff;
        }
        rows.push_back(std::move(row));
    }

    LinearSolution sol;
    if (rows.empty()) {
        sol.free = unknowns;
        return sol;
    }
    Matrix m(rows.size(), n + 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j <= n; ++j) m(i, j) = rows[i][j];
    auto e = rref(std::move(m));
    if (!e.pivots.empty() && e.pivots.back() == n)
        throw Error(ErrorKind::InconsistentSystem, "linear system has no solution");

    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) sol.free.push_back(unknowns[j]);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        Poly value(e.reduced(r, n));
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j] && !is_zero(e.reduced(r, j)))
                value -= Poly::variable(unknowns[j]) * e.reduced(r, j);
        sol.pivots.emplace(unknowns[e.pivots[r]], std::move(value));
    }
    return sol;
}

}  // namespace kantorkit
