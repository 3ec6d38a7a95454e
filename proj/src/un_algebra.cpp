#include "kantorkit/un_algebra.hpp"

#include "kantorkit/error.hpp"
#include "kantorkit/kantor.hpp"

namespace kantorkit {

std::string UnIndex::to_string(std::size_t n) const
{
    std::string sep = n > 9 ? "," : "";
    return "a" + std::to_string(i) + sep + std::to_string(j) + "^" + std::to_string(k);
}

UnElement UnElement::elementary(std::size_t i, std::size_t j, std::size_t k, std::size_t n)
{
    UnElement x(n);
    x.add(UnIndex{i, j, k}, Poly(1));
    return x;
}

Poly UnElement::coeff(const UnIndex& idx) const
{
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Poly() : it->second;
}

void UnElement::add(const UnIndex& idx, const Poly& c)
{
    for (std::size_t v : {idx.i, idx.j, idx.k})
        if (v < 1 || v > n_)
            throw Error(ErrorKind::IndexOutOfRange, "index " + idx.to_string(n_) + " outside U(" + std::to_string(n_) + ")");
    Poly& slot = coeffs_[idx];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(idx);
}

UnElement& UnElement::operator+=(const UnElement& other)
{
    if (n_ != other.n_) throw Error(ErrorKind::DimMismatch, "elements of different U(n)");
    for (auto& [idx, c] : other.coeffs_) add(idx, c);
    return *this;
}

UnElement operator*(const Poly& c, const UnElement& x)
{
    UnElement out(x.n_);
    for (auto& [idx, v] : x.coeffs_) out.add(idx, c * v);
    return out;
}

std::string UnElement::to_string() const
{
    std::string out;
    for (auto& [idx, p] : coeffs_) {
        std::string label = idx.to_string(n_);
        if (p.terms().size() == 1) {
            bool negative = sgn(p.terms().front().coeff) < 0;
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

Multiplication elementary(std::size_t i, std::size_t j, std::size_t k, std::size_t n)
{
    for (std::size_t v : {i, j, k})
        if (v < 1 || v > n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "elementary index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    Multiplication m(n);
    m.at(i - 1, j - 1, k - 1) = Poly(1);
    return m;
}

Multiplication to_multiplication(const UnElement& x)
{
    Multiplication m(x.dim());
    for (auto& [idx, c] : x.coeffs()) m.at(idx.i - 1, idx.j - 1, idx.k - 1) = c;
    return m;
}

UnElement decompose(const Multiplication& m)
{
    std::size_t n = m.dim();
    UnElement x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!m.at(i, j, k).is_zero()) x.add(UnIndex{i + 1, j + 1, k + 1}, m.at(i, j, k));
    return x;
}

Element first_basis_vector(std::size_t n)
{
    return Element::basis(n, 0);
}

UnElement un_bracket(const UnElement& x, const UnElement& y, const std::optional<Element>& u)
{
    if (x.dim() != y.dim()) throw Error(ErrorKind::DimMismatch, "elements of different U(n)");
    Element ref = u ? *u : first_basis_vector(x.dim());
    return decompose(kantor_product(to_multiplication(x), to_multiplication(y), ref));
}

std::vector<UnTableEntry> un_table(std::size_t n, const std::optional<Element>& u)
{
    if (n == 0) return {};
    Element ref = u ? *u : first_basis_vector(n);
    std::vector<UnIndex> indices;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) indices.push_back(UnIndex{i, j, k});
    std::vector<UnTableEntry> out;
    out.reserve(indices.size() * indices.size());
    for (auto& l : indices) {
        Multiplication a = elementary(l.i, l.j, l.k, n);
        for (auto& r : indices)
            out.push_back(UnTableEntry{l, r, decompose(kantor_product(a, elementary(r.i, r.j, r.k, n), ref))});
    }
    return out;
}

}  // namespace kantorkit
