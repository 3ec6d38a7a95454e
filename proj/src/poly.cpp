#include "kantorkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "kantorkit/error.hpp"

namespace kantorkit {

// ---------------------------------------------------------------------------
// Variable registry

namespace {

struct Registry {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, Var> ids;
};

Registry& registry()
{
    static Registry r;
    return r;
}

}  // namespace

Var intern(std::string_view name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) return it->second;
    Var id = static_cast<Var>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id);
    return id;
}

const std::string& var_name(Var v)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.at(v);
}

bool name_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            auto ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
            while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
            while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars))
{
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(Var v) const
{
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

void VarSet::insert(Var v)
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) vars_.insert(it, v);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
}

std::uint32_t Monomial::degree() const
{
    std::uint32_t d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(Var v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Var x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) r.factors_.push_back(*a++);
        else if (b->first < a->first) r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, other.factors_.end());
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const
{
    Monomial r;
    auto a = factors_.begin();
    for (auto& [v, e] : other.factors_) {
        while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
        if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) r.factors_.emplace_back(v, a->second - e);
        ++a;
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const
{
    Monomial r;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else {
            r.factors_.emplace_back(a->first, std::min(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const
{
    auto a = factors_.begin(), b = other.factors_.begin();
    for (; a != factors_.end() && b != other.factors_.end(); ++a, ++b) {
        if (a->first != b->first)
            return a->first < b->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a->second != b->second) return a->second <=> b->second;
    }
    if (a != factors_.end()) return std::strong_ordering::greater;
    if (b != other.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

namespace {

using NamedFactor = std::pair<std::string_view, std::uint32_t>;

std::vector<NamedFactor> named_factors(const Monomial& m)
{
    std::vector<NamedFactor> out;
    for (auto& [v, e] : m.factors()) out.emplace_back(var_name(v), e);
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return name_less(x.first, y.first); });
    return out;
}

// Display order: ascending degree, then lex by variable name.
bool display_before(const Monomial& a, const Monomial& b)
{
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto fa = named_factors(a), fb = named_factors(b);
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return name_less(fa[i].first, fb[i].first);
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
}

}  // namespace

std::string Monomial::to_string() const
{
    if (is_one()) return "1";
    std::string out;
    for (auto& [name, e] : named_factors(*this)) {
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_desc(const Term& a, const Term& b)
{
    return a.mono > b.mono;
}

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> canonical(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), term_desc);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
        else {
            if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
    return out;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->mono > j->mono)) out.push_back(*i++);
        else if (i == a.end() || j->mono > i->mono) {
            out.push_back(*j);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
            if (!is_zero(c)) out.push_back(Term{i->mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly::Poly(int c) : Poly(Rational(c)) {}
Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c)
{
    if (!kantorkit::is_zero(c)) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::variable(Var v)
{
    return monomial(Monomial::of(v), Rational(1));
}

Poly Poly::variable(std::string_view name)
{
    return variable(intern(name));
}

Poly Poly::monomial(Monomial m, Rational c)
{
    Poly p;
    if (!kantorkit::is_zero(c)) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    Poly p;
    p.terms_ = canonical(std::move(terms));
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Rational> Poly::as_constant() const
{
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
    return std::nullopt;
}

Rational Poly::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
}

std::uint32_t Poly::total_degree() const
{
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint32_t Poly::degree_in(Var v) const
{
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

std::uint32_t Poly::degree_in(const VarSet& vars) const
{
    std::uint32_t d = 0;
    for (auto& t : terms_) {
        std::uint32_t td = 0;
        for (auto& [v, e] : t.mono.factors())
            if (vars.contains(v)) td += e;
        d = std::max(d, td);
    }
    return d;
}

VarSet Poly::variables() const
{
    std::vector<Var> vs;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.factors()) vs.push_back(v);
    return VarSet(std::move(vs));
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coeff;
    if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coeff;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) prod.push_back(Term{x.mono * y.mono, x.coeff * y.coeff});
    Poly p;
    p.terms_ = canonical(std::move(prod));
    return p;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (kantorkit::is_zero(c)) terms_.clear();
    else
        for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return display_before(x->mono, y->mono); });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        bool negative = sgn(t->coeff) < 0;
        Rational mag = abs(t->coeff);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (t->mono.is_one()) out += kantorkit::to_string(mag);
        else {
            if (mag != 1) out += kantorkit::to_string(mag) + "*";
            out += t->mono.to_string();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.to_string();
}

Poly pow(const Poly& p, std::uint32_t exponent)
{
    Poly result(1), base = p;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Poly poly_substitute(const Poly& p, const std::map<Var, Poly>& bindings)
{
    if (bindings.empty()) return p;
    std::map<std::pair<Var, std::uint32_t>, Poly> powers;
    auto power_of = [&](Var v, std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, pow(bindings.at(v), e)).first;
        return it->second;
    };
    std::vector<Term> plain;
    Poly result;
    for (auto& t : p.terms()) {
        std::vector<Monomial::Factor> kept;
        std::vector<std::pair<Var, std::uint32_t>> bound;
        for (auto& f : t.mono.factors()) {
            if (bindings.count(f.first)) bound.push_back(f);
            else kept.push_back(f);
        }
        if (bound.empty()) {
            plain.push_back(t);
            continue;
        }
        Poly term = Poly::monomial(Monomial::from_factors(std::move(kept)), t.coeff);
        for (auto& [v, e] : bound) {
            term *= power_of(v, e);
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result + Poly::from_terms(std::move(plain));
}

Rational evaluate(const Poly& p, const std::map<Var, Rational>& point)
{
    Rational total(0);
    for (auto& t : p.terms()) {
        Rational v = t.coeff;
        for (auto& [var, e] : t.mono.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw Error(ErrorKind::SymbolicEntries, "no value for '" + var_name(var) + "'");
            for (std::uint32_t i = 0; i < e; ++i) v *= it->second;
        }
        total += v;
    }
    return total;
}

std::map<Monomial, Poly> coefficients_in(const Poly& p, const VarSet& vars)
{
    std::map<Monomial, std::vector<Term>> groups;
    for (auto& t : p.terms()) {
        std::vector<Monomial::Factor> inside, outside;
        for (auto& f : t.mono.factors()) (vars.contains(f.first) ? inside : outside).push_back(f);
        groups[Monomial::from_factors(std::move(inside))].push_back(
            Term{Monomial::from_factors(std::move(outside)), t.coeff});
    }
    std::map<Monomial, Poly> out;
    for (auto& [m, ts] : groups) {
        Poly c = Poly::from_terms(std::move(ts));
        if (!c.is_zero()) out.emplace(m, std::move(c));
    }
    return out;
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& den)
{
    if (den.is_zero()) throw Error(ErrorKind::SingularMatrix, "division by the zero polynomial");
    Poly quotient, rest = num;
    const Term& lead = den.leading();
    while (!rest.is_zero()) {
        const Term& lt = rest.leading();
        auto m = lt.mono.divide(lead.mono);
        if (!m) return std::nullopt;
        Poly step = Poly::monomial(*m, lt.coeff / lead.coeff);
        quotient += step;
        rest -= step * den;
    }
    return quotient;
}

Monomial monomial_content(const Poly& p)
{
    if (p.is_zero()) return Monomial{};
    Monomial g = p.terms().front().mono;
    for (auto& t : p.terms()) g = g.gcd(t.mono);
    return g;
}

Poly monic(const Poly& p)
{
    if (p.is_zero()) return p;
    // Normalize on the last term in display order so the result does not
    // depend on the order in which names were interned.
    const Term* last = &p.terms().front();
    for (auto& t : p.terms())
        if (display_before(last->mono, t.mono)) last = &t;
    Rational inv = 1 / last->coeff;
    return p * inv;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse()
    {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError,
                    what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expression()
    {
        Poly acc = term();
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term()
    {
        Poly acc = unary();
        while (true) {
            if (accept('*')) acc *= unary();
            else if (accept('/')) {
                Poly d = unary();
                auto c = d.as_constant();
                if (!c) fail("division by a non-constant");
                if (is_zero(*c)) fail("division by zero");
                acc *= Rational(1 / *c);
            } else return acc;
        }
    }

    Poly unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            return pow(base, static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom()
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expression();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Poly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Poly::variable(text_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text)
{
    return PolyParser(text).parse();
}

}  // namespace kantorkit
