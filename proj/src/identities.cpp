#include "kantorkit/identities.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "kantorkit/error.hpp"

namespace kantorkit {

// ---------------------------------------------------------------------------
// ProductTree

ProductTree ProductTree::variable(std::size_t index)
{
    auto n = std::make_shared<Node>();
    n->var = index;
    return ProductTree(n);
}

ProductTree ProductTree::product(std::size_t slot, ProductTree left, ProductTree right)
{
    auto n = std::make_shared<Node>();
    n->slot = slot;
    n->children = std::make_shared<const std::pair<ProductTree, ProductTree>>(std::move(left), std::move(right));
    return ProductTree(n);
}

std::size_t ProductTree::max_variable() const
{
    if (is_variable()) return variable_index();
    return std::max(left().max_variable(), right().max_variable());
}

std::size_t ProductTree::max_slot() const
{
    if (is_variable()) return npos;
    std::size_t s = slot();
    for (auto c : {left().max_slot(), right().max_slot()})
        if (c != npos && c > s) s = c;
    return s;
}

ProductTree ProductTree::with_slot_map(const std::vector<std::size_t>& map) const
{
    if (is_variable()) return *this;
    return product(map.at(slot()), left().with_slot_map(map), right().with_slot_map(map));
}

std::string ProductTree::to_string(std::string_view letters) const
{
    if (is_variable()) {
        std::size_t v = variable_index();
        return v < letters.size() ? std::string(1, letters[v]) : "x" + std::to_string(v);
    }
    auto wrap = [&](const ProductTree& t) {
        std::string s = t.to_string(letters);
        return (t.is_variable() || t.slot() != 0) ? s : "(" + s + ")";
    };
    switch (slot()) {
    case 0:
        return wrap(left()) + wrap(right());
    case 1:
        return "[" + left().to_string(letters) + "," + right().to_string(letters) + "]";
    default:
        return "<" + std::to_string(slot()) + ":" + left().to_string(letters) + "," + right().to_string(letters) +
               ">";
    }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

Relation scale(Relation r, const Rational& c)
{
    for (auto& [k, t] : r) k *= c;
    return r;
}

Relation multiply_relations(std::size_t slot, const Relation& a, const Relation& b)
{
    Relation out;
    for (auto& [ca, ta] : a)
        for (auto& [cb, tb] : b) out.emplace_back(ca * cb, ProductTree::product(slot, ta, tb));
    return out;
}

class IdentityParser {
public:
    IdentityParser(std::string_view text, std::string_view letters) : text_(text), letters_(letters) {}

    Relation parse()
    {
        Relation lhs = sum();
        if (accept('=')) {
            Relation rhs = sum();
            for (auto& t : scale(rhs, Rational(-1))) lhs.push_back(t);
        }
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError,
                    what + " at column " + std::to_string(pos_ + 1) + " of identity '" + std::string(text_) + "'");
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

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Relation sum()
    {
        Relation out;
        bool negative = accept('-');
        if (!negative) accept('+');
        while (true) {
            Relation t = term();
            if (negative) t = scale(std::move(t), Rational(-1));
            out.insert(out.end(), t.begin(), t.end());
            if (accept('+')) negative = false;
            else if (accept('-')) negative = true;
            else return out;
        }
    }

    std::size_t number()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    Relation term()
    {
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Rational(static_cast<unsigned long>(number()));
            if (accept('/')) coeff /= Rational(static_cast<unsigned long>(number()));
            accept('*');
            if (coeff == 0 && !starts_factor()) return {};
        }
        return scale(product(), coeff);
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '(' || c == '[' || c == '{' || c == '<' || letters_.find(c) != std::string_view::npos;
    }

    Relation product()
    {
        if (!starts_factor()) fail("expected a product");
        Relation acc = power();
        while (starts_factor()) acc = multiply_relations(0, acc, power());
        return acc;
    }

    Relation power()
    {
        Relation base = factor();
        if (accept('^')) {
            std::size_t e = number();
            if (e == 0) fail("zero exponent");
            Relation acc = base;
            for (std::size_t i = 1; i < e; ++i) acc = multiply_relations(0, acc, base);
            return acc;
        }
        return base;
    }

    Relation bracket(char close)
    {
        Relation a = sum();
        if (!accept(',')) fail("expected ','");
        Relation b = sum();
        if (!accept(close)) fail(std::string("expected '") + close + "'");
        return multiply_relations(1, a, b);
    }

    Relation factor()
    {
        if (accept('(')) {
            Relation r = sum();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (accept('[')) return bracket(']');
        if (accept('{')) return bracket('}');
        if (accept('<')) return bracket('>');
        char c = peek();
        auto idx = letters_.find(c);
        if (idx == std::string_view::npos) fail("unknown variable");
        ++pos_;
        return {{Rational(1), ProductTree::variable(idx)}};
    }

    std::string_view text_, letters_;
    std::size_t pos_ = 0;
};

}  // namespace

IdentitySpec parse_identity(std::string name, const std::vector<std::string>& relations, std::string_view letters)
{
    IdentitySpec spec;
    spec.name = std::move(name);
    for (auto& text : relations) {
        Relation r = IdentityParser(text, letters).parse();
        if (r.empty()) throw Error(ErrorKind::ParseError, "empty identity '" + text + "'");
        for (auto& [c, t] : r) {
            spec.variables = std::max(spec.variables, t.max_variable() + 1);
            if (t.max_slot() != ProductTree::npos) spec.slots = std::max(spec.slots, t.max_slot() + 1);
        }
        spec.relations.push_back(std::move(r));
    }
    if (spec.relations.empty()) throw Error(ErrorKind::ParseError, "identity '" + spec.name + "' has no relation");
    return spec;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

using Builder = std::function<IdentitySpec()>;

IdentitySpec simple(std::string name, std::vector<std::string> relations)
{
    return parse_identity(std::move(name), relations);
}

const std::map<std::string, Builder, std::less<>>& registry()
{
    static const std::map<std::string, Builder, std::less<>> r = [] {
        std::map<std::string, Builder, std::less<>> m;
        auto add = [&](std::string name, std::vector<std::string> rels) {
            m.emplace(name, [name, rels] { return simple(name, rels); });
        };
        auto add_bundle = [&](std::string name, std::vector<std::pair<std::string, std::size_t>> parts,
                              std::vector<std::string> extra = {}) {
            m.emplace(name, [name, parts, extra] {
                std::vector<IdentitySpec> specs;
                for (auto& [part, slot] : parts) specs.push_back(on_slot(builtin(part), slot));
                if (!extra.empty()) specs.push_back(simple(name, extra));
                return bundle(name, specs);
            });
        };

        add("commutative", {"xy = yx"});
        add("anticommutative", {"xy = -yx"});
        add("associative", {"(xy)z = x(yz)"});
        add("anti_associative", {"(xy)z = -x(yz)"});
        add("flexible", {"(xy)x = x(yx)"});
        add("middle_commutative", {"(xy)z = z(yx)"});
        add("pseudo_flexible", {"x(xy) = (yx)x"});
        add("weakly_associative", {"(xy)z - x(yz) + (yz)x - y(zx) = (yx)z - y(xz)"});
        add("left_symmetric", {"(xy)z - x(yz) = (yx)z - y(xz)"});
        add("right_symmetric", {"(xy)z - x(yz) = (xz)y - x(zy)"});
        add("right_commutative", {"(xy)z = (xz)y"});
        add("left_commutative", {"x(yz) = y(xz)"});
        add("right_leibniz", {"(xy)z = (xz)y + x(yz)"});
        add("right_zinbiel", {"(xy)z = x(yz) + x(zy)"});
        add("jacobi", {"(xy)z + (zx)y + (yz)x = 0"});
        add("jordan", {"(x^2 y)x = x^2(yx)"});
        add("almost_jordan", {"2((yx)x)x + y(x^3) = 3(y x^2)x"});
        add("alternative", {"(xx)y = x(xy)", "(yx)x = y(xx)"});
        add("associator_skew", {"(xy)z - x(yz) = -(yx)z + y(xz)"});
        add("associator_cyclic", {"(xy)z - x(yz) = (yz)x - y(zx)"});
        add("leibniz_rule", {"{x,yz} = {x,y}z + y{x,z}"});
        add("dual_leibniz_rule", {"2z[x,y] = [zx,y] + [x,zy]"});
        add("novikov_poisson_nva", {"<x,yz> = <x,y>z"});
        add("novikov_poisson_nvb", {"<xy,z> - x<y,z> = <xz,y> - x<z,y>"});
        add("prelie_poisson_1", {"<xy,z> = x<y,z>"});
        add("prelie_poisson_2", {"<x,y>z - <y,x>z = <x,yz> - <y,xz>"});
        add("postlie_2", {"[x,y]z = x(yz) - y(xz)"});
        add("postlie_3", {"x[y,z] = [xy,z] + [y,xz]"});

        add_bundle("right_novikov", {{"right_commutative", 0}, {"left_symmetric", 0}});
        add_bundle("left_novikov", {{"left_commutative", 0}, {"right_symmetric", 0}});
        add_bundle("lie", {{"anticommutative", 0}, {"jacobi", 0}});
        add_bundle("mock_lie", {{"commutative", 0}, {"jacobi", 0}});
        add_bundle("binary_lie", {{"anticommutative", 0}}, {"((xy)x)y + (y(xy))x + (xy)(xy) = 0"});
        add_bundle("almost_lie_1", {{"middle_commutative", 0}, {"jacobi", 0}});
        add_bundle("almost_lie_2", {{"anticommutative", 0}}, {"((xy)z + (zx)y + (yz)x)t = 0"});
        add_bundle("two_sided_leibniz", {{"middle_commutative", 0}, {"jacobi", 0}}, {"(xy + yx)z = 0"});
        add_bundle("commutative_associative", {{"commutative", 0}, {"associative", 0}});
        add_bundle("quasi_commutative_associative", {{"middle_commutative", 0}, {"associative", 0}});
        add_bundle("quasi_commutative_alternative",
                   {{"middle_commutative", 0}, {"associator_skew", 0}, {"associator_cyclic", 0}});
        add_bundle("quasi_commutative_jordan", {{"middle_commutative", 0}}, {"x^2(yx) = (x^2 y)x"});
        add_bundle("noncommutative_jordan", {{"flexible", 0}, {"jordan", 0}});

        add_bundle("generic_poisson", {{"anticommutative", 1}, {"leibniz_rule", 0}});
        add_bundle("poisson_structure", {{"lie", 1}, {"leibniz_rule", 0}});
        add_bundle("poisson", {{"commutative_associative", 0}, {"lie", 1}, {"leibniz_rule", 0}});
        add_bundle("transposed_poisson", {{"commutative_associative", 0}, {"lie", 1}, {"dual_leibniz_rule", 0}});
        add_bundle("left_novikov_poisson", {{"commutative_associative", 0},
                                            {"left_novikov", 1},
                                            {"novikov_poisson_nva", 0},
                                            {"novikov_poisson_nvb", 0}});
        add_bundle("right_prelie_poisson", {{"commutative_associative", 0},
                                            {"left_symmetric", 1},
                                            {"prelie_poisson_1", 0},
                                            {"prelie_poisson_2", 0}});
        add_bundle("left_prelie_poisson", {{"commutative_associative", 0},
                                           {"right_symmetric", 1},
                                           {"novikov_poisson_nva", 0},
                                           {"novikov_poisson_nvb", 0}});
        add_bundle("commutative_postlie", {{"commutative", 0}, {"postlie_2", 0}, {"postlie_3", 0}});
        return m;
    }();
    return r;
}

}  // namespace

std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (auto& [name, b] : registry()) out.push_back(name);
    return out;
}

IdentitySpec builtin(std::string_view name)
{
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(ErrorKind::UnknownIdentity, "no identity named '" + std::string(name) + "'");
    return it->second();
}

IdentitySpec on_slot(const IdentitySpec& spec, std::size_t slot)
{
    if (slot == 0) return spec;
    if (spec.slots > 1)
        throw Error(ErrorKind::SlotMismatch, "'" + spec.name + "' already uses several operations");
    IdentitySpec out = spec;
    std::vector<std::size_t> map{slot};
    for (auto& r : out.relations)
        for (auto& [c, t] : r) t = t.with_slot_map(map);
    out.slots = slot + 1;
    return out;
}

IdentitySpec bundle(std::string name, const std::vector<IdentitySpec>& parts)
{
    IdentitySpec out;
    out.name = std::move(name);
    for (auto& p : parts) {
        out.variables = std::max(out.variables, p.variables);
        out.slots = std::max(out.slots, p.slots);
        out.relations.insert(out.relations.end(), p.relations.begin(), p.relations.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class TreeEvaluator {
public:
    TreeEvaluator(const std::vector<Multiplication>& mults, const std::vector<Element>& values)
        : mults_(mults), values_(values)
    {
    }

    const Element& eval(const ProductTree& t)
    {
        std::string key = t.to_string("abcdefghijklmnopqrstuvwxyz");
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Element value;
        if (t.is_variable()) value = values_.at(t.variable_index());
        else {
            Element l = eval(t.left());
            const Element& r = eval(t.right());
            value = multiply(mults_.at(t.slot()), l, r);
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

    Element eval(const Relation& r, std::size_t dim)
    {
        Element acc(dim);
        for (auto& [c, t] : r) acc += eval(t) * Poly(c);
        return acc;
    }

private:
    const std::vector<Multiplication>& mults_;
    const std::vector<Element>& values_;
    std::unordered_map<std::string, Element> memo_;
};

void check_shapes(const std::vector<Multiplication>& mults, const IdentitySpec& spec)
{
    if (mults.size() < spec.slots || mults.empty())
        throw Error(ErrorKind::SlotMismatch, "'" + spec.name + "' needs " + std::to_string(std::max<std::size_t>(spec.slots, 1)) +
                                                 " operation(s), got " + std::to_string(mults.size()));
    for (auto& m : mults)
        if (m.dim() != mults.front().dim())
            throw Error(ErrorKind::DimMismatch, "operations of different dimensions");
}

struct GenericPoint {
    std::vector<Element> values;
    VarSet vars;
};

GenericPoint generic_point(std::size_t count, std::size_t dim)
{
    GenericPoint g;
    std::vector<Var> vars;
    for (std::size_t v = 0; v < count; ++v) {
        Element e(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Var x = intern("#x" + std::to_string(v) + "." + std::to_string(i + 1));
            vars.push_back(x);
            e[i] = Poly::variable(x);
        }
        g.values.push_back(std::move(e));
    }
    g.vars = VarSet(std::move(vars));
    return g;
}

void finish(Verdict& v)
{
    std::map<std::string, Poly> unique;
    for (auto& p : v.obstructions) unique.emplace(monic(p).to_string(), p);
    v.obstructions.clear();
    for (auto& [k, p] : unique) v.obstructions.push_back(p);
    v.holds = v.obstructions.empty();
}

}  // namespace

Element evaluate_tree(const std::vector<Multiplication>& mults, const ProductTree& tree,
                      const std::vector<Element>& values)
{
    TreeEvaluator ev(mults, values);
    return ev.eval(tree);
}

Element evaluate_relation(const std::vector<Multiplication>& mults, const Relation& relation,
                          const std::vector<Element>& values)
{
    if (mults.empty()) throw Error(ErrorKind::SlotMismatch, "no operations");
    TreeEvaluator ev(mults, values);
    return ev.eval(relation, mults.front().dim());
}

Verdict check_identity(const std::vector<Multiplication>& mults, const IdentitySpec& spec)
{
    check_shapes(mults, spec);
    std::size_t n = mults.front().dim();
    GenericPoint g = generic_point(spec.variables, n);
    TreeEvaluator ev(mults, g.values);
    Verdict v;
    for (auto& r : spec.relations) {
        Element e = ev.eval(r, n);
        for (std::size_t k = 0; k < n; ++k)
            for (auto& [mono, coeff] : coefficients_in(e[k], g.vars)) v.obstructions.push_back(coeff);
    }
    finish(v);
    return v;
}

Verdict check_identity(const Multiplication& m, const IdentitySpec& spec)
{
    return check_identity(std::vector<Multiplication>{m}, spec);
}

Verdict check_ann_equality(const std::vector<Multiplication>& mults, const IdentitySpec& lhs,
                           const IdentitySpec& rhs, const Subspace& ann)
{
    check_shapes(mults, lhs);
    check_shapes(mults, rhs);
    if (lhs.relations.size() != rhs.relations.size())
        throw Error(ErrorKind::SlotMismatch, "sides have different numbers of relations");
    std::size_t n = mults.front().dim();
    if (ann.ambient_dim() != n) throw Error(ErrorKind::DimMismatch, "annihilator lives in another space");
    GenericPoint g = generic_point(std::max(lhs.variables, rhs.variables), n);
    TreeEvaluator ev(mults, g.values);
    Verdict v;
    for (std::size_t r = 0; r < lhs.relations.size(); ++r) {
        Element diff = ev.eval(lhs.relations[r], n) - ev.eval(rhs.relations[r], n);
        std::map<Monomial, Vector> vectors;
        for (std::size_t k = 0; k < n; ++k)
            for (auto& [mono, coeff] : coefficients_in(diff[k], g.vars)) {
                auto c = coeff.as_constant();
                if (!c)
                    throw Error(ErrorKind::SymbolicCoefficient,
                                "coefficient '" + coeff.to_string() + "' is not rational");
                auto& vec = vectors.try_emplace(mono, Vector(n)).first->second;
                vec[k] = *c;
            }
        for (auto& [mono, vec] : vectors) {
            if (ann.contains(vec)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(vec[k])) v.obstructions.push_back(Poly(vec[k]));
        }
    }
    finish(v);
    return v;
}

// ---------------------------------------------------------------------------
// CB / CL probes

std::vector<ProbeResult> probe_cb_cl(const Multiplication& m, const std::vector<Element>& probes)
{
    if (!m.is_rational()) throw Error(ErrorKind::SymbolicEntries, "probe checks need rational structure constants");
    std::size_t n = m.dim();
    for (auto& p : probes)
        if (!p.is_rational()) throw Error(ErrorKind::SymbolicEntries, "probe elements must be rational");
    std::vector<ProbeResult> out;
    for (std::size_t a = 0; a < probes.size(); ++a)
        for (std::size_t b = 0; b < probes.size(); ++b) {
            if (!multiply(m, probes[a], probes[b]).is_zero()) continue;
            ProbeResult r{"CB", {a, b}, true};
            for (std::size_t z = 0; z < n && r.pass; ++z)
                r.pass = multiply(m, multiply(m, probes[a], Element::basis(n, z)), probes[b]).is_zero();
            out.push_back(std::move(r));
        }
    for (std::size_t a = 0; a < probes.size(); ++a) {
        Subspace c = centralizer(m, probes[a]);
        ProbeResult r{"CL", {a}, true};
        for (auto& y : c.basis()) {
            Element ye = Element::from_rationals(y);
            for (std::size_t z = 0; z < n && r.pass; ++z) {
                Element e = Element::basis(n, z);
                r.pass = c.contains(multiply(m, e, ye).to_rational()) && c.contains(multiply(m, ye, e).to_rational());
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace kantorkit
