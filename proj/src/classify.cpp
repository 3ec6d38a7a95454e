#include "kantorkit/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kantorkit/error.hpp"
#include "kantorkit/kantor.hpp"

namespace kantorkit {

namespace {

// ---------------------------------------------------------------------------
// Polynomial helpers

// P(v = -r/c) scaled by c^deg_v(P); the zero set agrees wherever c != 0.
Poly pseudo_substitute(const Poly& p, Var v, const Poly& c, const Poly& r)
{
    std::uint32_t d = p.degree_in(v);
    if (d == 0) return p;
    Poly out;
    for (auto& [mono, coeff] : coefficients_in(p, VarSet{v})) {
        std::uint32_t e = mono.exponent(v);
        out += coeff * pow(-r, e) * pow(c, d - e);
    }
    return out;
}

// Splits p = c*v + r when p has degree one in v.
std::pair<Poly, Poly> linear_parts(const Poly& p, Var v)
{
    Poly c, r;
    for (auto& [mono, coeff] : coefficients_in(p, VarSet{v})) {
        if (mono.is_one()) r += coeff;
        else c += coeff;
    }
    return {c, r};
}

// True when c is a nonzero constant times a product of inequations.
bool known_nonzero(Poly c, const std::vector<Poly>& inequations)
{
    for (bool again = true; again && !c.is_constant();) {
        again = false;
        for (auto& q : inequations)
            if (auto d = divide_exact(c, q)) {
                c = *d;
                again = true;
            }
    }
    return c.is_constant() && !c.is_zero();
}

Poly normalized(const Poly& p)
{
    return monic(p);
}

void dedupe(std::vector<Poly>& ps)
{
    std::vector<Poly> out;
    std::set<std::string> seen;
    for (auto& p : ps)
        if (seen.insert(p.to_string()).second) out.push_back(p);
    ps = std::move(out);
}

Rational integer_lcm_of_denominators(const Poly& p)
{
    Integer l = 1;
    for (auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return Rational(l);
}

std::vector<Integer> divisors(Integer n)
{
    if (n < 0) n = -n;
    std::vector<Integer> out;
    if (n == 0) return out;
    if (n > 1000000) return out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(Integer(n / d));
        }
    return out;
}

// Rational roots of a univariate polynomial in v, with multiplicity removed.
std::vector<Rational> rational_roots(const Poly& p, Var v)
{
    Poly q = p * integer_lcm_of_denominators(p);
    std::uint32_t d = q.degree_in(v);
    Integer lead = 0, constant = 0;
    for (auto& t : q.terms()) {
        if (t.mono.exponent(v) == d) lead = t.coeff.get_num();
        if (t.mono.is_one()) constant = t.coeff.get_num();
    }
    std::vector<Rational> roots;
    auto test = [&](const Rational& x) {
        if (evaluate(q, {{v, x}}) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    };
    if (constant == 0) test(Rational(0));
    // Strip the factor v^m so the constant term is nonzero.
    if (constant == 0) {
        std::uint32_t m = d;
        for (auto& t : q.terms()) m = std::min(m, t.mono.exponent(v));
        Integer c0 = 0;
        for (auto& t : q.terms())
            if (t.mono.exponent(v) == m) c0 = t.coeff.get_num();
        constant = c0;
    }
    for (auto& a : divisors(constant))
        for (auto& b : divisors(lead))
            for (int s : {1, -1}) {
                Rational x(a * s, b);
                x.canonicalize();
                test(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Branch state

struct Branch {
    std::map<Var, Poly> assignment;
    std::vector<Poly> equations;
    std::vector<std::pair<Var, Poly>> triangular;  // leading variable, c*v + r
    std::vector<Poly> deferred;
    std::vector<Poly> inequations;
    std::size_t depth = 0;
};

class Solver {
public:
    Solver(const std::vector<Var>& unknowns, std::size_t max_depth) : unknowns_(unknowns), max_depth_(max_depth)
    {
        for (std::size_t i = 0; i < unknowns.size(); ++i) rank_.emplace(unknowns[i], i);
    }

    void run(Branch b) { process(std::move(b)); }
    std::vector<Branch>& results() { return results_; }

private:
    std::size_t rank(Var v) const
    {
        auto it = rank_.find(v);
        return it == rank_.end() ? rank_.size() : it->second;
    }

    std::vector<Var> sorted_vars(const Poly& p) const
    {
        auto vs = p.variables().items();
        std::sort(vs.begin(), vs.end(), [&](Var a, Var b) { return rank(a) < rank(b); });
        return vs;
    }

    static void substitute(Branch& b, Var v, const Poly& value)
    {
        std::map<Var, Poly> s{{v, value}};
        for (auto& [k, p] : b.assignment) p = poly_substitute(p, s);
        for (auto& p : b.equations) p = poly_substitute(p, s);
        for (auto& [k, p] : b.triangular) p = poly_substitute(p, s);
        for (auto& p : b.deferred) p = poly_substitute(p, s);
        for (auto& p : b.inequations) p = poly_substitute(p, s);
        b.assignment[v] = value;
    }

    // Removes factors known to be nonzero.
    Poly strip(const Branch& b, Poly p) const
    {
        bool changed = true;
        while (changed && !p.is_constant()) {
            changed = false;
            for (auto& q : b.inequations) {
                if (q.is_constant()) continue;
                if (auto d = divide_exact(p, q)) {
                    p = *d;
                    changed = true;
                }
            }
        }
        return p;
    }

    bool normalize(Branch& b) const
    {
        // A monomial is nonzero iff each of its variables is; other known
        // nonzero factors are divided out.
        std::vector<Poly> ineqs;
        for (auto& q : b.inequations) {
            if (q.is_zero()) return false;
            Monomial m = monomial_content(q);
            for (auto& [v, e] : m.factors()) ineqs.push_back(Poly::variable(v));
            Poly rest = *divide_exact(q, Poly::monomial(m, Rational(1)));
            if (!rest.is_constant()) ineqs.push_back(normalized(rest));
        }
        dedupe(ineqs);
        for (std::size_t i = 0; i < ineqs.size(); ++i)
            for (std::size_t j = 0; j < ineqs.size(); ++j) {
                if (i == j || ineqs[j].is_constant() || ineqs[i].is_constant()) continue;
                if (auto d = divide_exact(ineqs[i], ineqs[j])) ineqs[i] = normalized(*d);
            }
        ineqs.erase(std::remove_if(ineqs.begin(), ineqs.end(), [](const Poly& q) { return q.is_constant(); }),
                    ineqs.end());
        dedupe(ineqs);
        b.inequations = std::move(ineqs);
        for (auto* list : {&b.equations, &b.deferred}) {
            std::vector<Poly> kept;
            for (auto& p : *list) {
                Poly s = strip(b, p);
                if (s.is_zero()) continue;
                if (s.is_constant()) return false;
                kept.push_back(normalized(s));
            }
            dedupe(kept);
            *list = std::move(kept);
        }
        for (auto& [v, p] : b.triangular) {
            p = strip(b, p);
            if (p.is_constant() && !p.is_zero()) return false;
        }
        return true;
    }

    // A triangular equation whose coefficient became constant is solved.
    bool try_settle_triangular(Branch& b)
    {
        for (std::size_t t = 0; t < b.triangular.size(); ++t) {
            auto [v, eq] = b.triangular[t];
            if (eq.is_zero()) {
                b.triangular.erase(b.triangular.begin() + static_cast<std::ptrdiff_t>(t));
                return true;
            }
            if (eq.degree_in(v) != 1) continue;
            auto [c, r] = linear_parts(eq, v);
            if (!c.is_constant()) continue;
            b.triangular.erase(b.triangular.begin() + static_cast<std::ptrdiff_t>(t));
            substitute(b, v, -r * Rational(1 / *c.as_constant()));
            return true;
        }
        return false;
    }

    void emit(Branch b)
    {
        for (auto& p : b.equations) b.deferred.push_back(p);
        b.equations.clear();
        results_.push_back(std::move(b));
    }

    bool try_constant_pivot(Branch& b)
    {
        std::optional<std::pair<std::size_t, Var>> best;
        for (std::size_t e = 0; e < b.equations.size(); ++e)
            for (Var v : sorted_vars(b.equations[e])) {
                if (b.equations[e].degree_in(v) != 1) continue;
                auto [c, r] = linear_parts(b.equations[e], v);
                if (!c.is_constant()) continue;
                if (!best || rank(v) < rank(best->second)) best = std::make_pair(e, v);
                break;
            }
        if (!best) return false;
        auto [e, v] = *best;
        auto [c, r] = linear_parts(b.equations[e], v);
        Poly value = -r * Rational(1 / *c.as_constant());
        b.equations.erase(b.equations.begin() + static_cast<std::ptrdiff_t>(e));
        substitute(b, v, value);
        return true;
    }

    bool try_content_split(const Branch& b)
    {
        std::optional<std::size_t> best;
        std::vector<Var> best_vars;
        for (std::size_t e = 0; e < b.equations.size(); ++e) {
            Monomial m = monomial_content(b.equations[e]);
            if (m.is_one()) continue;
            std::vector<Var> vars;
            for (auto& [v, k] : m.factors()) vars.push_back(v);
            std::sort(vars.begin(), vars.end(), [&](Var x, Var y) { return rank(x) < rank(y); });
            if (!best || vars.size() < best_vars.size() ||
                (vars.size() == best_vars.size() && b.equations[e].terms().size() < b.equations[*best].terms().size())) {
                best = e;
                best_vars = vars;
            }
        }
        if (!best) return false;
        Poly eq = b.equations[*best];
        Monomial content = monomial_content(eq);
        for (std::size_t t = 0; t < best_vars.size(); ++t) {
            Branch nb = b;
            nb.depth++;
            for (std::size_t s = 0; s < t; ++s) nb.inequations.push_back(Poly::variable(best_vars[s]));
            substitute(nb, best_vars[t], Poly());
            process(std::move(nb));
        }
        Branch nb = b;
        nb.depth++;
        for (Var v : best_vars) nb.inequations.push_back(Poly::variable(v));
        nb.equations[*best] = *divide_exact(eq, Poly::monomial(content, Rational(1)));
        process(std::move(nb));
        return true;
    }

    bool try_univariate(Branch& b)
    {
        for (std::size_t e = 0; e < b.equations.size(); ++e) {
            const Poly& eq = b.equations[e];
            auto vars = eq.variables().items();
            if (vars.size() != 1) continue;
            Var v = vars.front();
            auto roots = rational_roots(eq, v);
            Poly cofactor = eq;
            for (auto& x : roots) cofactor = *divide_exact(cofactor, Poly::variable(v) - Poly(x));
            // Remove repeated rational roots from the cofactor as well.
            for (bool again = true; again;) {
                again = false;
                for (auto& x : roots)
                    if (auto d = divide_exact(cofactor, Poly::variable(v) - Poly(x))) {
                        cofactor = *d;
                        again = true;
                    }
            }
            Branch base = b;
            base.equations.erase(base.equations.begin() + static_cast<std::ptrdiff_t>(e));
            base.depth++;
            for (auto& x : roots) {
                Branch nb = base;
                substitute(nb, v, Poly(x));
                process(std::move(nb));
            }
            if (!cofactor.is_constant()) {
                Branch nb = base;
                nb.deferred.push_back(cofactor);
                process(std::move(nb));
            }
            return true;
        }
        return false;
    }

    bool try_linear_split(const Branch& b)
    {
        std::optional<std::tuple<std::size_t, Var, Poly, Poly>> best;
        for (std::size_t e = 0; e < b.equations.size(); ++e)
            for (Var v : sorted_vars(b.equations[e])) {
                if (b.equations[e].degree_in(v) != 1) continue;
                auto [c, r] = linear_parts(b.equations[e], v);
                if (!best || c.terms().size() < std::get<2>(*best).terms().size()) best = std::make_tuple(e, v, c, r);
                break;
            }
        if (!best) return false;
        auto [e, v, c, r] = *best;

        Branch nonzero = b;
        nonzero.depth++;
        Poly eq = nonzero.equations[e];
        nonzero.equations.erase(nonzero.equations.begin() + static_cast<std::ptrdiff_t>(e));
        for (auto& p : nonzero.equations) p = pseudo_substitute(p, v, c, r);
        for (auto& p : nonzero.deferred) p = pseudo_substitute(p, v, c, r);
        for (auto& p : nonzero.inequations) p = pseudo_substitute(p, v, c, r);
        nonzero.inequations.push_back(c);
        nonzero.triangular.emplace_back(v, eq);
        process(std::move(nonzero));

        Branch zero = b;
        zero.depth++;
        zero.equations.push_back(c);
        process(std::move(zero));
        return true;
    }

    void process(Branch b)
    {
        while (true) {
            if (!normalize(b)) return;
            if (try_settle_triangular(b)) continue;
            if (b.equations.empty()) return emit(std::move(b));
            if (!try_constant_pivot(b)) break;
        }
        if (b.depth >= max_depth_) return emit(std::move(b));
        if (try_content_split(b)) return;
        if (try_univariate(b)) return;
        if (try_linear_split(b)) return;
        emit(std::move(b));
    }

    std::vector<Var> unknowns_;
    std::map<Var, std::size_t> rank_;
    std::size_t max_depth_;
    std::vector<Branch> results_;
};

// ---------------------------------------------------------------------------
// Post-processing

std::vector<Poly> family_equations(const Branch& b)
{
    std::vector<Poly> out;
    for (auto& [v, p] : b.triangular) out.push_back(normalized(p));
    for (auto& p : b.deferred) out.push_back(p);
    return out;
}

std::string branch_signature(const Branch& b, const std::vector<Var>& unknowns)
{
    std::string s;
    for (Var v : unknowns) {
        auto it = b.assignment.find(v);
        s += var_name(v) + "=" + (it == b.assignment.end() ? std::string("*") : it->second.to_string()) + ";";
    }
    std::vector<std::string> eqs, ineqs;
    for (auto& p : family_equations(b)) eqs.push_back(p.to_string());
    for (auto& p : b.inequations) ineqs.push_back(normalized(p).to_string());
    std::sort(eqs.begin(), eqs.end());
    std::sort(ineqs.begin(), ineqs.end());
    for (auto& e : eqs) s += "E:" + e + ";";
    for (auto& e : ineqs) s += "N:" + e + ";";
    return s;
}

bool is_free_in(const Branch& b, Var v)
{
    if (b.assignment.count(v)) return false;
    for (auto& [lead, p] : b.triangular)
        if (lead == v) return false;
    return true;
}

// Family A with inequation a*v + s (a constant) absorbs the family equal
// to A restricted to v = -s/a, dropping the inequation.
void merge_branches(std::vector<Branch>& branches, const std::vector<Var>& unknowns)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t ia = 0; ia < branches.size() && !changed; ++ia) {
            const Branch& a = branches[ia];
            for (std::size_t q = 0; q < a.inequations.size() && !changed; ++q) {
                const Poly& c = a.inequations[q];
                for (Var v : c.variables().items()) {
                    if (c.degree_in(v) != 1 || !is_free_in(a, v)) continue;
                    auto [coef, rest] = linear_parts(c, v);
                    if (!coef.is_constant()) continue;
                    Branch restricted = a;
                    restricted.inequations.erase(restricted.inequations.begin() + static_cast<std::ptrdiff_t>(q));
                    Poly value = -rest * Rational(1 / *coef.as_constant());
                    std::map<Var, Poly> s{{v, value}};
                    for (auto& [k, p] : restricted.assignment) p = poly_substitute(p, s);
                    for (auto& [k, p] : restricted.triangular) p = poly_substitute(p, s);
                    for (auto& p : restricted.deferred) p = normalized(poly_substitute(p, s));
                    for (auto& p : restricted.inequations) p = poly_substitute(p, s);
                    restricted.assignment[v] = value;
                    restricted.inequations.erase(
                        std::remove_if(restricted.inequations.begin(), restricted.inequations.end(),
                                       [](const Poly& p) { return p.is_constant() && !p.is_zero(); }),
                        restricted.inequations.end());
                    std::string sig = branch_signature(restricted, unknowns);
                    for (std::size_t ib = 0; ib < branches.size(); ++ib) {
                        if (ib == ia || branch_signature(branches[ib], unknowns) != sig) continue;
                        branches[ia].inequations.erase(branches[ia].inequations.begin() +
                                                       static_cast<std::ptrdiff_t>(q));
                        branches.erase(branches.begin() + static_cast<std::ptrdiff_t>(ib));
                        changed = true;
                        break;
                    }
                    if (changed) break;
                }
            }
        }
    }
}

std::string family_label(const SolutionFamily& f)
{
    std::vector<std::string> parts;
    for (auto& name : f.unknowns) {
        auto it = f.assignment.find(name);
        if (it != f.assignment.end()) parts.push_back(name + " = " + it->second.to_string());
    }
    for (auto& p : f.equations) parts.push_back(p.to_string() + " = 0");
    for (auto& p : f.inequations) parts.push_back(p.to_string() + " != 0");
    if (parts.empty()) return "unconstrained";
    std::string out;
    for (auto& p : parts) out += (out.empty() ? "" : ", ") + p;
    return out;
}

SolutionFamily to_family(const Branch& b, const std::vector<Var>& unknowns)
{
    SolutionFamily f;
    for (Var v : unknowns) f.unknowns.push_back(var_name(v));
    for (auto& [v, p] : b.assignment) f.assignment.emplace(var_name(v), p);
    for (Var v : unknowns)
        if (is_free_in(b, v)) f.free.push_back(var_name(v));
    f.equations = family_equations(b);
    for (auto& [v, p] : b.triangular) f.leading.push_back(var_name(v));
    f.leading.resize(f.equations.size());
    for (auto& p : b.inequations) f.inequations.push_back(normalized(p));
    std::sort(f.inequations.begin(), f.inequations.end(),
              [](const Poly& x, const Poly& y) { return x.to_string() < y.to_string(); });
    f.label = family_label(f);
    return f;
}

}  // namespace

std::vector<SolutionFamily> case_split_solve(const std::vector<Poly>& equations, const std::vector<Var>& unknowns,
                                             std::size_t max_depth)
{
    Solver solver(unknowns, max_depth);
    Branch root;
    root.equations = equations;
    solver.run(std::move(root));
    auto& branches = solver.results();
    merge_branches(branches, unknowns);
    std::vector<SolutionFamily> out;
    for (auto& b : branches) out.push_back(to_family(b, unknowns));
    return out;
}

// ---------------------------------------------------------------------------
// Family utilities

std::optional<std::map<Var, Rational>> sample_family(const SolutionFamily& f, const std::function<Rational()>& draw)
{
    std::map<Var, Rational> point;
    for (auto& name : f.free) point[intern(name)] = draw();
    auto bound = [&](const Poly& q) {
        for (Var v : q.variables().items())
            if (!point.contains(v)) return false;
        return true;
    };
    // Reject early so a vanishing pivot cannot leave a leading unknown unsolved.
    for (auto& q : f.inequations)
        if (bound(q) && evaluate(q, point) == 0) return std::nullopt;
    std::vector<Poly> pending = f.equations;
    while (!pending.empty()) {
        bool progress = false;
        for (std::size_t e = 0; e < pending.size(); ++e) {
            std::map<Var, Poly> known;
            for (auto& [v, x] : point) known.emplace(v, Poly(x));
            Poly p = poly_substitute(pending[e], known);
            auto vars = p.variables().items();
            if (vars.empty()) {
                if (!p.is_zero()) return std::nullopt;
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(e));
                progress = true;
                break;
            }
            if (vars.size() == 1 && p.degree_in(vars.front()) == 1) {
                auto [c, r] = linear_parts(p, vars.front());
                point[vars.front()] = -*r.as_constant() / *c.as_constant();
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(e));
                progress = true;
                break;
            }
        }
        if (!progress) return std::nullopt;
    }
    std::map<Var, Rational> values;
    for (auto& [name, value] : f.assignment) {
        if (!bound(value)) return std::nullopt;
        values[intern(name)] = evaluate(value, point);
    }
    point.merge(values);
    for (auto& q : f.inequations)
        if (!bound(q) || evaluate(q, point) == 0) return std::nullopt;
    // Unknowns that appear nowhere stay zero.
    for (auto& name : f.unknowns) point.try_emplace(intern(name), Rational(0));
    return point;
}

bool verify_family(const SolutionFamily& f, std::vector<Multiplication> fixed, std::size_t slot,
                   const IdentitySpec& spec)
{
    if (slot > fixed.size()) throw Error(ErrorKind::SlotMismatch, "slot outside the operation list");
    fixed.insert(fixed.begin() + static_cast<std::ptrdiff_t>(slot), f.table);
    Verdict v = check_identity(fixed, spec);
    if (v.holds) return true;

    // Each triangular equation is free of the earlier leading variables,
    // so eliminating in order leaves nothing to revisit.
    std::vector<std::tuple<Var, Poly, Poly>> chain;
    for (std::size_t e = 0; e < f.equations.size(); ++e) {
        const Poly& eq = f.equations[e];
        std::optional<std::tuple<Var, Poly, Poly>> pick;
        std::vector<Var> candidates = eq.variables().items();
        if (e < f.leading.size() && !f.leading[e].empty()) candidates = {intern(f.leading[e])};
        for (Var var : candidates) {
            if (eq.degree_in(var) != 1) continue;
            auto [c, r] = linear_parts(eq, var);
            if (known_nonzero(c, f.inequations)) {
                pick = std::make_tuple(var, c, r);
                break;
            }
        }
        if (!pick) return false;
        chain.push_back(*pick);
    }
    for (auto& o : v.obstructions) {
        Poly p = o;
        for (auto& [var, c, r] : chain) p = pseudo_substitute(p, var, c, r);
        if (!p.is_zero()) return false;
    }
    return true;
}

std::string unknown_name(std::size_t pair, std::size_t k)
{
    return "g" + std::to_string(pair) + "_" + std::to_string(k);
}

// ---------------------------------------------------------------------------
// Classifiers

namespace {

struct Ansatz {
    Multiplication table;
    std::vector<Var> unknowns;
};

Ansatz make_ansatz(std::size_t n, bool symmetric)
{
    Ansatz a{Multiplication(n), {}};
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) {
            ++pair;
            for (std::size_t k = 0; k < n; ++k) {
                Var g = intern(unknown_name(pair, k + 1));
                a.unknowns.push_back(g);
                Poly pg = Poly::variable(g);
                a.table.at(i, j, k) = pg;
                a.table.at(j, i, k) = symmetric ? pg : -pg;
            }
        }
    return a;
}

std::vector<Poly> linear_constraints(const Multiplication& product, const VarSet& u_vars)
{
    std::vector<Poly> eqs;
    std::size_t n = product.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (auto& [mono, coeff] : coefficients_in(product.at(i, j, k), u_vars)) eqs.push_back(coeff);
    return eqs;
}

Element generic_u(std::size_t n, VarSet& vars)
{
    Element u = Element::symbolic(n, "#u");
    for (std::size_t i = 0; i < n; ++i) vars.insert(u[i].terms().front().mono.factors().front().first);
    return u;
}

enum class Kind { Poisson, GenericPoisson, PostLie };

Classification classify(const Multiplication& given, Kind kind, const ClassifyOptions& options)
{
    if (!given.is_rational())
        throw Error(ErrorKind::SymbolicEntries, "classification needs rational structure constants");
    std::size_t n = given.dim();
    bool postlie = kind == Kind::PostLie;
    Ansatz ansatz = make_ansatz(n, postlie);

    VarSet u_vars;
    Element u = options.fixed_u ? *options.fixed_u : generic_u(n, u_vars);
    if (u.dim() != n) throw Error(ErrorKind::DimMismatch, "reference vector of wrong length");
    // The ansatz always sits in the left operand: the Leibniz rule for a
    // bracket and the post-Lie derivation rule for a product.
    Multiplication k = kantor_product(ansatz.table, given, u);
    LinearSolution lin = solve_linear(linear_constraints(k, u_vars), ansatz.unknowns);

    Classification out;
    out.structure = postlie ? "commutative post-Lie" : kind == Kind::Poisson ? "Poisson" : "generic Poisson";
    for (Var v : ansatz.unknowns) out.unknowns.push_back(var_name(v));
    out.ansatz = ansatz.table;
    out.linear_solution = lin;
    out.linear_stage = ansatz.table.substitute(lin.pivots);

    std::vector<Poly> quadratic;
    if (kind == Kind::Poisson) quadratic = check_identity(out.linear_stage, builtin("jacobi")).obstructions;
    if (kind == Kind::PostLie)
        quadratic = check_identity({out.linear_stage, given}, builtin("postlie_2")).obstructions;

    std::vector<SolutionFamily> fams = case_split_solve(quadratic, lin.free, options.max_depth);
    IdentitySpec spec = builtin(kind == Kind::Poisson          ? "poisson_structure"
                                : kind == Kind::GenericPoisson ? "generic_poisson"
                                                               : "commutative_postlie");
    for (auto& f : fams) {
        std::map<Var, Poly> stage2;
        for (auto& [name, p] : f.assignment) stage2.emplace(intern(name), p);
        std::map<std::string, Poly> full;
        for (auto& [v, p] : lin.pivots) full.emplace(var_name(v), poly_substitute(p, stage2));
        for (auto& [name, p] : f.assignment) full.emplace(name, p);
        f.assignment = full;
        f.unknowns = out.unknowns;
        std::map<Var, Poly> all;
        for (auto& [name, p] : full) all.emplace(intern(name), p);
        f.table = ansatz.table.substitute(all);
        f.label = family_label(f);
        if (postlie) f.verified = verify_family(f, {given}, 0, spec);
        else f.verified = verify_family(f, {given}, 1, spec);
    }
    out.families = std::move(fams);
    return out;
}

}  // namespace

Classification poisson_structures(const Algebra& a, const ClassifyOptions& options)
{
    return classify(a.mult(), Kind::Poisson, options);
}

Classification generic_poisson_structures(const Algebra& a, const ClassifyOptions& options)
{
    return classify(a.mult(), Kind::GenericPoisson, options);
}

Classification postlie_structures(const Algebra& l, bool require_lie, const ClassifyOptions& options)
{
    if (!l.mult().is_rational())
        throw Error(ErrorKind::SymbolicEntries, "classification needs rational structure constants");
    if (require_lie && !check_identity(l.mult(), builtin("lie")).holds)
        throw Error(ErrorKind::LieCheckFailed, "'" + l.name + "' is not a Lie algebra");
    return classify(l.mult(), Kind::PostLie, options);
}

}  // namespace kantorkit
