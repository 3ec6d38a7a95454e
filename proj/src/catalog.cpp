#include "kantorkit/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "kantorkit/constructions.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/identities.hpp"
#include "kantorkit/kantor.hpp"

namespace kantorkit {

namespace {

enum class Sym { None, Commutative, Anti };

struct Entry {
    std::size_t i, j, k;
    std::string coeff;
};

Multiplication table(std::size_t n, const std::vector<Entry>& entries, Sym sym = Sym::None)
{
    Multiplication m(n);
    for (auto& e : entries) {
        Poly c = parse_poly(e.coeff);
        m.at(e.i - 1, e.j - 1, e.k - 1) += c;
        if (e.i == e.j || sym == Sym::None) continue;
        m.at(e.j - 1, e.i - 1, e.k - 1) += sym == Sym::Anti ? -c : c;
    }
    return m;
}

Algebra algebra(std::string name, Multiplication m, std::vector<std::string> params = {})
{
    return make_algebra(std::move(name), std::move(m), std::move(params));
}

Algebra two_slot(std::string name, std::string first, Multiplication a, std::string second, Multiplication b,
                 std::vector<std::string> params = {})
{
    Algebra alg = make_algebra(std::move(name), std::move(a), std::move(params));
    alg.slots.front().name = std::move(first);
    alg.slots.push_back({std::move(second), std::move(b)});
    return alg;
}

TagCheck tag(std::string identity, std::vector<std::string> slots = {}, std::map<std::string, Poly> bindings = {})
{
    return {std::move(identity), std::move(slots), std::move(bindings), true};
}

TagCheck not_tag(std::string identity)
{
    return {std::move(identity), {}, {}, false};
}

std::vector<TagCheck> tags(std::initializer_list<const char*> names)
{
    std::vector<TagCheck> out;
    for (auto* n : names) out.push_back(tag(n));
    return out;
}

Element vec(std::initializer_list<int> coords)
{
    std::vector<Poly> out;
    for (int c : coords) out.emplace_back(c);
    return Element(out);
}

Matrix diag(std::initializer_list<int> d)
{
    Vector v;
    for (int x : d) v.emplace_back(x);
    return Matrix::diagonal(v);
}

Matrix columns(std::vector<std::vector<int>> cols)
{
    std::vector<Vector> out;
    for (auto& c : cols) {
        Vector v;
        for (int x : c) v.emplace_back(x);
        out.push_back(v);
    }
    return Matrix::from_columns(out);
}

Poly P(const std::string& text)
{
    return parse_poly(text);
}

IsoWitness square_witness(std::string label, Element u, std::string target, Matrix M,
                          std::map<std::string, Poly> bindings = {}, std::string note = "")
{
    IsoWitness w;
    w.kind = IsoWitness::Kind::Square;
    w.label = std::move(label);
    w.u = std::move(u);
    w.target = std::move(target);
    w.M = std::move(M);
    w.bindings = std::move(bindings);
    w.note = std::move(note);
    return w;
}

// Truncated polynomial algebra Q[t]/(t^4) on t^0..t^3.
Multiplication truncated_polynomials()
{
    Multiplication m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; i + j < 4; ++j) m.at(i, j, i + j) = Poly(1);
    return m;
}

// Euler derivation t d/dt, which scales t^k by k.
Matrix euler_derivation()
{
    return diag({0, 1, 2, 3});
}

std::vector<CatalogEntry> entries()
{
    std::vector<CatalogEntry> out;
    auto add = [&](Algebra a) -> CatalogEntry& {
        out.push_back(CatalogEntry{std::move(a), {}, {}, {}, {}, {}});
        return out.back();
    };

    // Three-dimensional Jordan algebras.
    {
        auto& e = add(algebra("T02US", table(3,
                                             {{1, 1, 1, "1"},
                                              {2, 2, 2, "1"},
                                              {3, 3, 1, "1"},
                                              {3, 3, 2, "1"},
                                              {1, 3, 3, "1/2"},
                                              {2, 3, 3, "1/2"}},
                                             Sym::Commutative)));
        e.tags = tags({"commutative", "jordan"});
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(3,
                                   {{1, 1, 1, "-u1"},
                                    {2, 2, 2, "-u2"},
                                    {3, 3, 1, "-u2"},
                                    {3, 3, 2, "-u1"},
                                    {3, 3, 3, "-u3"},
                                    {1, 3, 3, "-u1/2"},
                                    {1, 3, 1, "-u3"},
                                    {2, 3, 3, "-u2/2"},
                                    {2, 3, 2, "-u3"},
                                    {1, 2, 3, "-u3/2"}},
                                   Sym::Commutative)});
        e.witnesses.push_back(square_witness("u = (1,1,0)", vec({1, 1, 0}), "T02US", diag({-1, -1, 1})));
        e.witnesses.push_back(square_witness("u = (0,1,0)", vec({0, 1, 0}), "T13",
                                             columns({{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}})));
        e.notes.push_back("the square includes e1*e2 = e2*e1 = -(u3/2)e3");
        e.notes.push_back("at u = (0,0,u3) the square is isomorphic to T08AU, whose table is not available here");
    }
    {
        auto& e = add(algebra("T13", table(3, {{1, 1, 1, "1"}, {1, 2, 2, "1/2"}, {2, 2, 3, "1"}}, Sym::Commutative)));
        e.tags = tags({"commutative", "jordan"});
        e.squares.push_back(
            {"symbolic u", {}, std::nullopt,
             table(3, {{1, 1, 1, "-u1"}, {1, 2, 2, "-u1/2"}, {2, 2, 3, "-u1"}}, Sym::Commutative)});
        e.witnesses.push_back(square_witness("u = (1,0,0)", vec({1, 0, 0}), "T13", diag({-1, 1, -1})));
    }
    {
        auto& e = add(algebra("T14", table(3, {{1, 1, 1, "1"}, {1, 2, 2, "1/2"}}, Sym::Commutative)));
        e.tags = tags({"commutative", "jordan"});
        e.squares.push_back(
            {"symbolic u", {}, std::nullopt, table(3, {{1, 1, 1, "-u1"}, {1, 2, 2, "-u1/2"}}, Sym::Commutative)});
        e.witnesses.push_back(square_witness("u = (1,0,0)", vec({1, 0, 0}), "T14", diag({-1, 1, 1})));
    }

    // Three-dimensional anticommutative non-Lie algebras.
    {
        auto& e = add(algebra("A1_alpha",
                              table(3, {{1, 2, 3, "1"}, {1, 3, 1, "1"}, {1, 3, 3, "1"}, {2, 3, 2, "alpha"}}, Sym::Anti),
                              {"alpha"}));
        e.tags = {tag("anticommutative"), not_tag("jacobi")};
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(3,
                                   {{1, 2, 3, "u3*(1 + alpha)"},
                                    {1, 2, 2, "-u3*alpha"},
                                    {1, 3, 3, "-u2*(1 + alpha)"},
                                    {1, 3, 2, "u2*alpha"},
                                    {2, 3, 3, "u1*(1 + alpha)"},
                                    {2, 3, 2, "-u1*alpha"}},
                                   Sym::Anti)});
        e.witnesses.push_back(square_witness("alpha = 1, u = e3", vec({0, 0, 1}), "M3",
                                             columns({{-1, 0, 0}, {0, -1, 2}, {0, 0, 1}}), {{"alpha", Poly(1)}}));
    }
    {
        auto& e = add(algebra("A2", table(3, {{1, 2, 1, "1"}, {2, 3, 2, "1"}}, Sym::Anti)));
        e.tags = {tag("anticommutative"), not_tag("jacobi")};
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(3, {{1, 2, 1, "u3"}, {1, 3, 1, "-u2"}, {2, 3, 1, "u1"}}, Sym::Anti)});
        e.witnesses.push_back(
            square_witness("u = e3", vec({0, 0, 1}), "M3", columns({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}})));
    }
    {
        auto& e = add(algebra("A3", table(3, {{1, 2, 3, "1"}, {1, 3, 1, "1"}, {2, 3, 2, "1"}}, Sym::Anti)));
        e.tags = {tag("anticommutative"), not_tag("jacobi")};
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(3, {{1, 2, 3, "2*u3"}, {1, 3, 3, "-2*u2"}, {2, 3, 3, "2*u1"}}, Sym::Anti)});
        e.witnesses.push_back(square_witness("u = e3", vec({0, 0, 1}), "H3", diag({1, 1, 2})));
    }

    // Four-dimensional binary Lie algebras.
    {
        auto& e = add(algebra("A0", table(4, {{1, 2, 3, "1"}, {3, 4, 3, "1"}}, Sym::Anti)));
        e.tags = {tag("anticommutative"), tag("binary_lie"), not_tag("jacobi")};
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(4, {{1, 2, 3, "-u4"}, {1, 4, 3, "u2"}, {2, 4, 3, "-u1"}}, Sym::Anti)});
        e.witnesses.push_back(square_witness("u = e4", vec({0, 0, 0, 1}), "H4", diag({1, 1, -1, 1})));
    }
    {
        auto& e = add(algebra("A_alpha",
                              table(4, {{1, 2, 3, "1"}, {1, 4, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 3, "alpha"}}, Sym::Anti),
                              {"alpha"}));
        e.tags = {tag("anticommutative"), tag("binary_lie"), not_tag("jacobi"),
                  tag("jacobi", {}, {{"alpha", Poly(2)}})};
        e.squares.push_back({"symbolic u", {}, std::nullopt,
                             table(4,
                                   {{1, 2, 3, "(2 - alpha)*u4"},
                                    {1, 4, 3, "-(2 - alpha)*u2"},
                                    {2, 4, 3, "(2 - alpha)*u1"}},
                                   Sym::Anti)});
        e.witnesses.push_back(
            square_witness("alpha = 0, u = e4", vec({0, 0, 0, 1}), "H4", diag({1, 1, 2, 1}), {{"alpha", Poly(0)}}));
        e.notes.push_back("alpha = 2 is a Lie algebra, alpha = -1 is Malcev");
    }

    // Lie algebras.
    {
        auto& e = add(algebra("S2", table(2, {{1, 2, 2, "1"}}, Sym::Anti)));
        e.tags = tags({"anticommutative", "jacobi", "lie"});
        Multiplication first = table(2, {{1, 1, 2, "g1_2"}}, Sym::Commutative);
        Multiplication second = table(2, {{1, 1, 2, "g1_2"}, {1, 2, 2, "1"}}, Sym::Commutative);
        PolyMatrix scale{{Poly(1), Poly()}, {Poly(), P("g1_2")}};
        e.normal_forms.push_back({"(I)", first, scale, table(2, {{1, 1, 2, "1"}}, Sym::Commutative)});
        e.normal_forms.push_back({"(II)", second.substitute({{intern("g1_2"), Poly()}}),
                                  {{Poly(1), Poly()}, {Poly(), Poly(1)}},
                                  table(2, {{1, 2, 2, "1"}}, Sym::Commutative)});
        e.normal_forms.push_back(
            {"(III)", second, scale, table(2, {{1, 1, 2, "1"}, {1, 2, 2, "1"}}, Sym::Commutative)});
    }
    {
        auto& e = add(algebra("H3", table(3, {{1, 2, 3, "1"}}, Sym::Anti)));
        e.tags = tags({"anticommutative", "jacobi", "lie"});
    }
    {
        auto& e = add(algebra("M3", table(3, {{1, 2, 2, "1"}}, Sym::Anti)));
        e.tags = tags({"anticommutative", "jacobi", "lie"});
    }
    {
        auto& e = add(algebra("H4", table(4, {{1, 2, 3, "1"}}, Sym::Anti)));
        e.tags = tags({"anticommutative", "jacobi", "lie"});
    }

    // Two-dimensional Jordan algebra of the Poisson example, and the zero algebra.
    {
        auto& e = add(algebra("J2", table(2, {{1, 1, 1, "1"}, {1, 2, 2, "1/2"}}, Sym::Commutative)));
        e.tags = {tag("commutative"), tag("jordan"), not_tag("associative")};
    }
    {
        auto& e = add(algebra("Z2", Multiplication(2)));
        e.tags = tags({"commutative", "anticommutative", "associative", "jacobi", "lie"});
    }

    // Instances of the varieties whose Kantor squares are described in closed form.
    {
        auto& e = add(algebra("LS2", table(2, {{1, 1, 1, "1"}, {1, 2, 2, "-1"}})));
        e.tags = {tag("left_symmetric"), not_tag("associative")};
    }
    {
        auto& e = add(algebra("AL1", table(3, {{1, 1, 2, "1"}, {1, 3, 2, "1"}})));
        e.tags = {tag("almost_lie_1"), tag("middle_commutative"), not_tag("commutative"),
                  not_tag("anticommutative")};
    }
    {
        auto& e = add(algebra("TL3", table(3, {{1, 1, 2, "1"}, {1, 3, 3, "1"}, {3, 1, 3, "-1"}})));
        e.tags = {tag("right_leibniz"), tag("two_sided_leibniz"), tag("weakly_associative"),
                  not_tag("anticommutative")};
    }
    {
        auto& e = add(algebra(
            "ML5", table(5, {{1, 1, 5, "1"}, {1, 2, 3, "1"}, {1, 3, 4, "1"}, {2, 5, 4, "-2"}}, Sym::Commutative)));
        e.tags = {tag("mock_lie"), not_tag("associative")};
    }
    {
        auto& e = add(algebra("AL2", table(4, {{1, 2, 2, "1"}, {2, 3, 4, "1"}}, Sym::Anti)));
        e.tags = {tag("almost_lie_2"), not_tag("jacobi")};
    }
    {
        auto& e = add(algebra("AA3", table(3, {{1, 1, 2, "1"}, {1, 2, 3, "1"}, {2, 1, 3, "-1"}})));
        e.tags = {tag("anti_associative"), not_tag("associative")};
    }
    {
        auto& e = add(algebra("N2", table(2, {{1, 1, 2, "1"}})));
        e.tags = tags({"weakly_associative", "right_zinbiel", "right_commutative", "right_novikov",
                       "middle_commutative", "pseudo_flexible"});
    }
    {
        // 2x2 matrices on E11, E12, E21, E22 with transposition as involution.
        Multiplication m(4);
        auto idx = [](int r, int c) { return static_cast<std::size_t>(2 * r + c); };
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) m.at(idx(a, b), idx(b, c), idx(a, c)) = Poly(1);
        auto& e = add(algebra("M2", m));
        e.algebra.basis = {"E11", "E12", "E21", "E22"};
        e.tags = {tag("associative"), not_tag("commutative")};
        e.notes.push_back("transposition is an involution and u = 2*(E11 + E22) is central and self-adjoint");
    }

    // Poisson-type pairs.
    {
        Multiplication dot = table(3, {{1, 1, 1, "1"}, {1, 2, 2, "1"}, {1, 3, 3, "1"}}, Sym::Commutative);
        Multiplication br = table(3, {{2, 3, 2, "1"}}, Sym::Anti);
        auto& e = add(two_slot("P3", "dot", dot, "bracket", br));
        e.tags = {tag("poisson", {"dot", "bracket"}), tag("generic_poisson", {"dot", "bracket"})};
    }
    {
        Multiplication dot = truncated_polynomials();
        auto& e = add(two_slot("Qt4", "dot", dot, "bracket", bracket_from_derivation(dot, euler_derivation())));
        e.algebra.basis = {"t0", "t1", "t2", "t3"};
        e.tags = {tag("commutative_associative", {"dot"}), tag("quasi_commutative_associative", {"dot"}),
                  tag("middle_commutative", {"dot"}), tag("pseudo_flexible", {"dot"}),
                  tag("transposed_poisson", {"dot", "bracket"})};
        e.notes.push_back("bracket [x,y] = x D(y) - D(x) y for the Euler derivation D = t d/dt");
        e.notes.push_back("d/dt itself is not a derivation of Q[t]/(t^4)");
    }
    {
        Multiplication dot = truncated_polynomials();
        Matrix D = euler_derivation();
        Multiplication circ = Multiplication::tabulate(4, [&](const Element& x, const Element& y) {
            Element dy(4);
            for (std::size_t k = 0; k < 4; ++k) dy[k] = y[k] * D(k, k);
            return multiply(dot, x, dy);
        });
        auto& e = add(two_slot("Qt4_prelie", "dot", dot, "circ", circ));
        e.algebra.basis = {"t0", "t1", "t2", "t3"};
        e.tags = {tag("right_prelie_poisson", {"dot", "circ"})};
        e.notes.push_back("x o y = x D(y) for the Euler derivation D = t d/dt");
    }
    {
        Multiplication circ = table(3, {{3, 1, 1, "1"}, {3, 2, 2, "1"}, {3, 3, 3, "1"}});
        Multiplication dot =
            table(3,
                  {{1, 3, 1, "a"}, {1, 3, 2, "b"}, {2, 2, 2, "c"}, {2, 3, 2, "a"}, {3, 3, 1, "d"}, {3, 3, 2, "f"},
                   {3, 3, 3, "a"}},
                  Sym::Commutative);
        auto& e = add(two_slot("C8", "dot", dot, "circ", circ, {"a", "b", "c", "d", "f"}));
        e.algebra.constraints = {P("f*c"), P("a*b"), P("b*c")};
        TagCheck fails_nvb = tag("novikov_poisson_nvb", {"dot", "circ"}, {{"b", Poly()}, {"f", Poly()}});
        fails_nvb.holds = false;
        e.tags = {tag("left_novikov", {"circ"}),
                  tag("commutative_associative", {"dot"}, {{"b", Poly()}, {"f", Poly()}}),
                  tag("left_novikov_poisson", {"dot", "circ"}, {{"b", Poly()}, {"c", Poly()}}),
                  tag("left_prelie_poisson", {"dot", "circ"}, {{"b", Poly()}, {"c", Poly()}}),
                  fails_nvb};
        e.notes.push_back("with e3 o e_i = e_i, (e2 e2) o e3 - e2 (e2 o e3) = 0 but (e2 e3) o e2 - e2 (e3 o e2) = -c e2, "
                          "so the bundle needs c = 0 besides the side constraints");
        IsoWitness w;
        w.kind = IsoWitness::Kind::Pair;
        w.label = "a = 1, u = e3";
        w.bindings = {{"a", Poly(1)}, {"b", Poly()}, {"c", Poly()}, {"d", Poly()}, {"f", Poly()}};
        w.u = vec({0, 0, 1});
        w.target = "C8";
        w.M = diag({-1, -1, -1});
        w.note = "the scalar map -1/u3 times the identity";
        e.witnesses.push_back(w);
    }
    return out;
}

// Unverified entries, for resolving witness targets during the self-test.
const std::vector<CatalogEntry>& built_entries()
{
    static const std::vector<CatalogEntry> built = entries();
    return built;
}

std::vector<Multiplication> slots_for(const Algebra& a, const std::vector<std::string>& names,
                                      const std::map<Var, Poly>& bindings)
{
    std::vector<Multiplication> out;
    if (names.empty()) out.push_back(a.mult().substitute(bindings));
    for (auto& n : names) out.push_back(a.slot(n).substitute(bindings));
    return out;
}

std::string describe(const std::map<std::string, Poly>& bindings)
{
    std::string out;
    for (auto& [k, v] : bindings) out += (out.empty() ? " at " : ", ") + k + " = " + v.to_string();
    return out;
}

}  // namespace

bool CatalogEntry::has_tag(std::string_view identity) const
{
    return std::any_of(tags.begin(), tags.end(),
                       [&](const TagCheck& t) { return t.identity == identity && t.holds && t.bindings.empty(); });
}

std::map<Var, Poly> bindings_of(const std::map<std::string, Poly>& named)
{
    std::map<Var, Poly> out;
    for (auto& [k, v] : named) out.emplace(intern(k), v);
    return out;
}

std::vector<CatalogEntry> build_catalog()
{
    return entries();
}

std::vector<std::string> self_test(const CatalogEntry& entry)
{
    std::vector<std::string> failures;
    const Algebra& a = entry.algebra;
    auto fail = [&](const std::string& what) { failures.push_back(a.name + ": " + what); };
    try {
        a.validate();
    } catch (const Error& e) {
        fail(e.what());
        return failures;
    }
    for (auto& t : entry.tags) {
        Verdict v = check_identity(slots_for(a, t.slots, bindings_of(t.bindings)), builtin(t.identity));
        if (v.holds != t.holds)
            fail(std::string(t.holds ? "" : "not ") + t.identity + describe(t.bindings) + " does not verify");
    }
    for (auto& s : entry.squares) {
        Multiplication m = a.mult().substitute(bindings_of(s.bindings));
        Element u = s.u ? *s.u : Element::symbolic(m.dim(), "u");
        if (!(kantor_square(m, u) == s.table)) fail("Kantor square (" + s.label + ") differs from the stored table");
    }
    for (auto& w : entry.witnesses) {
        auto b = bindings_of(w.bindings);
        bool ok = false;
        if (w.kind == IsoWitness::Kind::Square) {
            Multiplication square = kantor_square(a.mult().substitute(b), w.u);
            if (w.target == a.name) ok = verify_isomorphism(w.M, square, a.mult());
            for (auto& e : built_entries())
                if (w.target != a.name && e.algebra.name == w.target)
                    ok = verify_isomorphism(w.M, square, e.algebra.mult());
        } else {
            Multiplication dot = a.slot("dot").substitute(b), circ = a.slot("circ").substitute(b);
            auto [first, second] = kantor_pair(dot, circ, w.u);
            ok = verify_isomorphism(w.M, first, dot) && verify_isomorphism(w.M, second, circ);
        }
        if (!ok) fail("isomorphism witness (" + w.label + ") onto " + w.target + " does not verify");
    }
    for (auto& nf : entry.normal_forms)
        if (!intertwines(nf.M, nf.from, nf.to)) fail("normal form " + nf.label + " does not verify");
    return failures;
}

const std::vector<CatalogEntry>& load_catalog()
{
    static std::once_flag once;
    static std::vector<CatalogEntry> catalog;
    std::call_once(once, [] {
        std::vector<CatalogEntry> built = build_catalog();
        std::string report;
        for (auto& e : built)
            for (auto& f : self_test(e)) report += "\n  " + f;
        if (!report.empty()) throw Error(ErrorKind::CatalogSelfTestFailed, "catalog self-test failed:" + report);
        catalog = std::move(built);
    });
    return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name)
{
    for (auto& e : load_catalog())
        if (e.algebra.name == name) return e;
    throw Error(ErrorKind::UnknownAlgebra, "no catalog algebra named '" + std::string(name) + "'");
}

}  // namespace kantorkit
