#include <doctest.h>

#include "../support/oracle.hpp"
#include "kantorkit/catalog.hpp"
#include "kantorkit/kantor.hpp"

using namespace kantorkit;

TEST_SUITE("kantor")
{
    TEST_CASE("matches the three-term definition on random tensors")
    {
        oracle::Random rng(1);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = rng.integer(1, 4);
            auto a = rng.tensor(n), b = rng.tensor(n);
            auto u = rng.vector(n);
            auto lib = kantor_product(oracle::to(a), oracle::to(b), Element::from_rationals(u));
            CHECK(lib == oracle::to(oracle::kantor(a, b, u)));
        }
    }

    TEST_CASE("linear in u and in each multiplication")
    {
        oracle::Random rng(2);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = rng.integer(1, 4);
            auto a = oracle::to(rng.tensor(n)), b = oracle::to(rng.tensor(n)), c = oracle::to(rng.tensor(n));
            auto u = Element::from_rationals(rng.vector(n)), v = Element::from_rationals(rng.vector(n));
            Rational s = rng.rational(0), t = rng.rational(0);
            Poly ps(s), pt(t);
            CHECK(kantor_product(a, b, ps * u + pt * v) ==
                  ps * kantor_product(a, b, u) + pt * kantor_product(a, b, v));
            CHECK(kantor_product(ps * a + c, b, u) == ps * kantor_product(a, b, u) + kantor_product(c, b, u));
            CHECK(kantor_product(a, ps * b + c, u) == ps * kantor_product(a, b, u) + kantor_product(a, c, u));
        }
    }

    TEST_CASE("symbolic u specializes to numeric u")
    {
        oracle::Random rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = rng.integer(1, 3);
            auto a = oracle::to(rng.tensor(n));
            auto sym = kantor_square(a, Element::symbolic(n));
            auto u = rng.vector(n);
            std::map<Var, Poly> at;
            for (std::size_t i = 0; i < n; ++i) at[intern("u" + std::to_string(i + 1))] = Poly(u[i]);
            CHECK(sym.substitute(at) == kantor_square(a, Element::from_rationals(u)));
        }
    }

    TEST_CASE("right product mirrors the left one")
    {
        oracle::Random rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = rng.integer(1, 3);
            auto a = oracle::to(rng.tensor(n)), b = oracle::to(rng.tensor(n));
            auto u = Element::from_rationals(rng.vector(n));
            CHECK(right_kantor_product(a, b, u) == kantor_product(a.opposite(), b.opposite(), u).opposite());
        }
    }

    TEST_CASE("right and left squares agree on weakly associative catalog algebras")
    {
        int seen = 0;
        for (auto& e : load_catalog()) {
            if (!e.has_tag("weakly_associative") || !e.algebra.params.empty()) continue;
            const auto& m = e.algebra.mult();
            if (!check_identity(m, builtin("weakly_associative")).holds) continue;
            auto u = Element::symbolic(m.dim());
            CHECK_MESSAGE(right_kantor_square(m, u) == kantor_square(m, u), e.algebra.name);
            ++seen;
        }
        CHECK(seen > 0);
    }

    TEST_CASE("commutative associative squares are -u x y")
    {
        auto& qt = catalog_entry("Qt4").algebra;
        const auto& dot = qt.slot("dot");
        auto u = Element::symbolic(4);
        auto expected = Multiplication::tabulate(
            4, [&](const Element& x, const Element& y) { return -multiply(dot, u, multiply(dot, x, y)); });
        CHECK(kantor_square(dot, u) == expected);
    }
}
