#include <doctest.h>

#include "../support/oracle.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/linalg.hpp"
#include "kantorkit/poly.hpp"

using namespace kantorkit;

namespace {

Poly random_poly(oracle::Random& rng, const std::vector<std::string>& names)
{
    Poly p;
    int terms = rng.integer(0, 4);
    for (int t = 0; t < terms; ++t) {
        Poly m(rng.rational(0));
        for (auto& n : names) m *= pow(Poly::variable(n), static_cast<std::uint32_t>(rng.integer(0, 2)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_SUITE("exactmath")
{
    TEST_CASE("rational text")
    {
        CHECK(to_string(parse_rational("6/4")) == "3/2");
        CHECK(to_string(parse_rational("-4/2")) == "-2");
        CHECK(to_string(parse_rational("0")) == "0");
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("x"), Error);
    }

    TEST_CASE("natural name order")
    {
        CHECK(name_less("u2", "u10"));
        CHECK(!name_less("u10", "u2"));
        CHECK(name_less("a", "b"));
    }

    TEST_CASE("polynomial text is canonical")
    {
        Poly p = parse_poly("u3^2 - 1/2*u1");
        CHECK(p.to_string() == "-1/2*u1 + u3^2");
        CHECK(parse_poly(p.to_string()) == p);
        CHECK(parse_poly("(x+1)^2 - x^2 - 2*x") == Poly(1));
        CHECK(parse_poly("x/2") == Rational(1, 2) * Poly::variable("x"));
        CHECK_THROWS_AS(parse_poly("x/y"), Error);
        CHECK_THROWS_AS(parse_poly("x +"), Error);
    }

    TEST_CASE("ring operations agree with evaluation")
    {
        oracle::Random rng(11);
        std::vector<std::string> names{"p", "q", "r"};
        for (int trial = 0; trial < 200; ++trial) {
            Poly a = random_poly(rng, names), b = random_poly(rng, names);
            std::map<Var, Rational> pt;
            for (auto& n : names) pt[intern(n)] = rng.rational(0);
            Rational ea = evaluate(a, pt), eb = evaluate(b, pt);
            CHECK(evaluate(a + b, pt) == ea + eb);
            CHECK(evaluate(a - b, pt) == ea - eb);
            CHECK(evaluate(a * b, pt) == ea * eb);
            CHECK(a * b == b * a);
            CHECK(parse_poly(a.to_string()) == a);
            if (!b.is_zero()) {
                auto q = divide_exact(a * b, b);
                REQUIRE(q);
                CHECK(*q == a);
            }
        }
    }

    TEST_CASE("substitution, coefficients and content")
    {
        Poly p = parse_poly("x^2*y + 3*x*y*z - y");
        auto s = poly_substitute(p, {{intern("x"), parse_poly("z + 1")}});
        CHECK(s == parse_poly("(z+1)^2*y + 3*(z+1)*y*z - y"));
        auto parts = coefficients_in(p, VarSet{intern("x")});
        Poly back;
        for (auto& [m, c] : parts) back += Poly::monomial(m, 1) * c;
        CHECK(back == p);
        CHECK(Poly::monomial(monomial_content(parse_poly("x^2*y + x*y^3")), 1) == parse_poly("x*y"));
        CHECK(monic(parse_poly("2*x + 4*y")) == parse_poly("1/2*x + y"));
        CHECK(monic(Poly()).is_zero());
        CHECK_THROWS_AS(evaluate(p, {}), Error);
    }

    TEST_CASE("row reduction, kernel and inverse")
    {
        oracle::Random rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t r = rng.integer(1, 4), c = rng.integer(1, 4);
            Matrix m(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(0.4);
            auto ker = kernel(m);
            CHECK(ker.size() + rank(m) == c);
            for (auto& v : ker) CHECK(oracle::is_zero(m * v));
            if (r == c) {
                if (determinant(m) != 0) CHECK(m * inverse(m) == Matrix::identity(r));
                else CHECK_THROWS_AS(inverse(m), Error);
            }
        }
        CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == -2);
    }

    TEST_CASE("determinant matches cofactor expansion")
    {
        std::function<Rational(const Matrix&)> cofactor = [&](const Matrix& m) -> Rational {
            if (m.rows() == 1) return m(0, 0);
            Rational s = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Matrix minor(m.rows() - 1, m.cols() - 1);
                for (std::size_t i = 1; i < m.rows(); ++i)
                    for (std::size_t k = 0, kk = 0; k < m.cols(); ++k)
                        if (k != j) minor(i - 1, kk++) = m(i, k);
                s += (j % 2 ? -1 : 1) * m(0, j) * cofactor(minor);
            }
            return s;
        };
        oracle::Random rng(8);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = rng.integer(1, 4);
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
            CHECK(determinant(m) == cofactor(m));
        }
    }

    TEST_CASE("subspaces")
    {
        auto a = Subspace::span(3, {{1, 1, 0}, {2, 2, 0}});
        CHECK(a.dim() == 1);
        CHECK(a.contains(Vector{3, 3, 0}));
        CHECK(!a.contains(Vector{1, 0, 0}));
        auto b = Subspace::span(3, {{0, 0, 1}});
        CHECK((a + b).dim() == 2);
        CHECK((a + b) == (b + a));
        CHECK(Subspace::full(3).contains(a));
    }

    TEST_CASE("affine solver")
    {
        Var x = intern("sx"), y = intern("sy"), z = intern("sz");
        auto sol = solve_linear({parse_poly("sx + sy - 1"), parse_poly("2*sx + 2*sy - 2"), parse_poly("sz - sy")},
                                {x, y, z});
        CHECK(sol.free.size() == 1);
        for (auto& [v, val] : sol.pivots) CHECK(val.variables().size() <= 1);
        CHECK_THROWS_AS(solve_linear({parse_poly("sx - 1"), parse_poly("sx - 2")}, {x}), Error);
        CHECK_THROWS_AS(solve_linear({parse_poly("sx*sy")}, {x, y}), Error);
        CHECK_THROWS_AS(solve_linear({parse_poly("sx - t")}, {x}), Error);
    }
}
