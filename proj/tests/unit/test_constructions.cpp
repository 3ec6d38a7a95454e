#include <doctest.h>

#include "../support/oracle.hpp"
#include "kantorkit/catalog.hpp"
#include "kantorkit/constructions.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/kantor.hpp"

using namespace kantorkit;

namespace {

// Q[t]/(t^4) on t0..t3, built here rather than taken from the catalog.
oracle::Tensor truncated_polynomials()
{
    oracle::Tensor t(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; i + j < 4; ++j) t.at(i, j, i + j) = 1;
    return t;
}

Matrix d_dt()
{
    Matrix D(4, 4);
    for (std::size_t i = 1; i < 4; ++i) D(i - 1, i) = static_cast<long>(i);
    return D;
}

Matrix euler()
{
    return Matrix::diagonal({0, 1, 2, 3});
}

}  // namespace

TEST_SUITE("constructions")
{
    TEST_CASE("derivations of the truncated polynomial ring")
    {
        auto dot = oracle::to(truncated_polynomials());
        CHECK(is_derivation(dot, euler()));
        CHECK(!is_derivation(dot, d_dt()));
        CHECK(is_derivation(dot, Matrix(4, 4)));
        try {
            bracket_from_derivation(dot, d_dt());
            FAIL("d/dt was accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotDerivation);
        }
    }

    TEST_CASE("bracket x D(y) - D(x) y")
    {
        auto t = truncated_polynomials();
        auto D = euler();
        auto br = bracket_from_derivation(oracle::to(t), D);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                auto x = oracle::unit(4, i), y = oracle::unit(4, j);
                auto want = oracle::sub(oracle::mul(t, x, D * y), oracle::mul(t, D * x, y));
                CHECK(br.product(i, j) == Element::from_rationals(want));
            }
        CHECK(check_identity({oracle::to(t), br}, builtin("transposed_poisson")).holds);
        CHECK(br == catalog_entry("Qt4").algebra.slot("bracket"));
    }

    TEST_CASE("non commutative associative input is rejected")
    {
        const auto& h = catalog_entry("H3").algebra.mult();
        try {
            bracket_from_derivation(h, Matrix(3, 3));
            FAIL("Lie product accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotCommutativeAssociative);
        }
    }

    TEST_CASE("Kantor pair of a transposed Poisson algebra")
    {
        auto dot = oracle::to(truncated_polynomials());
        auto br = bracket_from_derivation(dot, euler());
        auto [star, curly] = kantor_pair(dot, br, Element::symbolic(4));
        CHECK(star == kantor_product(br, dot, Element::symbolic(4)));
        CHECK(curly == kantor_product(dot, br, Element::symbolic(4)));
        CHECK(check_identity({star, curly}, builtin("transposed_poisson")).holds);
    }

    TEST_CASE("sum of products")
    {
        oracle::Random rng(6);
        auto a = rng.tensor(3), b = rng.tensor(3);
        auto s = sum_product(oracle::to(a), oracle::to(b));
        auto x = rng.vector(3), y = rng.vector(3);
        CHECK(multiply(s, Element::from_rationals(x), Element::from_rationals(y)) ==
              Element::from_rationals(oracle::add(oracle::mul(a, x, y), oracle::mul(b, x, y))));
        CHECK_THROWS_AS(sum_product(Multiplication(2), Multiplication(3)), Error);
    }
}
