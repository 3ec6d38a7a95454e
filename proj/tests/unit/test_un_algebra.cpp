#include <doctest.h>

#include "../support/oracle.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/kantor.hpp"
#include "kantorkit/un_algebra.hpp"

using namespace kantorkit;

TEST_SUITE("un_algebra")
{
    TEST_CASE("elementary multiplications")
    {
        auto a = elementary(1, 2, 2, 2);
        CHECK(multiply(a, Element::basis(2, 0), Element::basis(2, 1)) == Element::basis(2, 1));
        CHECK(multiply(a, Element::basis(2, 1), Element::basis(2, 0)).is_zero());
        CHECK_THROWS_AS(elementary(3, 1, 1, 2), Error);
        CHECK(UnIndex{1, 2, 1}.to_string() == "a12^1");
        CHECK(UnIndex{10, 2, 1}.to_string(10) == "a10,2^1");
    }

    TEST_CASE("decompose inverts to_multiplication")
    {
        oracle::Random rng(12);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = rng.integer(1, 3);
            auto m = oracle::to(rng.tensor(n));
            CHECK(to_multiplication(decompose(m)) == m);
        }
    }

    TEST_CASE("table size and agreement with the Kantor product")
    {
        auto table = un_table(2);
        CHECK(table.size() == 64);
        for (auto& e : table) {
            auto x = elementary(e.left.i, e.left.j, e.left.k, 2);
            auto y = elementary(e.right.i, e.right.j, e.right.k, 2);
            auto direct = kantor_product(oracle::to(oracle::from(x)), y, first_basis_vector(2));
            CHECK(to_multiplication(e.value) == direct);
        }
        CHECK(un_table(1).size() == 1);
        CHECK(un_table(3).size() == 729);
    }

    TEST_CASE("bracket is bilinear")
    {
        auto x = UnElement::elementary(1, 1, 1, 2) + UnElement::elementary(1, 2, 2, 2);
        auto y = UnElement::elementary(2, 2, 1, 2);
        auto lhs = un_bracket(x, y);
        auto rhs = un_bracket(UnElement::elementary(1, 1, 1, 2), y) + un_bracket(UnElement::elementary(1, 2, 2, 2), y);
        CHECK(lhs == rhs);
        CHECK(UnElement(2).to_string() == "0");
    }
}
