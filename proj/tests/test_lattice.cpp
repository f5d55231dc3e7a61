#include "effbound/lattice.hpp"

#include "support/errors.hpp"
#include "support/random_models.hpp"

#include <doctest.h>

using namespace effbound;
using testing_support::error_of;
using testing_support::Rng;
using testing_support::uniform;

namespace {

// Cofactor expansion along the first row; independent of Bareiss.
Integer laplace_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        const Integer term = m(0, c) * laplace_det(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

IntMatrix random_matrix(Rng& rng, std::size_t n, int bound, bool symmetric)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            m(i, j) = uniform(rng, -bound, bound);
            if (symmetric)
                m(j, i) = m(i, j);
        }
    return m;
}

RatVector multiply(const IntMatrix& m, const RatVector& x)
{
    RatVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += Rational(m(i, j)) * x[j];
    return out;
}

bool sylvester_oracle(const IntMatrix& m)
{
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        const Integer minor = laplace_det(m.principal(idx));
        if ((k % 2 == 1 && minor >= 0) || (k % 2 == 0 && minor <= 0))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("rational helpers")
{
    CHECK(floor(Rational(-3, 2)) == -2);
    CHECK(ceil(Rational(-3, 2)) == -1);
    CHECK(floor(Rational(5, 2)) == 2);
    CHECK(least_integer_above(Rational(2)) == 3);
    CHECK(least_integer_above(Rational(-3, 2)) == -1);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("-6/3")) == "-2");
    CHECK(to_decimal(Rational(5, 2)) == "2.5");
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("+2") == 2);
    CHECK(error_of([] { parse_rational("1/0"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_rational("abc"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_rational(""); }) == Errc::ParseError);
    Rational root;
    CHECK(exact_sqrt(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2), root));
    CHECK(to_string(ExtendedRational::plus_infinity()) == "+inf");
}

TEST_CASE("solve_linear examples")
{
    CHECK(solve_linear(IntMatrix{{-2}}, {Rational(-2)}) == RatVector{1});
    const IntMatrix a2{{-2, 1}, {1, -2}};
    CHECK(solve_linear(a2, {Rational(-3), Rational(-3)}) == RatVector{3, 3});
    CHECK(solve_linear(a2, {Rational(-1), Rational(0)}) == RatVector{Rational(2, 3), Rational(1, 3)});
    CHECK(error_of([] { solve_linear(IntMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}); }) ==
          Errc::SingularMatrix);
    CHECK(error_of([&] { solve_linear(a2, {Rational(1)}); }) == Errc::RankMismatch);
}

TEST_CASE("solve_linear round trip against direct multiplication")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
        const IntMatrix m = random_matrix(rng, n, 4, false);
        if (laplace_det(m) == 0)
            continue;
        RatVector x(n);
        for (auto& v : x)
        {
            v = Rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
            v.canonicalize();
        }
        CHECK(solve_linear(m, multiply(m, x)) == x);
    }
}

TEST_CASE("determinant examples and cofactor oracle")
{
    CHECK(determinant(IntMatrix{{-2}}) == -2);
    CHECK(determinant(IntMatrix{{-2, 1}, {1, -2}}) == 3);
    CHECK(determinant(IntMatrix{{1, 0}, {0, -1}}) == -1);
    CHECK(determinant(IntMatrix{}) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);

    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix m = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 5, false);
        CHECK(determinant(m) == laplace_det(m));
    }
}

TEST_CASE("negative definiteness")
{
    CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{0, 1}, {1, -2}}));
    CHECK(is_negative_definite(IntMatrix{{-1}}));
    CHECK(is_negative_definite(IntMatrix{}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 2}, {2, -1}}));

    Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
        IntMatrix m = random_matrix(rng, n, 2, true);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) -= uniform(rng, 0, 4);
        const bool nd = is_negative_definite(m);
        CHECK(nd == sylvester_oracle(m));
        CHECK(nd == (signature(m) == Signature{0, n, 0}));
    }
}

TEST_CASE("signature")
{
    CHECK(signature(IntMatrix{{1, 0}, {0, -1}}) == Signature{1, 1, 0});
    CHECK(signature(IntMatrix{{0, 1}, {1, -2}}) == Signature{1, 1, 0});
    CHECK(signature(IntMatrix{{-2, 1}, {1, -2}}) == Signature{0, 2, 0});
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
    CHECK(signature(IntMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
    CHECK(signature(IntMatrix{{1, 1}, {1, 1}}) == Signature{1, 0, 1});
    CHECK(signature(IntMatrix{{1, 0}, {0, 1}}) == Signature{2, 0, 0});
    CHECK(error_of([] { signature(IntMatrix{{1, 2}, {0, 1}}); }) == Errc::ValidationError);
}

TEST_CASE("congruence pivots multiply to the determinant and are invariant under unimodular change")
{
    Rng rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const IntMatrix m = random_matrix(rng, n, 3, true);
        Rational product = 1;
        for (const auto& p : congruence_pivots(m))
            product *= p;
        CHECK(product == Rational(determinant(m)));

        // U = I + c e_i e_j^T is unimodular; U^T M U has the same inertia.
        IntMatrix u = IntMatrix::identity(n);
        if (n > 1)
            u(0, n - 1) = uniform(rng, -3, 3);
        IntMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        c(i, j) += u(a, i) * m(a, b) * u(b, j);
        CHECK(signature(c) == signature(m));
    }
}

TEST_CASE("characteristic vectors")
{
    CHECK(is_characteristic({-3, 1}, IntMatrix{{1, 0}, {0, -1}}));
    CHECK(is_characteristic({2}, IntMatrix{{2}}));
    CHECK_FALSE(is_characteristic({0}, IntMatrix{{1}}));
    CHECK(is_characteristic({-4, -2}, IntMatrix{{0, 1}, {1, -2}}));
    CHECK_FALSE(is_characteristic({-4, -1}, IntMatrix{{0, 1}, {1, -2}}));
}
