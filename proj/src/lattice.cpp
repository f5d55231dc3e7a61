#include "effbound/lattice.hpp"

#include "effbound/error.hpp"

#include <utility>

namespace effbound {

namespace {

void require_square(const IntMatrix& m, const char* op)
{
    if (!m.square())
        throw Error(Errc::RankMismatch, std::string(op) + ": matrix is not square");
}

} // namespace

Integer determinant(const IntMatrix& m)
{
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatVector solve_linear(const IntMatrix& m, const RatVector& b)
{
    require_square(m, "solve_linear");
    const std::size_t n = m.rows();
    if (b.size() != n)
        throw Error(Errc::RankMismatch, "solve_linear: right-hand side has wrong length");
    if (n == 0)
        return {};

    // Clear denominators so the whole augmented system stays integral.
    Integer scale = 1;
    for (const auto& x : b)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());

    IntMatrix a(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(i, j);
        Rational scaled = b[i] * scale;
        a(i, n) = scaled.get_num();
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                throw Error(Errc::SingularMatrix, "solve_linear: determinant is zero");
            for (std::size_t j = 0; j <= n; ++j)
                std::swap(a(k, j), a(p, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }

    RatVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational sum = Rational(a(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j)
            sum -= Rational(a(ii, j)) * x[j];
        x[ii] = sum / Rational(a(ii, ii));
    }
    for (auto& xi : x)
        xi /= Rational(scale);
    return x;
}

bool is_negative_definite(const IntMatrix& m)
{
    require_square(m, "is_negative_definite");
    const std::size_t n = m.rows();

    // Bareiss without pivoting: the k-th pivot is the k-th leading minor.
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = -m(i, j);

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return true;
}

RatVector congruence_pivots(const IntMatrix& m)
{
    require_square(m, "congruence_pivots");
    if (!m.symmetric())
        throw Error(Errc::ValidationError, "congruence_pivots: matrix is not symmetric");
    const std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    RatVector pivots;
    pivots.reserve(n);

    auto swap_index = [&](std::size_t p, std::size_t q) {
        if (p == q)
            return;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i)
            std::swap(a(i, p), a(i, q));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n && piv == n; ++i)
            if (a(i, i) != 0)
                piv = i;

        if (piv == n) {
            // All remaining diagonal entries vanish. Shear e_i += e_j on a
            // nonzero off-diagonal pair to make a(i,i) = 2 a(i,j) != 0.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                for (std::size_t i = k; i < n; ++i)
                    pivots.emplace_back(0);
                return pivots;
            }
            for (std::size_t j = 0; j < n; ++j)
                a(pi, j) += a(pj, j);
            for (std::size_t i = 0; i < n; ++i)
                a(i, pi) += a(i, pj);
            piv = pi;
        }

        swap_index(k, piv);
        const Rational d = a(k, k);
        pivots.push_back(d);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            const Rational f = a(i, k) / d;
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
            for (std::size_t j = k; j < n; ++j)
                a(j, i) = a(i, j);
        }
    }
    return pivots;
}

Signature signature(const IntMatrix& m)
{
    Signature s;
    for (const auto& p : congruence_pivots(m)) {
        const int sg = sgn(p);
        if (sg > 0)
            ++s.positive;
        else if (sg < 0)
            ++s.negative;
        else
            ++s.zero;
    }
    return s;
}

bool is_characteristic(const IntVector& k, const IntMatrix& m)
{
    require_square(m, "is_characteristic");
    if (k.size() != m.rows())
        throw Error(Errc::RankMismatch, "is_characteristic: canonical vector has wrong length");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer ke = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            ke += k[j] * m(j, i);
        Integer t = ke + m(i, i);
        if (mpz_odd_p(t.get_mpz_t()))
            return false;
    }
    return true;
}

} // namespace effbound
