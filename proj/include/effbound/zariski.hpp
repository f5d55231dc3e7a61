#pragma once

#include "effbound/surface.hpp"

#include <functional>

namespace effbound {

/// D = P + N with P nef on the model, N >= 0 supported on a negative
/// definite curve set, and P.C = 0 for each curve C of N.
struct ZariskiDecomposition {
    DivisorClass positive;
    DivisorClass negative;
    std::vector<std::size_t> support;  ///< curve indices with nonzero coefficient, ascending
    RatVector coefficients;            ///< coefficient of each support curve in N

    bool operator==(const ZariskiDecomposition&) const = default;
};

/// Support-growth iteration: add every curve with P.C < 0, re-solve
/// (D - N).C_j = 0 on the enlarged support, repeat until P is nef.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

/// Ground truth by exhaustion over every negative definite curve subset;
/// intended for curve counts up to ~12.
ZariskiDecomposition zariski_oracle(const SurfaceModel& model, const DivisorClass& d);

/// Checks the three defining conditions and D = P + N; returns an empty
/// string on success, otherwise a description of the first violation.
std::string check_zariski_conditions(const SurfaceModel& model, const DivisorClass& d,
                                     const ZariskiDecomposition& z);

/// kappa(D) = 2 iff the positive part is big.
bool kappa_is_two(const SurfaceModel& model, const DivisorClass& d);

/// Lattice-computable pieces of the h^1 formula along multiples nD, with
/// n = a s + b:  h^1(nD) = h^1(asP + bD) + c2 n^2 + c1 n + c0(b).
struct H1Correction {
    Rational c2;          ///< -F^2/2
    Rational c1;          ///< F.K/2
    Rational f_squared;   ///< F^2
    Rational f_canonical; ///< F.K

    Rational c0(const Rational& b) const { return -(b * f_canonical / 2 - b * b * f_squared / 2); }
};

H1Correction h1_correction(const SurfaceModel& model, const DivisorClass& d);

} // namespace effbound
