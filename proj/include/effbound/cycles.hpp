#pragma once

#include "effbound/surface.hpp"

namespace effbound {

/// Minimal effective Z on a connected negative definite configuration with
/// Z.C_i <= 0 for every component curve.
struct FundamentalCycle {
    std::vector<std::size_t> component; ///< curve indices, ascending
    IntVector coefficients;             ///< multiplicity of each component curve in Z
    Integer multiplicity;               ///< m = -Z^2
    Integer genus;                      ///< p_a(Z)
    std::size_t laufer_steps = 0;       ///< increments performed after Z = sum C_i

    DivisorClass cycle(const SurfaceModel& model) const;

    bool operator==(const FundamentalCycle& o) const
    {
        return component == o.component && coefficients == o.coefficients && multiplicity == o.multiplicity &&
               genus == o.genus;
    }
};

/// Laufer's sequence from the reduced sum, always bumping the lowest index
/// with Z.C_i > 0.
FundamentalCycle fundamental_cycle(const SurfaceModel& model, std::span<const std::size_t> component);

/// Brute force over the box 1 <= n_i <= box: coordinatewise minimum of all
/// vectors with Z.C_i <= 0. Throws Error(BoxExhausted) when the box holds no
/// solution.
FundamentalCycle cycle_bruteforce_oracle(const SurfaceModel& model, std::span<const std::size_t> component,
                                         int box = 12);

/// Every connected component has a fundamental cycle of genus 0. The empty
/// configuration is rational.
bool is_rational_configuration(const SurfaceModel& model, std::span<const std::size_t> curves);

} // namespace effbound
