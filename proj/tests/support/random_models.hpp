#pragma once

#include "effbound/surface.hpp"

#include <random>

namespace testing_support {

using Rng = std::mt19937_64;

/// A valid model h + C_1..C_n (+ extra curves): the C_i form a negative
/// definite configuration with nonnegative mutual intersections and
/// p_a >= 0, h is a positive class orthogonal to them.
struct RandomModel {
    effbound::SurfaceModel model;
    std::vector<std::size_t> configuration;  ///< curve indices of C_1..C_n
};

struct RandomModelOptions {
    std::size_t min_config = 1;
    std::size_t max_config = 4;
    std::size_t max_extra_curves = 3;
    bool connected = false;
};

RandomModel random_model(Rng& rng, const RandomModelOptions& options = {});

/// A nef and big class contracting a random (possibly empty) subset of the
/// configuration, returned with that subset.
std::pair<effbound::DivisorClass, std::vector<std::size_t>> random_polarization(Rng& rng, const RandomModel& m);

/// The least positive multiple of d with integral coordinates.
effbound::DivisorClass integral_multiple(const effbound::DivisorClass& d);

/// Nonnegative integral combination of the model's curves, not all zero.
effbound::DivisorClass random_effective(Rng& rng, const effbound::SurfaceModel& model, int max_coeff = 3);

/// Integral class with coordinates in [-bound, bound].
effbound::DivisorClass random_class(Rng& rng, std::size_t rank, int bound);

int uniform(Rng& rng, int lo, int hi);

} // namespace testing_support
