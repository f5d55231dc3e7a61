#include "effbound/cycles.hpp"

#include "effbound/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace effbound {

namespace {

std::vector<std::size_t> checked_component(const SurfaceModel& model, std::span<const std::size_t> component)
{
    std::vector<std::size_t> c(component.begin(), component.end());
    std::sort(c.begin(), c.end());
    if (c.empty())
        throw Error(Errc::NotConnected, "empty configuration has no fundamental cycle");
    if (!is_negative_definite(model.curve_gram(c)))
        throw Error(Errc::NotNegativeDefinite, "configuration is not negative definite");
    if (connected_components(model, c).size() != 1)
        throw Error(Errc::NotConnected, "configuration is not connected");
    return c;
}

FundamentalCycle finish(const SurfaceModel& model, std::vector<std::size_t> component, IntVector coeffs,
                        std::size_t steps)
{
    FundamentalCycle z;
    z.component = std::move(component);
    z.coefficients = std::move(coeffs);
    z.laufer_steps = steps;
    const DivisorClass cyc = z.cycle(model);
    z.multiplicity = Rational(-model.self_intersection(cyc)).get_num();
    z.genus = arithmetic_genus(model, cyc);
    return z;
}

} // namespace

DivisorClass FundamentalCycle::cycle(const SurfaceModel& model) const
{
    return model.curve_combination(component, to_rational(coefficients));
}

FundamentalCycle fundamental_cycle(const SurfaceModel& model, std::span<const std::size_t> component)
{
    std::vector<std::size_t> c = checked_component(model, component);
    const IntMatrix g = model.curve_gram(c);
    const std::size_t n = c.size();

    IntVector z(n, Integer(1));
    // dots[i] = Z.C_i, updated incrementally as Z grows.
    IntVector dots(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dots[i] += g(i, j);

    std::size_t steps = 0;
    for (;;) {
        std::size_t bump = n;
        for (std::size_t i = 0; i < n; ++i)
            if (dots[i] > 0) {
                bump = i;
                break;
            }
        if (bump == n)
            break;
        z[bump] += 1;
        for (std::size_t i = 0; i < n; ++i)
            dots[i] += g(i, bump);
        ++steps;
    }
    return finish(model, std::move(c), std::move(z), steps);
}

FundamentalCycle cycle_bruteforce_oracle(const SurfaceModel& model, std::span<const std::size_t> component, int box)
{
    if (box < 1)
        throw Error(Errc::NonpositiveInput, "cycle oracle box must be >= 1");
    std::vector<std::size_t> c = checked_component(model, component);
    const IntMatrix g = model.curve_gram(c);
    const std::size_t n = c.size();

    std::vector<std::int64_t> gi(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!g(i, j).fits_slong_p())
                throw Error(Errc::BoxExhausted, "intersection numbers too large for the brute-force oracle");
            gi[i * n + j] = g(i, j).get_si();
        }

    std::vector<std::int64_t> v(n, 1);
    std::vector<std::int64_t> dots(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dots[i] += gi[i * n + j];

    std::vector<std::int64_t> best(n, std::numeric_limits<std::int64_t>::max());
    bool any = false;
    for (;;) {
        if (std::all_of(dots.begin(), dots.end(), [](std::int64_t d) { return d <= 0; })) {
            any = true;
            for (std::size_t i = 0; i < n; ++i)
                best[i] = std::min(best[i], v[i]);
        }
        // Odometer step; dots tracks Z.C_i.
        std::size_t pos = 0;
        while (pos < n && v[pos] == box) {
            for (std::size_t i = 0; i < n; ++i)
                dots[i] -= (box - 1) * gi[i * n + pos];
            v[pos] = 1;
            ++pos;
        }
        if (pos == n)
            break;
        ++v[pos];
        for (std::size_t i = 0; i < n; ++i)
            dots[i] += gi[i * n + pos];
    }
    if (!any)
        throw Error(Errc::BoxExhausted, "no cycle with Z.C_i <= 0 inside box " + std::to_string(box));

    // The coordinatewise minimum must itself be a solution, otherwise the
    // minimal element is not unique.
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t d = 0;
        for (std::size_t j = 0; j < n; ++j)
            d += gi[i * n + j] * best[j];
        if (d > 0)
            throw Error(Errc::ModelInconsistent, "minimal cycle is not unique");
    }
    IntVector coeffs;
    for (auto b : best)
        coeffs.emplace_back(static_cast<long>(b));
    return finish(model, std::move(c), std::move(coeffs), 0);
}

bool is_rational_configuration(const SurfaceModel& model, std::span<const std::size_t> curves)
{
    std::vector<std::size_t> c(curves.begin(), curves.end());
    if (!is_negative_definite(model.curve_gram(c)))
        throw Error(Errc::NotNegativeDefinite, "configuration is not negative definite");
    for (const auto& part : connected_components(model, c))
        if (fundamental_cycle(model, part).genus != 0)
            return false;
    return true;
}

} // namespace effbound
