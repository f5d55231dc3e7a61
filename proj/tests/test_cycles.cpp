#include "effbound/cycles.hpp"
#include "effbound/io.hpp"

#include "support/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

#include <doctest.h>

#include <numeric>

using namespace effbound;
using namespace testing_support;

namespace {

std::vector<std::size_t> all_but_first(const SurfaceModel& m)
{
    std::vector<std::size_t> c(m.curve_count() - 1);
    std::iota(c.begin(), c.end(), std::size_t{1});
    return c;
}

SurfaceModel elliptic_minus_two()
{
    SurfaceModel::Spec s;
    s.name = "elliptic_minus_two";
    s.gram = IntMatrix{{1, 0}, {0, -2}};
    s.canonical = {-3, -1};
    s.curves = {{"h", {1, 0}, true}, {"c", {0, 1}, true}};
    return SurfaceModel::create(s);
}

} // namespace

TEST_CASE("fundamental cycle examples")
{
    const auto a2 = load_fixture("a2_resolution");
    const auto z = fundamental_cycle(a2, all_but_first(a2));
    CHECK(z.coefficients == IntVector{1, 1});
    CHECK(z.multiplicity == 2);
    CHECK(z.genus == 0);
    CHECK(z.laufer_steps == 0);

    const auto bl = load_fixture("blowup_p2");
    const auto e = fundamental_cycle(bl, std::vector<std::size_t>{0});
    CHECK(e.coefficients == IntVector{1});
    CHECK(e.multiplicity == 1);
    CHECK(e.genus == 0);

    const auto e8 = load_fixture("ade_e8");
    const auto c = all_but_first(e8);
    const auto z8 = fundamental_cycle(e8, c);
    CHECK(z8 == cycle_bruteforce_oracle(e8, c, 6));
    CHECK(z8.multiplicity == 2);
    CHECK(z8.genus == 0);
}

TEST_CASE("fundamental cycle errors")
{
    const auto bl = load_fixture("blowup_p2");
    CHECK(error_of([&] { fundamental_cycle(bl, std::vector<std::size_t>{0, 1}); }) == Errc::NotNegativeDefinite);
    CHECK(error_of([&] { fundamental_cycle(bl, std::vector<std::size_t>{}); }) == Errc::NotConnected);

    SurfaceModel::Spec s;
    s.name = "two_nodes";
    s.gram = IntMatrix{{2, 0, 0}, {0, -2, 0}, {0, 0, -2}};
    s.canonical = {0, 0, 0};
    s.curves = {{"a", {0, 1, 0}, true}, {"b", {0, 0, 1}, true}};
    const auto two = SurfaceModel::create(s);
    CHECK(error_of([&] { fundamental_cycle(two, std::vector<std::size_t>{0, 1}); }) == Errc::NotConnected);

    const auto a2 = load_fixture("a2_resolution");
    CHECK(error_of([&] { cycle_bruteforce_oracle(load_fixture("ade_e8"), std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}, 3); }) ==
          Errc::BoxExhausted);
    CHECK(cycle_bruteforce_oracle(a2, all_but_first(a2)).coefficients == IntVector{1, 1});
}

TEST_CASE("rationality")
{
    const auto a2 = load_fixture("a2_resolution");
    CHECK(is_rational_configuration(a2, all_but_first(a2)));
    CHECK(is_rational_configuration(a2, std::vector<std::size_t>{}));
    const auto ell = elliptic_minus_two();
    CHECK_FALSE(is_rational_configuration(ell, std::vector<std::size_t>{1}));
    CHECK(fundamental_cycle(ell, std::vector<std::size_t>{1}).genus == 1);
    const auto me = load_fixture("minimally_elliptic");
    CHECK_FALSE(is_rational_configuration(me, std::vector<std::size_t>{1}));
    CHECK(error_of([&] { is_rational_configuration(a2, std::vector<std::size_t>{0}); }) ==
          Errc::NotNegativeDefinite);
}

TEST_CASE("Laufer sequence equals the brute-force minimum on every ADE lattice")
{
    for (const auto& name : ade_fixture_names()) {
        CAPTURE(name);
        const auto m = load_fixture(name);
        const auto c = all_but_first(m);
        const auto z = fundamental_cycle(m, c);
        CHECK(z == cycle_bruteforce_oracle(m, c, 6));
        CHECK(z.genus == 0);
        CHECK(z.multiplicity == 2);
        Integer total = 0;
        for (const auto& x : z.coefficients)
            total += x;
        CHECK(Integer(static_cast<long>(z.laufer_steps)) <= total);
    }
}

TEST_CASE("random connected configurations")
{
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rm = random_model(rng, {1, 6, 0, true});
        const auto z = fundamental_cycle(rm.model, rm.configuration);
        CHECK(z.genus >= 0);
        CHECK(z.multiplicity > 0);
        const DivisorClass cycle = z.cycle(rm.model);
        for (std::size_t c : rm.configuration)
            CHECK(rm.model.intersect_curve(cycle, c) <= 0);
        for (const auto& x : z.coefficients)
            CHECK(x >= 1);

        // Z is a verified solution, so a box reaching max Z contains the minimum.
        const Integer top = *std::max_element(z.coefficients.begin(), z.coefficients.end());
        double work = 1;
        for (std::size_t i = 0; i < rm.configuration.size(); ++i)
            work *= top.get_d();
        if (work <= 2e6)
            CHECK(z == cycle_bruteforce_oracle(rm.model, rm.configuration, static_cast<int>(top.get_si())));
    }
}

TEST_CASE("rational configurations have no sub-divisor of positive genus")
{
    Rng rng(42);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        const auto rm = random_model(rng, {1, 4, 0, true});
        if (!is_rational_configuration(rm.model, rm.configuration))
            continue;
        ++checked;
        const auto z = fundamental_cycle(rm.model, rm.configuration);
        const std::size_t n = z.coefficients.size();
        IntVector v(n, Integer(0));
        for (;;) {
            std::size_t pos = 0;
            while (pos < n && v[pos] == z.coefficients[pos]) {
                v[pos] = 0;
                ++pos;
            }
            if (pos == n)
                break;
            v[pos] += 1;
            const DivisorClass d = rm.model.curve_combination(z.component, to_rational(v));
            CHECK(arithmetic_genus(rm.model, d) <= 0);
        }
    }
    CHECK(checked > 0);
}
