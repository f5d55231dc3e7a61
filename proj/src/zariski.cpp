#include "effbound/zariski.hpp"

#include "effbound/error.hpp"

#include <algorithm>

namespace effbound {

namespace {

void require_pseudo_effective(const SurfaceModel& model, const DivisorClass& d)
{
    if (d.rank() != model.rank())
        throw Error(Errc::RankMismatch, "zariski: divisor rank");
    if (auto h = model.ample_reference(); h && model.intersect(d, *h) < 0)
        throw Error(Errc::NotPseudoEffectiveOrIncompleteModel, "D.H < 0 for the ample reference");
}

// N on `support` with (D - N).C_j = 0 for every j in support.
RatVector solve_negative_part(const SurfaceModel& model, const DivisorClass& d,
                              const std::vector<std::size_t>& support)
{
    RatVector rhs(support.size());
    for (std::size_t a = 0; a < support.size(); ++a)
        rhs[a] = model.intersect_curve(d, support[a]);
    return solve_linear(model.curve_gram(support), rhs);
}

ZariskiDecomposition assemble(const SurfaceModel& model, const DivisorClass& d,
                              const std::vector<std::size_t>& support, const RatVector& x)
{
    ZariskiDecomposition z;
    for (std::size_t a = 0; a < support.size(); ++a)
        if (x[a] != 0) {
            z.support.push_back(support[a]);
            z.coefficients.push_back(x[a]);
        }
    z.negative = model.curve_combination(z.support, z.coefficients);
    z.positive = d - z.negative;
    return z;
}

} // namespace

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d)
{
    require_pseudo_effective(model, d);

    std::vector<std::size_t> support;
    RatVector x;
    DivisorClass positive = d;
    for (;;) {
        bool grew = false;
        for (std::size_t i = 0; i < model.curve_count(); ++i) {
            if (std::binary_search(support.begin(), support.end(), i))
                continue;
            if (model.intersect_curve(positive, i) < 0) {
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew)
            break;
        std::sort(support.begin(), support.end());
        if (!is_negative_definite(model.curve_gram(support)))
            throw Error(Errc::NotPseudoEffectiveOrIncompleteModel,
                        "support of the negative part is not negative definite");
        x = solve_negative_part(model, d, support);
        for (const auto& xi : x)
            if (xi < 0)
                throw Error(Errc::NotPseudoEffectiveOrIncompleteModel,
                            "negative part acquired a negative coefficient " + to_string(xi));
        positive = d - model.curve_combination(support, x);
    }
    return assemble(model, d, support, x);
}

ZariskiDecomposition zariski_oracle(const SurfaceModel& model, const DivisorClass& d)
{
    require_pseudo_effective(model, d);
    const std::size_t m = model.curve_count();
    if (m > 20)
        throw Error(Errc::BoxExhausted, "zariski_oracle: too many curves for subset enumeration");

    std::vector<ZariskiDecomposition> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i))
                subset.push_back(i);
        if (!is_negative_definite(model.curve_gram(subset)))
            continue;
        const RatVector x = solve_negative_part(model, d, subset);
        // Strict positivity pins the support to exactly this subset.
        if (!std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; }))
            continue;
        ZariskiDecomposition z = assemble(model, d, subset, x);
        bool nef = true;
        for (std::size_t i = 0; i < m && nef; ++i)
            nef = model.intersect_curve(z.positive, i) >= 0;
        if (nef)
            found.push_back(std::move(z));
    }
    if (found.empty())
        throw Error(Errc::NotPseudoEffectiveOrIncompleteModel, "no subset yields a Zariski decomposition");
    if (found.size() > 1)
        throw Error(Errc::AmbiguousDecomposition,
                    std::to_string(found.size()) + " distinct decompositions satisfy all conditions");
    return found.front();
}

std::string check_zariski_conditions(const SurfaceModel& model, const DivisorClass& d,
                                     const ZariskiDecomposition& z)
{
    if (z.positive + z.negative != d)
        return "P + N != D";
    if (model.curve_combination(z.support, z.coefficients) != z.negative)
        return "N does not match its support coefficients";
    if (!is_negative_definite(model.curve_gram(z.support)))
        return "support of N is not negative definite";
    for (const auto& c : z.coefficients)
        if (c < 0)
            return "N has a negative coefficient";
    for (std::size_t i = 0; i < model.curve_count(); ++i)
        if (model.intersect_curve(z.positive, i) < 0)
            return "P.C < 0 for curve '" + model.curves()[i].name + "'";
    for (std::size_t c : z.support)
        if (model.intersect_curve(z.positive, c) != 0)
            return "P.C != 0 for support curve '" + model.curves()[c].name + "'";
    return {};
}

bool kappa_is_two(const SurfaceModel& model, const DivisorClass& d)
{
    const auto z = zariski_decompose(model, d);
    return model.self_intersection(z.positive) > 0;
}

H1Correction h1_correction(const SurfaceModel& model, const DivisorClass& d)
{
    const auto z = zariski_decompose(model, d);
    H1Correction h;
    h.f_squared = model.self_intersection(z.negative);
    h.f_canonical = model.intersect(z.negative, model.canonical());
    h.c2 = -h.f_squared / 2;
    h.c1 = h.f_canonical / 2;
    return h;
}

} // namespace effbound
