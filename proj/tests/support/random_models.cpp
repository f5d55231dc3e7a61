#include "support/random_models.hpp"

#include "effbound/error.hpp"

#include <algorithm>

namespace testing_support {

using namespace effbound;

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

struct Configuration {
    std::vector<std::vector<int>> adj;
    std::vector<int> self;     // m_i, so C_i^2 = -m_i
    std::vector<int> k;        // canonical coordinates on the C_i
};

IntMatrix block(const Configuration& c)
{
    const std::size_t n = c.self.size();
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = i == j ? -c.self[i] : c.adj[i][j];
    return g;
}

std::optional<Configuration> try_configuration(Rng& rng, std::size_t n, bool connected)
{
    Configuration c;
    c.adj.assign(n, std::vector<int>(n, 0));
    auto link = [&](std::size_t i, std::size_t j, int w) { c.adj[i][j] = c.adj[j][i] = w; };
    if (connected)
        for (std::size_t j = 1; j < n; ++j)
            link(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(j) - 1)), j, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.adj[i][j])
                continue;
            const int roll = uniform(rng, 0, 99);
            link(i, j, roll < (connected ? 80 : 55) ? 0 : roll < 96 ? 1 : 2);
        }

    static const std::vector<int> k_choices = {-2, -1, -1, 0, 0, 0, 1};
    for (std::size_t i = 0; i < n; ++i)
        c.k.push_back(pick(rng, k_choices));

    // p_a(C_i) = 1 + (K.C_i - m_i)/2 with K.C_i = -m_i k_i + s_i.
    for (std::size_t i = 0; i < n; ++i) {
        int s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                s += c.adj[i][j] * c.k[j];
        std::vector<int> ok;
        for (int m = 1; m <= 6; ++m) {
            const int twice_genus_minus_two = -m * (c.k[i] + 1) + s;
            if (twice_genus_minus_two % 2 == 0 && twice_genus_minus_two >= -2)
                ok.push_back(m);
        }
        if (ok.empty())
            return std::nullopt;
        c.self.push_back(pick(rng, ok));
    }

    for (int attempt = 0; attempt < 30; ++attempt) {
        if (is_negative_definite(block(c)))
            return c;
        std::vector<std::size_t> growable;
        for (std::size_t i = 0; i < n; ++i)
            if (c.k[i] <= -1)
                growable.push_back(i);
        if (growable.empty())
            return std::nullopt;
        c.self[pick(rng, growable)] += 2;
    }
    return std::nullopt;
}

std::optional<RandomModel> try_model(Rng& rng, const RandomModelOptions& opt)
{
    const auto n = static_cast<std::size_t>(uniform(rng, static_cast<int>(opt.min_config),
                                                    static_cast<int>(opt.max_config)));
    auto config = try_configuration(rng, n, opt.connected);
    if (!config)
        return std::nullopt;

    const int a = uniform(rng, 1, 3);
    static const std::vector<std::vector<int>> k0_choices = {{-3, -1, 1}, {-2, -1, 0, 1}, {-1, 1}};
    const int k0 = pick(rng, k0_choices[static_cast<std::size_t>(a - 1)]);

    const std::size_t r = n + 1;
    SurfaceModel::Spec spec;
    spec.name = "random";
    spec.gram = IntMatrix(r, r);
    spec.gram(0, 0) = a;
    const IntMatrix b = block(*config);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            spec.gram(i + 1, j + 1) = b(i, j);
    spec.canonical.push_back(k0);
    for (int k : config->k)
        spec.canonical.push_back(k);
    spec.basis_names.push_back("h");
    for (std::size_t i = 0; i < n; ++i)
        spec.basis_names.push_back("c" + std::to_string(i + 1));

    auto unit = [&](std::size_t i) {
        IntVector v(r, Integer(0));
        v[i] = 1;
        return v;
    };
    spec.curves.push_back({"h", unit(0), true});
    for (std::size_t i = 0; i < n; ++i)
        spec.curves.push_back({"c" + std::to_string(i + 1), unit(i + 1), true});

    const SurfaceModel probe = SurfaceModel::unchecked(spec);
    const auto extras = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(opt.max_extra_curves)));
    for (std::size_t attempt = 0; attempt < 40 && spec.curves.size() < r + extras; ++attempt) {
        IntVector x(r);
        x[0] = uniform(rng, 1, 2);
        for (std::size_t i = 1; i < r; ++i)
            x[i] = uniform(rng, -2, 2);
        const DivisorClass d(x);
        bool ok = arithmetic_genus(probe, d) >= 0;
        for (const auto& c : spec.curves)
            ok = ok && c.coords != x && probe.intersect(d, DivisorClass(c.coords)) >= 0;
        if (ok)
            spec.curves.push_back({"x" + std::to_string(spec.curves.size() - r + 1), x, true});
    }

    // H = m h - sum x_i C_i with M x = 1, so H.C_i = 1.
    IntMatrix m_block(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m_block(i, j) = -b(i, j);
    const RatVector x = solve_linear(m_block, RatVector(n, Rational(1)));
    for (int mult = 1; mult <= 200; ++mult) {
        RatVector h(r);
        h[0] = mult;
        for (std::size_t i = 0; i < n; ++i)
            h[i + 1] = -x[i];
        const DivisorClass hd(h);
        bool ok = probe.self_intersection(hd) > 0;
        for (const auto& c : spec.curves)
            ok = ok && probe.intersect(hd, DivisorClass(c.coords)) > 0;
        if (ok) {
            spec.ample_reference = h;
            break;
        }
    }
    if (!spec.ample_reference)
        return std::nullopt;

    RandomModel out{SurfaceModel::create(std::move(spec)), {}};
    for (std::size_t i = 0; i < n; ++i)
        out.configuration.push_back(i + 1);
    return out;
}

} // namespace

RandomModel random_model(Rng& rng, const RandomModelOptions& options)
{
    for (;;)
        if (auto m = try_model(rng, options))
            return std::move(*m);
}

std::pair<DivisorClass, std::vector<std::size_t>> random_polarization(Rng& rng, const RandomModel& m)
{
    std::vector<std::size_t> subset;
    for (std::size_t c : m.configuration)
        if (uniform(rng, 0, 1) == 1 && subset.size() < 4)
            subset.push_back(c);
    const DivisorClass h = *m.model.ample_reference();
    return {construct_polarization(m.model, subset, h), subset};
}

DivisorClass random_effective(Rng& rng, const SurfaceModel& model, int max_coeff)
{
    for (;;) {
        DivisorClass d = DivisorClass::zero(model.rank());
        for (std::size_t i = 0; i < model.curve_count(); ++i)
            d += Rational(uniform(rng, 0, max_coeff)) * model.curve_class(i);
        if (!d.is_zero())
            return d;
    }
}

DivisorClass random_class(Rng& rng, std::size_t rank, int bound)
{
    RatVector v(rank);
    for (auto& x : v)
        x = uniform(rng, -bound, bound);
    return DivisorClass(std::move(v));
}

DivisorClass integral_multiple(const DivisorClass& d)
{
    Integer den = 1;
    for (const auto& x : d.coords())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    return Rational(den) * d;
}

} // namespace testing_support
