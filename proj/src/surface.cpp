#include "effbound/surface.hpp"

#include "effbound/error.hpp"

#include <algorithm>
#include <numeric>

namespace effbound {

bool DivisorClass::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

bool DivisorClass::is_integral() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return is_integer(x); });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o)
{
    if (o.rank() != rank())
        throw Error(Errc::RankMismatch, "divisor addition");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o)
{
    if (o.rank() != rank())
        throw Error(Errc::RankMismatch, "divisor subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s)
{
    for (auto& x : coords_)
        x *= s;
    return *this;
}

SurfaceModel::SurfaceModel(Spec spec) : spec_(std::move(spec))
{
    for (const auto& c : spec_.curves)
        if (c.effective)
            curves_.push_back(c);
}

SurfaceModel SurfaceModel::unchecked(Spec spec)
{
    return SurfaceModel(std::move(spec));
}

SurfaceModel SurfaceModel::create(Spec spec)
{
    auto fail = [](const std::string& msg) -> SurfaceModel { throw Error(Errc::ValidationError, msg); };

    const std::size_t r = spec.gram.rows();
    if (r == 0 || !spec.gram.square())
        return fail("gram: must be a nonempty square matrix");
    if (!spec.gram.symmetric())
        return fail("gram: not symmetric");
    if (spec.canonical.size() != r)
        return fail("canonical: length " + std::to_string(spec.canonical.size()) + " != rank " + std::to_string(r));
    if (!spec.basis_names.empty() && spec.basis_names.size() != r)
        return fail("basis: expected " + std::to_string(r) + " names");

    const Signature sig = signature(spec.gram);
    if (sig != Signature{1, r - 1, 0})
        return fail("gram: signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + "," +
                    std::to_string(sig.zero) + ") violates Hodge index shape (1," + std::to_string(r - 1) + ",0)");
    if (!is_characteristic(spec.canonical, spec.gram))
        return fail("canonical: not characteristic (K.x + x.x odd for some basis vector)");

    for (std::size_t i = 0; i < spec.curves.size(); ++i)
        if (spec.curves[i].coords.size() != r)
            return fail("curves[" + std::to_string(i) + "].coords: wrong length");

    SurfaceModel model(std::move(spec));
    const auto& cs = model.curves_;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const DivisorClass ci(cs[i].coords);
        if (ci.is_zero())
            return fail("curve '" + cs[i].name + "': zero class");
        if (arithmetic_genus(model, ci) < 0)
            return fail("curve '" + cs[i].name + "': negative arithmetic genus");
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (model.intersect(ci, DivisorClass(cs[j].coords)) < 0)
                return fail("curves '" + cs[i].name + "' and '" + cs[j].name + "' meet negatively");
    }
    if (model.spec_.ample_reference) {
        if (model.spec_.ample_reference->size() != r)
            return fail("ample_reference: wrong length");
        if (!positivity(model, *model.ample_reference()).ample_model)
            return fail("ample_reference: not ample relative to the curve list");
    }
    return model;
}

std::optional<DivisorClass> SurfaceModel::ample_reference() const
{
    if (!spec_.ample_reference)
        return std::nullopt;
    return DivisorClass(*spec_.ample_reference);
}

IntMatrix SurfaceModel::curve_gram(std::span<const std::size_t> indices) const
{
    IntMatrix g(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a; b < indices.size(); ++b) {
            const Rational v = intersect(curve_class(indices[a]), curve_class(indices[b]));
            g(a, b) = v.get_num();
            g(b, a) = v.get_num();
        }
    return g;
}

DivisorClass SurfaceModel::curve_combination(std::span<const std::size_t> indices,
                                             std::span<const Rational> coeffs) const
{
    DivisorClass d = DivisorClass::zero(rank());
    for (std::size_t a = 0; a < indices.size(); ++a)
        d += coeffs[a] * curve_class(indices[a]);
    return d;
}

Rational SurfaceModel::intersect(const DivisorClass& a, const DivisorClass& b) const
{
    const std::size_t r = rank();
    if (a.rank() != r || b.rank() != r)
        throw Error(Errc::RankMismatch, "intersect: divisor rank does not match surface rank " + std::to_string(r));
    Rational sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (b[j] != 0)
                row += Rational(spec_.gram(i, j)) * b[j];
        sum += a[i] * row;
    }
    return sum;
}

Rational SurfaceModel::intersect_curve(const DivisorClass& a, std::size_t curve) const
{
    return intersect(a, curve_class(curve));
}

Integer arithmetic_genus(const SurfaceModel& model, const DivisorClass& d)
{
    if (!d.is_integral())
        throw Error(Errc::NonIntegralGenus, "arithmetic genus of a non-integral class");
    const Rational t = model.self_intersection(d) + model.intersect(model.canonical(), d);
    const Integer num = t.get_num();
    if (mpz_odd_p(num.get_mpz_t()))
        throw Error(Errc::NonIntegralGenus, "D^2 + K.D is odd; canonical class is not characteristic");
    return 1 + num / 2;
}

Positivity positivity(const SurfaceModel& model, const DivisorClass& a)
{
    Positivity p;
    p.nef_model = true;
    bool strictly_positive = true;
    for (std::size_t i = 0; i < model.curve_count(); ++i) {
        const int s = sgn(model.intersect_curve(a, i));
        if (s < 0)
            p.nef_model = false;
        if (s <= 0)
            strictly_positive = false;
    }
    p.big = model.self_intersection(a) > 0;
    p.ample_model = p.nef_model && p.big && strictly_positive;
    if (auto h = model.ample_reference())
        p.pseudo_effective_model = model.intersect(a, *h) >= 0;
    return p;
}

bool pseudo_effective_model(const SurfaceModel& model, const DivisorClass& a)
{
    auto h = model.ample_reference();
    if (!h)
        throw Error(Errc::NoAmpleReference, "model '" + model.name() + "' has no ample reference class");
    return model.intersect(a, *h) >= 0;
}

std::vector<std::size_t> exceptional_curve(const SurfaceModel& model, const DivisorClass& a)
{
    const Positivity p = positivity(model, a);
    if (!p.nef_model || !p.big)
        throw Error(Errc::NotNefBig, "exceptional curve requires a nef and big class");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < model.curve_count(); ++i)
        if (model.intersect_curve(a, i) == 0)
            out.push_back(i);
    if (!is_negative_definite(model.curve_gram(out)))
        throw Error(Errc::ModelInconsistent, "curves orthogonal to a big class are not negative definite");
    return out;
}

std::vector<std::vector<std::size_t>> connected_components(const SurfaceModel& model,
                                                           std::span<const std::size_t> curves)
{
    const std::size_t n = curves.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (model.intersect(model.curve_class(curves[a]), model.curve_class(curves[b])) > 0)
                parent[find(a)] = find(b);

    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> root_to_part(n, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return curves[x] < curves[y]; });
    for (std::size_t pos : order) {
        const std::size_t root = find(pos);
        if (root_to_part[root] == n) {
            root_to_part[root] = parts.size();
            parts.emplace_back();
        }
        parts[root_to_part[root]].push_back(curves[pos]);
    }
    return parts;
}

DivisorClass construct_polarization(const SurfaceModel& model, std::span<const std::size_t> curves,
                                    const DivisorClass& ample)
{
    if (!positivity(model, ample).ample_model)
        throw Error(Errc::NotAmple, "construct_polarization: reference class is not ample relative to the model");
    const IntMatrix g = model.curve_gram(curves);
    if (!is_negative_definite(g))
        throw Error(Errc::NotNegativeDefinite, "construct_polarization: curve set is not negative definite");

    const Integer det = abs(determinant(g));
    RatVector rhs(curves.size());
    for (std::size_t a = 0; a < curves.size(); ++a)
        rhs[a] = -Rational(det) * model.intersect_curve(ample, curves[a]);
    const RatVector x = solve_linear(g, rhs);
    for (const auto& xi : x)
        if (!is_integer(xi) || xi < 0)
            throw Error(Errc::IntegralityFailure, "construct_polarization: coefficient " + to_string(xi));

    return Rational(det) * ample + model.curve_combination(curves, x);
}

std::optional<Rational> proportionality_factor(const DivisorClass& a, const DivisorClass& x)
{
    if (a.rank() != x.rank())
        throw Error(Errc::RankMismatch, "proportionality_factor");
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (a[i] == 0) {
            if (x[i] != 0)
                return std::nullopt;
            continue;
        }
        const Rational l = x[i] / a[i];
        if (lambda && *lambda != l)
            return std::nullopt;
        lambda = l;
    }
    if (!lambda)
        return Rational(0); // a == 0 and x == 0
    return lambda;
}

} // namespace effbound
