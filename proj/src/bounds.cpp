#include "effbound/bounds.hpp"

#include "effbound/error.hpp"

#include <algorithm>
#include <functional>

namespace effbound {

namespace {

const Rational kRootTolerance(1, 1024);

void require_big(const SurfaceModel& model, const DivisorClass& a)
{
    if (model.self_intersection(a) <= 0)
        throw Error(Errc::NotBig, "A^2 must be positive");
}

void require_nef_big(const SurfaceModel& model, const DivisorClass& a)
{
    const Positivity p = positivity(model, a);
    if (!p.nef_model || !p.big)
        throw Error(Errc::NotNefBig, "A must be nef and big on the model");
}

// Upper bound for sqrt(v), v >= 0: sqrt(p/q) = sqrt(pq)/q <= (isqrt(pq)+1)/q.
Rational sqrt_upper(const Rational& v)
{
    if (v <= 0)
        return 0;
    Rational exact;
    if (exact_sqrt(v, exact))
        return exact;
    Integer pq = v.get_num() * v.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), pq.get_mpz_t());
    Rational out(r + 1, v.get_den());
    out.canonicalize();
    return out;
}

// Roots of x^2 + b x + c (monic, discriminant >= 0), bracketed by sign
// tests only.
RationalBracket monic_root_bracket(const Rational& b, const Rational& c, bool smaller)
{
    const Rational disc = b * b - 4 * c;
    const Rational vertex = -b / 2;
    Rational s;
    if (exact_sqrt(disc, s)) {
        const Rational root = smaller ? Rational(vertex - s / 2) : Rational(vertex + s / 2);
        return {root, root};
    }
    auto f = [&](const Rational& x) -> Rational { return x * x + b * x + c; };
    // sqrt(disc)/2 <= disc/4 + 1
    const Rational reach = disc / 4 + 1;
    Rational lo = smaller ? vertex - reach : vertex;
    Rational hi = smaller ? vertex : vertex + reach;
    while (hi - lo > kRootTolerance) {
        const Rational mid = (lo + hi) / 2;
        const int s_mid = sgn(f(mid));
        if (s_mid == 0)
            return {mid, mid};
        // Left of the smaller root f > 0; right of the larger root f > 0.
        if (smaller == (s_mid > 0))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Rational q_value(const SurfaceModel& model, const DivisorClass& t, const DivisorClass& d)
{
    return model.intersect(t, d) - model.intersect(model.canonical(), d) - model.self_intersection(d);
}

std::string curve_list(const SurfaceModel& model, std::span<const std::size_t> idx)
{
    std::string s;
    for (std::size_t i : idx) {
        if (!s.empty())
            s += "+";
        s += model.curves()[i].name;
    }
    return s;
}

ObstructionSet finalize(std::vector<std::size_t> exceptional, Rational level, std::vector<Obstruction> found)
{
    std::sort(found.begin(), found.end(),
              [](const Obstruction& x, const Obstruction& y) { return x.coefficients < y.coefficients; });
    ObstructionSet set;
    set.exceptional = std::move(exceptional);
    set.level = std::move(level);
    for (const auto& o : found)
        if (!set.witness_minimum || o.value < set.witness_minimum->value)
            set.witness_minimum = o;
    set.divisors = std::move(found);
    return set;
}

// Visit every integer vector in [lower, upper] (componentwise).
template <typename Visit>
void for_each_point(const IntVector& lower, const IntVector& upper, Visit visit)
{
    const std::size_t n = lower.size();
    IntVector v = lower;
    for (;;) {
        visit(v);
        std::size_t pos = 0;
        while (pos < n && v[pos] == upper[pos]) {
            v[pos] = lower[pos];
            ++pos;
        }
        if (pos == n)
            return;
        v[pos] += 1;
    }
}

} // namespace

Rational adjoint_threshold(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t)
{
    require_big(model, a);
    const DivisorClass kt = model.canonical() - t;
    const Rational a2 = model.self_intersection(a);
    const Rational lin = model.intersect(kt, a) + 2;
    return lin * lin / (4 * a2) - model.self_intersection(kt) / 4;
}

Integer least_adjoint_n(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t)
{
    return least_integer_above(adjoint_threshold(model, a, t));
}

HodgeDefect hodge_defect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t)
{
    const DivisorClass tk = t - model.canonical();
    const Rational at = model.intersect(a, tk);
    HodgeDefect h;
    h.value = at * at - model.self_intersection(a) * model.self_intersection(tk);
    h.lambda = proportionality_factor(a, tk);
    h.proportional = h.lambda.has_value();
    return h;
}

ThresholdCheck main_threshold_holds(const SurfaceModel& model, const Integer& n, int k, const DivisorClass& a,
                                    const DivisorClass& t)
{
    require_nef_big(model, a);
    if (k < 0)
        throw Error(Errc::NonpositiveInput, "k must be nonnegative");
    const Rational bound = adjoint_threshold(model, a, t);
    ThresholdCheck c;
    if (Rational(n) > k + bound) {
        c.holds = true;
        return c;
    }
    if (k == 0 && Rational(n) >= bound && hodge_defect(model, a, t).proportional) {
        c.holds = true;
        c.numerical_equivalence_branch = true;
    }
    return c;
}

AdjointQuadratic adjoint_quadratic(const SurfaceModel& model, const Integer& n, int k, const DivisorClass& a,
                                   const DivisorClass& t)
{
    require_big(model, a);
    const Rational a2 = model.self_intersection(a);
    const DivisorClass l = Rational(n) * a + t - model.canonical();
    const Rational al = model.intersect(a, l);

    AdjointQuadratic f;
    f.linear = -al;
    f.constant = hodge_defect(model, a, t).value / 4 + k * a2;
    f.at_zero = f(0);
    f.at_one = f(1);
    if (al * al - 4 * f.constant >= 0)
        f.smaller_root = monic_root_bracket(f.linear, f.constant, true);
    return f;
}

IntegerBracket critical_n_bracket(const SurfaceModel& model, int k, const DivisorClass& a, const DivisorClass& t)
{
    require_big(model, a);
    const Rational a2 = model.self_intersection(a);
    const DivisorClass tk = t - model.canonical();
    // L^2 - 4k = A^2 n^2 + 2 A.(T-K) n + (T-K)^2 - 4k, normalised to monic.
    const Rational b = 2 * model.intersect(a, tk) / a2;
    const Rational c = (model.self_intersection(tk) - 4 * k) / a2;
    if (b * b - 4 * c < 0)
        throw Error(Errc::ModelInconsistent, "negative discriminant; Hodge index violated");
    const RationalBracket r = monic_root_bracket(b, c, false);
    auto g = [&](const Rational& x) -> Rational { return x * x + b * x + c; };

    IntegerBracket out;
    out.floor = effbound::floor(r.lo);
    // hi - lo < 1, so floor(root) is floor(lo) or floor(lo) + 1.
    if (Rational(out.floor + 1) <= r.hi && g(Rational(out.floor + 1)) <= 0)
        out.floor += 1;
    out.ceil = g(Rational(out.floor)) == 0 ? out.floor : Integer(out.floor + 1);
    return out;
}

Rational refined_da_bound(const SurfaceModel& model, const Rational& x, int k, const DivisorClass& a,
                          const DivisorClass& t)
{
    require_big(model, a);
    if (x <= 0)
        throw Error(Errc::NonpositiveX, "x must be positive");
    const Rational a2 = model.self_intersection(a);
    const Rational f0 = hodge_defect(model, a, t).value / 4 + k * a2;
    const Rational at = model.intersect(a, t - model.canonical());
    return -at / a2 + x / a2 + f0 / (x * a2);
}

SearchBox obstruction_box(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                          const Rational& level, const Rational& margin)
{
    if (margin < 1)
        throw Error(Errc::NonpositiveInput, "box margin must be >= 1");
    SearchBox box;
    box.curves = exceptional_curve(model, a);
    const std::size_t r = box.curves.size();
    if (r == 0) {
        box.empty = true;
        return box;
    }

    // q(n) = n^T Q n + l.n with Q = -(C_iC_j) positive definite and
    // l_i = (T-K).C_i. Completing the square about c = -Q^{-1} l / 2:
    //   (n-c)^T Q (n-c) <= level + l^T Q^{-1} l / 4 =: R,
    // and on that ellipsoid |n_i - c_i| <= sqrt(R (Q^{-1})_ii).
    IntMatrix q = model.curve_gram(box.curves);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            q(i, j) = -q(i, j);
    RatVector l(r);
    const DivisorClass tk = t - model.canonical();
    for (std::size_t i = 0; i < r; ++i)
        l[i] = model.intersect_curve(tk, box.curves[i]);

    const RatVector qinv_l = solve_linear(q, l);
    Rational radius = level;
    for (std::size_t i = 0; i < r; ++i)
        radius += l[i] * qinv_l[i] / 4;
    if (radius < 0) {
        box.empty = true;
        return box;
    }

    box.lower.resize(r);
    box.upper.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        RatVector unit(r, Rational(0));
        unit[i] = 1;
        const Rational qinv_ii = solve_linear(q, unit)[i];
        const Rational half = margin * sqrt_upper(radius * qinv_ii);
        const Rational centre = -qinv_l[i] / 2;
        box.lower[i] = std::max(Integer(0), effbound::ceil(centre - half));
        box.upper[i] = effbound::floor(centre + half);
        if (box.upper[i] < box.lower[i])
            box.empty = true;
    }
    return box;
}

ObstructionSet enumerate_obstructions(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                      const Rational& level, const Rational& margin)
{
    const SearchBox box = obstruction_box(model, a, t, level, margin);
    std::vector<Obstruction> found;
    if (box.empty)
        return finalize(box.curves, level, std::move(found));

    const std::size_t r = box.curves.size();
    IntMatrix q = model.curve_gram(box.curves);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            q(i, j) = -q(i, j);
    RatVector l(r);
    const DivisorClass tk = t - model.canonical();
    for (std::size_t i = 0; i < r; ++i)
        l[i] = model.intersect_curve(tk, box.curves[i]);

    // suffix_inverse[j] = inverse of Q on coordinates j..r-1, used to bound
    // q from below over all real completions of a fixed prefix.
    std::vector<std::vector<RatVector>> suffix_inverse(r);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::size_t> idx;
        for (std::size_t i = j; i < r; ++i)
            idx.push_back(i);
        const IntMatrix sub = q.principal(idx);
        std::vector<RatVector> inv(r - j, RatVector(r - j));
        for (std::size_t c = 0; c < r - j; ++c) {
            RatVector unit(r - j, Rational(0));
            unit[c] = 1;
            const RatVector col = solve_linear(sub, unit);
            for (std::size_t i = 0; i < r - j; ++i)
                inv[i][c] = col[i];
        }
        suffix_inverse[j] = std::move(inv);
    }

    IntVector v(r, Integer(0));
    auto prefix_bound = [&](std::size_t depth) -> Rational {
        // q(x, y) = x^T Qxx x + lx.x + y^T Qyy y + b.y,  b = ly + 2 Qyx x.
        Rational fixed = 0;
        for (std::size_t i = 0; i < depth; ++i) {
            Integer row = 0;
            for (std::size_t j = 0; j < depth; ++j)
                row += q(i, j) * v[j];
            fixed += Rational(v[i] * row) + l[i] * Rational(v[i]);
        }
        if (depth == r)
            return fixed;
        const std::size_t rest = r - depth;
        RatVector b(rest);
        for (std::size_t i = 0; i < rest; ++i) {
            Integer cross = 0;
            for (std::size_t j = 0; j < depth; ++j)
                cross += q(depth + i, j) * v[j];
            b[i] = l[depth + i] + Rational(2 * cross);
        }
        const auto& inv = suffix_inverse[depth];
        Rational quad = 0;
        for (std::size_t i = 0; i < rest; ++i)
            for (std::size_t j = 0; j < rest; ++j)
                quad += b[i] * inv[i][j] * b[j];
        return fixed - quad / 4;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == r) {
            if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
                return;
            const Rational value = prefix_bound(r);
            if (value <= level)
                found.push_back({v, model.curve_combination(box.curves, to_rational(v)), value});
            return;
        }
        for (Integer x = box.lower[depth]; x <= box.upper[depth]; ++x) {
            v[depth] = x;
            if (prefix_bound(depth + 1) <= level)
                descend(depth + 1);
        }
        v[depth] = 0;
    };
    if (prefix_bound(0) <= level)
        descend(0);
    return finalize(box.curves, level, std::move(found));
}

double obstruction_oracle_points(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                 const Rational& level)
{
    const SearchBox box = obstruction_box(model, a, t, level, 2);
    if (box.curves.empty() || box.empty)
        return 1;
    double points = 1;
    for (const auto& u : box.upper)
        points *= u.get_d() + 1;
    return points;
}

ObstructionSet obstruction_oracle(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                  const Rational& level, double max_points)
{
    const SearchBox box = obstruction_box(model, a, t, level, 2);
    std::vector<Obstruction> found;
    if (box.curves.empty())
        return finalize(box.curves, level, std::move(found));
    const double points = obstruction_oracle_points(model, a, t, level);
    if (points > max_points)
        throw Error(Errc::BoxExhausted, "oracle box has " + std::to_string(points) + " points");

    // Ambient evaluation in 128-bit integers: D = sum v_i C_i in the lattice
    // basis, w = G D kept up to date as the odometer moves.
    using Wide = __int128;
    auto narrow = [](const Integer& x) -> Wide {
        if (!x.fits_slong_p())
            throw Error(Errc::BoxExhausted, "lattice entries too large for the oracle");
        return static_cast<Wide>(x.get_si());
    };
    auto scaled = [&](const DivisorClass& d, Integer& den) {
        den = 1;
        for (const auto& x : d.coords())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Wide> out;
        for (const auto& x : d.coords())
            out.push_back(narrow(Rational(x * den).get_num()));
        return out;
    };

    const std::size_t n = model.rank();
    const std::size_t r = box.curves.size();
    Integer a_den, t_den;
    const std::vector<Wide> av = scaled(a, a_den);
    const std::vector<Wide> tv = scaled(t, t_den);
    std::vector<Wide> kv;
    for (const auto& x : model.canonical_coords())
        kv.push_back(narrow(x));
    std::vector<std::vector<Wide>> cv(r, std::vector<Wide>(n)), gc(r, std::vector<Wide>(n, 0));
    for (std::size_t i = 0; i < r; ++i) {
        const auto& coords = model.curves()[box.curves[i]].coords;
        for (std::size_t j = 0; j < n; ++j)
            cv[i][j] = narrow(coords[j]);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                gc[i][j] += narrow(model.gram()(j, k)) * cv[i][k];
    }
    auto dot = [n](const std::vector<Wide>& x, const std::vector<Wide>& y) {
        Wide s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i] * y[i];
        return s;
    };

    const Wide t_den_w = narrow(t_den);
    const Wide level_num = narrow(level.get_num());
    const Wide level_den = narrow(level.get_den());
    auto to_integer = [](Wide x) {
        if (static_cast<Wide>(static_cast<long>(x)) != x)
            throw Error(Errc::BoxExhausted, "oracle value out of range");
        return Integer(static_cast<long>(x));
    };

    // Scan from 0 regardless of the box's lower corner.
    std::vector<long> upper(r, 0);
    if (!box.empty)
        for (std::size_t i = 0; i < r; ++i)
            upper[i] = box.upper[i].get_si();
    std::vector<long> v(r, 0);
    std::vector<Wide> d(n, 0), w(n, 0);
    for (;;) {
        const bool zero = std::all_of(d.begin(), d.end(), [](Wide x) { return x == 0; });
        if (!zero && dot(av, w) == 0) {
            const Wide dd = dot(d, w);
            const Wide kd = dot(kv, w);
            const Wide td = dot(tv, w);
            // q(D) = (T'.D)/t_den - K.D - D^2 <= lp/lq, cleared of denominators.
            const Wide scaled_q = td - t_den_w * (kd + dd);
            if (scaled_q * level_den <= level_num * t_den_w) {
                const Rational value = Rational(to_integer(td)) / Rational(t_den) - Rational(to_integer(kd)) -
                                       Rational(to_integer(dd));
                IntVector iv(r);
                for (std::size_t i = 0; i < r; ++i)
                    iv[i] = v[i];
                found.push_back({iv, model.curve_combination(box.curves, to_rational(iv)), value});
            }
        }
        std::size_t pos = 0;
        while (pos < r && v[pos] == upper[pos]) {
            for (std::size_t j = 0; j < n; ++j) {
                d[j] -= upper[pos] * cv[pos][j];
                w[j] -= upper[pos] * gc[pos][j];
            }
            v[pos] = 0;
            ++pos;
        }
        if (pos == r)
            break;
        ++v[pos];
        for (std::size_t j = 0; j < n; ++j) {
            d[j] += cv[pos][j];
            w[j] += gc[pos][j];
        }
    }
    return finalize(box.curves, level, std::move(found));
}

TauResult obstruction_minimum(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t)
{
    const auto e = exceptional_curve(model, a);
    TauResult out;
    if (e.empty()) {
        out.value = ExtendedRational::plus_infinity();
        return out;
    }
    Rational level = q_value(model, t, model.curve_class(e.front()));
    for (std::size_t i : e)
        level = std::min(level, q_value(model, t, model.curve_class(i)));
    // Nested bounded sublevel sets; the first level already contains the
    // minimizing single curve, the loop only guards the invariant.
    Rational step = 1;
    for (;;) {
        auto set = enumerate_obstructions(model, a, t, level);
        if (set.witness_minimum) {
            out.value = ExtendedRational::finite(set.witness_minimum->value);
            out.witness = set.witness_minimum;
            return out;
        }
        level += step;
        step *= 2;
    }
}

CorrectionDivisor correction_divisor(const SurfaceModel& model, std::span<const std::size_t> curves,
                                     const DivisorClass& t, int k)
{
    CorrectionDivisor e;
    e.k = k;
    e.curves.assign(curves.begin(), curves.end());
    const IntMatrix g = model.curve_gram(e.curves);
    if (!is_negative_definite(g))
        throw Error(Errc::NotNegativeDefinite, "correction divisor needs a negative definite curve set");
    e.det_abs = abs(determinant(g));

    RatVector rhs(e.curves.size());
    for (std::size_t a = 0; a < e.curves.size(); ++a) {
        const std::size_t c = e.curves[a];
        const Rational s = model.intersect_curve(model.canonical(), c) - model.intersect_curve(t, c) + k;
        if (!is_integer(s))
            throw Error(Errc::IntegralityFailure, "sigma is not integral; T must be an integral class");
        e.sigma.push_back(s > 0 ? s.get_num() : Integer(0));
        rhs[a] = -Rational(e.det_abs * e.sigma.back());
    }
    const RatVector x = solve_linear(g, rhs);
    for (const auto& xi : x) {
        if (!is_integer(xi))
            throw Error(Errc::IntegralityFailure, "correction coefficient " + to_string(xi) + " is not integral");
        if (xi < 0)
            throw Error(Errc::ModelInconsistent, "correction coefficient " + to_string(xi) + " is negative");
        e.coefficients.push_back(xi.get_num());
    }
    e.divisor = model.curve_combination(e.curves, x);
    return e;
}

CorrectionDivisor correction_divisor(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t, int k)
{
    require_nef_big(model, a);
    const auto e = exceptional_curve(model, a);
    return correction_divisor(model, e, t, k);
}

SeparatingDivisor separating_divisor(const SurfaceModel& model, const DivisorClass& a)
{
    require_nef_big(model, a);
    const auto e = exceptional_curve(model, a);
    const DivisorClass zero = DivisorClass::zero(model.rank());
    SeparatingDivisor out;
    out.divisor = zero;
    for (const auto& comp : connected_components(model, e)) {
        SeparatingPiece piece;
        piece.component = comp;
        const CorrectionDivisor c = correction_divisor(model, comp, zero, 0);
        if (c.divisor.is_zero()) {
            const FundamentalCycle z = fundamental_cycle(model, comp);
            piece.fundamental_cycle_used = true;
            piece.coefficients = z.coefficients;
            out.divisor += z.cycle(model);
        } else {
            piece.coefficients = c.coefficients;
            out.divisor += c.divisor;
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

ConditionFlags condition_check(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t, int k)
{
    require_nef_big(model, a);
    ConditionFlags f;
    f.k = k;
    f.matsusaka = positivity(model, a).ample_model;
    const auto e = exceptional_curve(model, a);
    f.laufer_ramanujam = true;
    for (std::size_t c : e)
        if (model.intersect_curve(t, c) < model.intersect_curve(model.canonical(), c) + k)
            f.laufer_ramanujam = false;
    f.artin = is_rational_configuration(model, e);
    return f;
}

Rational ring_multiplication_bound(const SurfaceModel& model, const DivisorClass& a, const Integer& l,
                                   const Integer& p, bool v_is_zero)
{
    require_big(model, a);
    if (l < 1 || p < 1)
        throw Error(Errc::NonpositiveInput, "l and p must be positive");
    const Rational a2 = model.self_intersection(a);
    const Rational first = Rational(2 * l + p - 1);
    Rational second;
    if (v_is_zero) {
        second = 3 * Rational(l) + model.intersect(model.canonical(), a) / a2;
    } else {
        const Rational k = Rational(l * l) * a2;
        second = k + adjoint_threshold(model, a, DivisorClass::zero(model.rank())) + Rational(l);
    }
    return std::max(first, second);
}

RingGeneration ring_generation_threshold(const SurfaceModel& model, const DivisorClass& a,
                                         bool assert_no_fixed_part)
{
    require_nef_big(model, a);
    const DivisorClass zero = DivisorClass::zero(model.rank());
    const auto e = exceptional_curve(model, a);
    const Integer m0 = least_adjoint_n(model, a, zero);
    const Rational a2 = model.self_intersection(a);

    RingGeneration g;
    g.l = 1 + m0;
    if (is_rational_configuration(model, e)) {
        g.used = RingCase::RationalExceptional;
        g.p = m0;
    } else if (assert_no_fixed_part) {
        g.used = RingCase::NoFixedPart;
        const CorrectionDivisor e1 = correction_divisor(model, e, zero, 1);
        g.p = 1 + std::max(m0, least_adjoint_n(model, a, -e1.divisor));
    } else {
        throw Error(Errc::UnverifiableHypothesis,
                    "E(A) is not rational and '|A| has no fixed part' was not asserted");
    }
    if (g.l <= 0 || g.p <= 0)
        throw Error(Errc::NonpositiveLP,
                    "l = " + to_string(g.l) + ", p = " + to_string(g.p) + " (both must be positive)");

    const Rational first = Rational(2 * g.l + g.p + 1);
    Rational second;
    if (g.used == RingCase::RationalExceptional) {
        second = 3 * Rational(g.l) + 3 + model.intersect(model.canonical(), a) / a2;
    } else {
        // The lemma is applied with l + 1, so k = (l+1)^2 A^2.
        const Rational k = Rational((g.l + 1) * (g.l + 1)) * a2;
        second = k + adjoint_threshold(model, a, zero) + Rational(g.l) + 1;
    }
    g.bound = std::max(first, second);
    g.m_min = least_integer_above(g.bound / 2);
    return g;
}

MatsusakaComparison matsusaka_compare(const SurfaceModel& model, const DivisorClass& h)
{
    if (!positivity(model, h).ample_model)
        throw Error(Errc::NotAmple, "H must be ample on the model");
    const Rational h2 = model.self_intersection(h);
    const DivisorClass k = model.canonical();
    const Rational hk4 = model.intersect(h, k + Rational(4) * h) + 1;
    const Rational hk2 = model.intersect(h, k + Rational(2) * h) + 1;

    MatsusakaComparison c;
    c.fernandez_del_busto = (hk4 * hk4 / h2 + 3) / 2;
    c.beltrametti_sommese = (hk2 * hk2 / h2 + 7) / 2;
    c.adjoint = 2 + adjoint_threshold(model, h, DivisorClass::zero(model.rank()));
    c.least_fernandez_del_busto = least_integer_above(c.fernandez_del_busto);
    c.least_beltrametti_sommese = least_integer_above(c.beltrametti_sommese);
    c.least_adjoint = least_integer_above(c.adjoint);
    return c;
}

namespace {

ThresholdEntry make_entry(std::string id, std::string statement)
{
    ThresholdEntry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    e.caveats.push_back("relative to model");
    return e;
}

void set_bound(ThresholdEntry& e, Rational bound, bool strict)
{
    e.applicable = true;
    e.strict = strict;
    e.least_n = strict ? least_integer_above(bound) : effbound::ceil(bound);
    e.bound = std::move(bound);
}

void omit(ThresholdEntry& e, std::string why)
{
    e.applicable = false;
    e.omitted_reason = std::move(why);
}

} // namespace

std::vector<ThresholdEntry> theorem_thresholds(const SurfaceModel& model, const DivisorClass& a,
                                               const DivisorClass& t, const ThresholdOptions& options)
{
    require_nef_big(model, a);
    if (options.k < 0)
        throw Error(Errc::NonpositiveInput, "k must be nonnegative");

    const DivisorClass zero = DivisorClass::zero(model.rank());
    const int k = options.k;
    const auto e = exceptional_curve(model, a);
    const auto components = connected_components(model, e);
    const Positivity pos = positivity(model, a);
    const bool rational = is_rational_configuration(model, e);
    const Rational m_a0 = adjoint_threshold(model, a, zero);
    const Rational m_at = adjoint_threshold(model, a, t);
    const Integer least_at = least_adjoint_n(model, a, t);
    const bool t_integral = t.is_integral();

    std::vector<ThresholdEntry> out;

    {
        auto en = make_entry("very_ample_k", "|nA+T| is (k-1)-very ample");
        en.values["k"] = k;
        const auto obstructions = enumerate_obstructions(model, a, t, k);
        if (!obstructions.divisors.empty()) {
            omit(en, std::to_string(obstructions.divisors.size()) + " obstruction divisors at level k");
        } else {
            const HodgeDefect h = hodge_defect(model, a, t);
            if (k == 0 && h.proportional) {
                set_bound(en, m_at, false);
                en.caveats.push_back("numerical equivalence: T = K + lambda A checked numerically");
            } else {
                set_bound(en, k + m_at, true);
            }
        }
        out.push_back(std::move(en));
    }

    {
        auto en = make_entry("h1_vanishing", "h^1(nA) = 0");
        if (rational)
            set_bound(en, m_a0, true);
        else
            omit(en, "E(A) is not rational");
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("base_point_free", "|nA| is base point free");
        if (rational)
            set_bound(en, 1 + m_a0, true);
        else
            omit(en, "E(A) is not rational");
        out.push_back(std::move(en));
    }

    std::optional<CorrectionDivisor> e0, e1;
    if (t_integral) {
        e0 = correction_divisor(model, e, t, 0);
        e1 = correction_divisor(model, e, t, 1);
    }
    {
        auto en = make_entry("h1_reduces_to_E0", "h^1(nA+T) = h^1(O_E0(nA+T)), periodic in n");
        en.caveats.push_back("threshold only: the periodic h^1 value is not computed");
        if (e0) {
            set_bound(en, adjoint_threshold(model, a, t - e0->divisor), true);
            en.divisors["E0"] = e0->divisor;
        } else {
            omit(en, "T is not integral");
        }
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("fixed_part_bounded_by_E1", "the fixed part of |nA+T| is bounded by E1");
        if (e1) {
            set_bound(en, 1 + adjoint_threshold(model, a, t - e1->divisor), true);
            en.divisors["E1"] = e1->divisor;
        } else {
            omit(en, "T is not integral");
        }
        out.push_back(std::move(en));
    }

    {
        const CorrectionDivisor e1_zero = correction_divisor(model, e, zero, 1);
        for (const auto& comp : components) {
            if (options.component_curve &&
                std::find(comp.begin(), comp.end(), *options.component_curve) == comp.end())
                continue;
            auto en = make_entry("fixed_part_avoids_component:" + curve_list(model, comp),
                                 "the component is not in the fixed part of |nA|; the fixed part lies in E1''");
            if (!is_rational_configuration(model, comp)) {
                omit(en, "component is not rational");
            } else {
                RatVector rest(e1_zero.curves.size(), Rational(0));
                for (std::size_t i = 0; i < e1_zero.curves.size(); ++i)
                    if (std::find(comp.begin(), comp.end(), e1_zero.curves[i]) == comp.end())
                        rest[i] = e1_zero.coefficients[i];
                const DivisorClass e1_rest = model.curve_combination(e1_zero.curves, rest);
                set_bound(en, 1 + adjoint_threshold(model, a, -e1_rest), true);
                en.divisors["E1''"] = e1_rest;
            }
            out.push_back(std::move(en));
        }
    }

    {
        auto en = make_entry("no_fixed_part_base_point_free", "|nA| has no base points");
        if (options.assert_no_fixed_part) {
            set_bound(en, 1 + m_a0, true);
            en.caveats.push_back("user-asserted: |A| has no fixed part");
        } else {
            omit(en, "requires --assert-no-fixed-part");
        }
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("castelnuovo_h1_constant", "h^0(nA+T) = chi(nA+T) + s with s constant, h^2(nA+T) = 0");
        en.caveats.push_back("threshold only: the constant s is not computed");
        if (!options.assert_no_fixed_part) {
            omit(en, "requires --assert-no-fixed-part");
        } else if (!e1) {
            omit(en, "T is not integral");
        } else {
            set_bound(en, std::max<Rational>(1 + m_a0, 1 + adjoint_threshold(model, a, t - e1->divisor)), true);
            en.caveats.push_back("user-asserted: |A| has no fixed part");
            en.divisors["E1"] = e1->divisor;
        }
        out.push_back(std::move(en));
    }

    const bool morphism_ok = options.assert_base_point_free || rational;
    {
        auto en = make_entry("birational_morphism",
                             "the map of |nA| is a birational morphism, an isomorphism off E(A), contracting E(A)");
        if (morphism_ok) {
            set_bound(en, 2 + m_a0, true);
            if (!rational)
                en.caveats.push_back("user-asserted: |A| has no base point");
        } else {
            omit(en, "requires E(A) rational or --assert-base-point-free");
        }
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("connected_fibers", "the map of |nA| has connected fibers");
        if (!morphism_ok) {
            omit(en, "requires E(A) rational or --assert-base-point-free");
        } else {
            const SeparatingDivisor sep = separating_divisor(model, a);
            en.divisors["tilde_E0"] = sep.divisor;
            if (rational) {
                set_bound(en, 2 + m_a0, true);
            } else {
                set_bound(en, std::max<Rational>(2 + m_a0, adjoint_threshold(model, a, -sep.divisor)), true);
                en.caveats.push_back("user-asserted: |A| has no base point");
            }
        }
        out.push_back(std::move(en));
    }
    if (rational && components.size() >= 2) {
        std::vector<FundamentalCycle> cycles;
        for (const auto& comp : components)
            cycles.push_back(fundamental_cycle(model, comp));
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                auto en = make_entry("component_separation:" + curve_list(model, components[i]) + "|" +
                                         curve_list(model, components[j]),
                                     "|nA| separates the two components");
                const DivisorClass zz = cycles[i].cycle(model) + cycles[j].cycle(model);
                set_bound(en, adjoint_threshold(model, a, -zz), true);
                en.values["m_i"] = Rational(cycles[i].multiplicity);
                en.values["m_j"] = Rational(cycles[j].multiplicity);
                en.values["closed_form"] =
                    2 + m_a0 - Rational(cycles[i].multiplicity + cycles[j].multiplicity) / 4;
                out.push_back(std::move(en));
            }
    }

    {
        auto en = make_entry("very_ample_degree", "|nA+T| is (n - m(A,T) - 1)-very ample");
        en.values["m"] = Rational(least_at);
        if (pos.ample_model) {
            set_bound(en, Rational(least_at), false);
            if (options.n)
                en.values["degree_at_n"] = Rational(*options.n - least_at - 1);
        } else {
            omit(en, "A is not ample on the model");
        }
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("tau_very_ample_degree", "|nA+T| is min{tau-2, n-m(A,T)-1}-very ample");
        en.values["m"] = Rational(least_at);
        const TauResult tau = obstruction_minimum(model, a, t);
        if (!tau.value.infinite)
            en.values["tau"] = tau.value.value;
        if (!tau.value.infinite && tau.value.value < 1) {
            omit(en, "tau < 1");
        } else {
            set_bound(en, Rational(least_at), false);
            if (options.n) {
                Rational deg = Rational(*options.n - least_at - 1);
                if (!tau.value.infinite)
                    deg = std::min<Rational>(deg, tau.value.value - 2);
                en.values["degree_at_n"] = deg;
            }
        }
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("matsusaka_very_ample", "|nA| is very ample");
        if (pos.ample_model)
            set_bound(en, 2 + m_a0, true);
        else
            omit(en, "A is not ample on the model");
        out.push_back(std::move(en));
    }
    {
        auto en = make_entry("ring_generation", "R_{jm} = (R_m)^j for all j >= 1");
        try {
            const RingGeneration g = ring_generation_threshold(model, a, options.assert_no_fixed_part);
            set_bound(en, g.bound / 2, true);
            en.values["l"] = Rational(g.l);
            en.values["p"] = Rational(g.p);
            en.values["bound_2m"] = g.bound;
            if (g.used == RingCase::NoFixedPart)
                en.caveats.push_back("user-asserted: |A| has no fixed part");
        } catch (const Error& err) {
            if (err.code() != Errc::NonpositiveLP && err.code() != Errc::UnverifiableHypothesis)
                throw;
            omit(en, err.what());
        }
        out.push_back(std::move(en));
    }
    return out;
}

BoundReport bound_report(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                         const ThresholdOptions& options)
{
    require_nef_big(model, a);
    BoundReport r;
    r.adjoint_threshold = adjoint_threshold(model, a, t);
    r.least_adjoint_n = least_adjoint_n(model, a, t);
    const HodgeDefect h = hodge_defect(model, a, t);
    r.hodge_defect = h.value;
    r.proportional = h.proportional;
    r.tau = obstruction_minimum(model, a, t).value;
    if (options.n)
        r.quadratic = adjoint_quadratic(model, *options.n, options.k, a, t);
    r.critical_n = critical_n_bracket(model, options.k, a, t);
    if (t.is_integral()) {
        std::vector<int> ks{0, 1};
        if (options.k > 1)
            ks.push_back(options.k);
        for (int k : ks)
            r.corrections.push_back(correction_divisor(model, a, t, k));
    }
    r.separating = separating_divisor(model, a);
    r.conditions = condition_check(model, a, t, options.k);
    r.thresholds = theorem_thresholds(model, a, t, options);
    return r;
}

} // namespace effbound
