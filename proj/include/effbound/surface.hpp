#pragma once

#include "effbound/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace effbound {

/// A Q-divisor class written in the lattice basis of a SurfaceModel.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(RatVector coords) : coords_(std::move(coords)) {}
    explicit DivisorClass(const IntVector& coords) : coords_(to_rational(coords)) {}

    static DivisorClass zero(std::size_t rank) { return DivisorClass(RatVector(rank, Rational(0))); }

    std::size_t rank() const noexcept { return coords_.size(); }
    const RatVector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

    bool operator==(const DivisorClass& o) const { return coords_ == o.coords_; }

private:
    RatVector coords_;
};

/// A named class on the model. Effective entries are treated as the prime
/// curves C_i; non-effective entries only provide names for divisor input.
struct Curve {
    std::string name;
    IntVector coords;
    bool effective = true;
};

struct Positivity {
    bool nef_model = false;
    bool big = false;
    bool ample_model = false;
    std::optional<bool> pseudo_effective_model; ///< empty without an ample reference
};

/// Finite lattice presentation of a surface: NS(X) as an integral form of
/// signature (1, r-1), the canonical class, and a finite list of prime
/// curves. Every positivity notion below is relative to that list.
class SurfaceModel {
public:
    struct Spec {
        std::string name;
        IntMatrix gram;
        IntVector canonical;
        std::vector<Curve> curves;
        std::optional<RatVector> ample_reference;
        std::vector<std::string> basis_names;
    };

    /// Validates Hodge-index shape, characteristic canonical class, curve
    /// sanity (nonzero, p_a >= 0, distinct curves meet nonnegatively) and
    /// ampleness of the reference class. Throws Error(ValidationError).
    static SurfaceModel create(Spec spec);

    /// No validation; used to build deliberately broken models in tests.
    static SurfaceModel unchecked(Spec spec);

    const std::string& name() const noexcept { return spec_.name; }
    std::size_t rank() const noexcept { return spec_.gram.rows(); }
    const IntMatrix& gram() const noexcept { return spec_.gram; }
    const IntVector& canonical_coords() const noexcept { return spec_.canonical; }
    DivisorClass canonical() const { return DivisorClass(spec_.canonical); }
    const std::vector<std::string>& basis_names() const noexcept { return spec_.basis_names; }
    const Spec& spec() const noexcept { return spec_; }

    /// Named classes in file order (effective or not).
    const std::vector<Curve>& named_classes() const noexcept { return spec_.curves; }

    /// The prime curves C_0..C_{m-1}: the effective named classes, in order.
    const std::vector<Curve>& curves() const noexcept { return curves_; }
    std::size_t curve_count() const noexcept { return curves_.size(); }
    DivisorClass curve_class(std::size_t i) const { return DivisorClass(curves_.at(i).coords); }

    std::optional<DivisorClass> ample_reference() const;

    /// Intersection matrix (C_i . C_j) of the given curves.
    IntMatrix curve_gram(std::span<const std::size_t> indices) const;

    /// Sum of coeffs[a] * C_{indices[a]} in lattice coordinates.
    DivisorClass curve_combination(std::span<const std::size_t> indices, std::span<const Rational> coeffs) const;

    Rational intersect(const DivisorClass& a, const DivisorClass& b) const;
    Rational self_intersection(const DivisorClass& a) const { return intersect(a, a); }
    Rational intersect_curve(const DivisorClass& a, std::size_t curve) const;

private:
    explicit SurfaceModel(Spec spec);
    Spec spec_;
    std::vector<Curve> curves_;
};

/// p_a(D) = 1 + (D^2 + K.D)/2. Note p_a(0) = 1; callers that need D != 0
/// must exclude it themselves.
Integer arithmetic_genus(const SurfaceModel& model, const DivisorClass& d);

Positivity positivity(const SurfaceModel& model, const DivisorClass& a);

/// Throws Error(NoAmpleReference) when the model has no reference class.
bool pseudo_effective_model(const SurfaceModel& model, const DivisorClass& a);

/// E(A): indices of curves orthogonal to a nef and big A.
std::vector<std::size_t> exceptional_curve(const SurfaceModel& model, const DivisorClass& a);

/// Partition of the curve set under adjacency C_i.C_j > 0, each part sorted,
/// parts ordered by their smallest index.
std::vector<std::vector<std::size_t>> connected_components(const SurfaceModel& model,
                                                           std::span<const std::size_t> curves);

/// A = |det(C_iC_j)| H + sum x_i C_i with A.C_k = 0 on the given set.
DivisorClass construct_polarization(const SurfaceModel& model, std::span<const std::size_t> curves,
                                    const DivisorClass& ample);

/// T - K numerically proportional to A; returns lambda with T - K = lambda A.
std::optional<Rational> proportionality_factor(const DivisorClass& a, const DivisorClass& x);

} // namespace effbound
