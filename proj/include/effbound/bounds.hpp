#pragma once

#include "effbound/cycles.hpp"

#include <map>
#include <optional>
#include <string>

namespace effbound {

// Notation: for a big class A and any class T on the model,
//   M(A,T) = ((K-T).A + 2)^2 / (4 A^2) - (K-T)^2 / 4      (adjoint threshold)
//   m(A,T) = least integer strictly above M(A,T)
// If n > k + M(A,T) and |nA+T| fails (k-1)-very ampleness, the failure is
// carried by an effective D != 0 with D.A = 0 and T.D - K.D - D^2 <= k.

Rational adjoint_threshold(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t);
Integer least_adjoint_n(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t);

struct HodgeDefect {
    Rational value;                ///< (A.(T-K))^2 - A^2 (T-K)^2
    bool proportional = false;     ///< T - K = lambda A as vectors
    std::optional<Rational> lambda;
};

HodgeDefect hodge_defect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t);

struct ThresholdCheck {
    bool holds = false;
    /// The n >= M branch for k = 0 was used; it relies on numerical rather
    /// than linear equivalence of T and K + lambda A.
    bool numerical_equivalence_branch = false;
};

ThresholdCheck main_threshold_holds(const SurfaceModel& model, const Integer& n, int k, const DivisorClass& a,
                                    const DivisorClass& t);

/// Closed rational interval; lo == hi means the value is exact.
struct RationalBracket {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    bool operator==(const RationalBracket&) const = default;
};

struct IntegerBracket {
    Integer floor;
    Integer ceil;
    bool operator==(const IntegerBracket&) const = default;
};

/// f(x) = x^2 - (A.L) x + h/4 + k A^2 with L = nA + T - K. Its smaller root
/// bounds D.A for any obstruction divisor.
struct AdjointQuadratic {
    Rational linear;    ///< -(A.L)
    Rational constant;  ///< h/4 + k A^2
    Rational at_zero;
    Rational at_one;
    std::optional<RationalBracket> smaller_root; ///< width <= 1/1024 unless exact

    Rational operator()(const Rational& x) const { return x * x + linear * x + constant; }
    bool operator==(const AdjointQuadratic&) const = default;
};

AdjointQuadratic adjoint_quadratic(const SurfaceModel& model, const Integer& n, int k, const DivisorClass& a,
                                   const DivisorClass& t);

/// Integer bracketing of the larger root n_k of L^2 - 4k as a polynomial in n.
IntegerBracket critical_n_bracket(const SurfaceModel& model, int k, const DivisorClass& a, const DivisorClass& t);

/// n-threshold above which every obstruction divisor has D.A < x.
Rational refined_da_bound(const SurfaceModel& model, const Rational& x, int k, const DivisorClass& a,
                          const DivisorClass& t);

struct Obstruction {
    IntVector coefficients;  ///< over ObstructionSet::exceptional
    DivisorClass divisor;
    Rational value;          ///< T.D - K.D - D^2
    bool operator==(const Obstruction&) const = default;
};

struct ObstructionSet {
    std::vector<std::size_t> exceptional;      ///< E(A)
    Rational level;                            ///< the k searched
    std::vector<Obstruction> divisors;         ///< lexicographic in coefficients
    std::optional<Obstruction> witness_minimum;
    bool operator==(const ObstructionSet&) const = default;
};

/// Integer box containing every nonnegative solution of q(D) <= level on
/// E(A), with half-widths scaled by `margin`. enumerate_obstructions walks
/// it coordinate by coordinate, dropping a prefix once the minimum of q over
/// all real completions exceeds the level.
struct SearchBox {
    std::vector<std::size_t> curves;
    IntVector lower;
    IntVector upper;
    bool empty = false;
};

SearchBox obstruction_box(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                          const Rational& level, const Rational& margin = 1);

ObstructionSet enumerate_obstructions(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                      const Rational& level, const Rational& margin = 1);

inline constexpr double kOracleMaxPoints = 2e7;

/// Number of points obstruction_oracle would scan.
double obstruction_oracle_points(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                 const Rational& level);

/// Test-grade cross-check: every point of the doubled box, evaluated
/// directly through the intersection form. Throws BoxExhausted rather than
/// scan more than max_points points.
ObstructionSet obstruction_oracle(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                                  const Rational& level, double max_points = kOracleMaxPoints);

struct TauResult {
    ExtendedRational value;
    std::optional<Obstruction> witness;
    bool operator==(const TauResult&) const = default;
};

/// Minimum of T.D - K.D - D^2 over effective D != 0 with D.A = 0; +inf when
/// E(A) is empty.
TauResult obstruction_minimum(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t);

/// The effective divisor sum x_i C_i with (sum x_i C_i).C_j = -|det| sigma_j,
/// sigma_j = max{K.C_j - T.C_j + k, 0}, on a negative definite curve set.
struct CorrectionDivisor {
    int k = 0;
    std::vector<std::size_t> curves;
    IntVector sigma;
    Integer det_abs;
    IntVector coefficients;
    DivisorClass divisor;
    bool operator==(const CorrectionDivisor&) const = default;
};

CorrectionDivisor correction_divisor(const SurfaceModel& model, std::span<const std::size_t> curves,
                                     const DivisorClass& t, int k);

/// correction_divisor on E(A).
CorrectionDivisor correction_divisor(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t, int k);

/// Per connected component of E(A): the k = 0, T = 0 correction divisor, or
/// the fundamental cycle when that divisor vanishes.
struct SeparatingPiece {
    std::vector<std::size_t> component;
    bool fundamental_cycle_used = false;
    IntVector coefficients;
    bool operator==(const SeparatingPiece&) const = default;
};

struct SeparatingDivisor {
    DivisorClass divisor;
    std::vector<SeparatingPiece> pieces;
    bool operator==(const SeparatingDivisor&) const = default;
};

SeparatingDivisor separating_divisor(const SurfaceModel& model, const DivisorClass& a);

struct ConditionFlags {
    int k = 0;
    bool matsusaka = false;        ///< A ample on the model
    bool laufer_ramanujam = false; ///< T.C_i >= K.C_i + k on E(A)
    bool artin = false;            ///< E(A) rational
    bool operator==(const ConditionFlags&) const = default;
};

ConditionFlags condition_check(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t, int k);

struct ThresholdOptions {
    int k = 0;
    std::optional<Integer> n;
    bool assert_no_fixed_part = false;
    bool assert_base_point_free = false;
    /// Restrict the fixed-part/component statements to the component
    /// containing this curve index.
    std::optional<std::size_t> component_curve;
};

/// One effective statement "property holds for n > bound" (or ">=").
struct ThresholdEntry {
    std::string id;
    std::string statement;
    bool applicable = false;
    std::string omitted_reason;
    Rational bound;
    bool strict = true;
    Integer least_n;
    std::vector<std::string> caveats;
    std::map<std::string, Rational> values;
    std::map<std::string, DivisorClass> divisors;
    bool operator==(const ThresholdEntry&) const = default;
};

std::vector<ThresholdEntry> theorem_thresholds(const SurfaceModel& model, const DivisorClass& a,
                                               const DivisorClass& t, const ThresholdOptions& options);

/// Bound beyond which R_m = R_l R_{m-l} for the section ring of A.
Rational ring_multiplication_bound(const SurfaceModel& model, const DivisorClass& a, const Integer& l,
                                   const Integer& p, bool v_is_zero);

enum class RingCase { RationalExceptional, NoFixedPart };

struct RingGeneration {
    Integer l;
    Integer p;
    Rational bound;  ///< 2m must exceed this
    Integer m_min;
    RingCase used = RingCase::RationalExceptional;
    bool operator==(const RingGeneration&) const = default;
};

RingGeneration ring_generation_threshold(const SurfaceModel& model, const DivisorClass& a,
                                         bool assert_no_fixed_part);

/// Very-ampleness bounds for |nH|: two classical ones and 2 + M(H,0).
struct MatsusakaComparison {
    Rational fernandez_del_busto;
    Rational beltrametti_sommese;
    Rational adjoint;
    Integer least_fernandez_del_busto;
    Integer least_beltrametti_sommese;
    Integer least_adjoint;
    bool operator==(const MatsusakaComparison&) const = default;
};

MatsusakaComparison matsusaka_compare(const SurfaceModel& model, const DivisorClass& h);

struct BoundReport {
    Rational adjoint_threshold;
    Integer least_adjoint_n;
    Rational hodge_defect;
    bool proportional = false;
    ExtendedRational tau;
    std::optional<AdjointQuadratic> quadratic;
    std::optional<IntegerBracket> critical_n;
    std::vector<CorrectionDivisor> corrections;
    SeparatingDivisor separating;
    ConditionFlags conditions;
    std::vector<ThresholdEntry> thresholds;
    bool operator==(const BoundReport&) const = default;
};

BoundReport bound_report(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& t,
                         const ThresholdOptions& options);

} // namespace effbound
