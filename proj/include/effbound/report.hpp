#pragma once

#include "effbound/bounds.hpp"
#include "effbound/io.hpp"
#include "effbound/zariski.hpp"

#include <ostream>

namespace effbound {

// JSON encoding of results. Exact values are strings; every rational is
// {"exact": "p/q", "decimal": "..."} and only "exact" is read back.
// Curves are written by name and resolved against the model on decode, so
// decode(model, encode(model, x)) == x.

Json encode(const Rational& q);
Json encode(const ExtendedRational& q);
Json encode(const SurfaceModel& model, const DivisorClass& d);
Json encode(const SurfaceModel& model, const ZariskiDecomposition& z);
Json encode(const SurfaceModel& model, const FundamentalCycle& z);
Json encode(const SurfaceModel& model, const ObstructionSet& s);
Json encode(const SurfaceModel& model, const TauResult& t);
Json encode(const SurfaceModel& model, const CorrectionDivisor& e);
Json encode(const SurfaceModel& model, const SeparatingDivisor& s);
Json encode(const ConditionFlags& f);
Json encode(const SurfaceModel& model, const ThresholdEntry& t);
Json encode(const RingGeneration& g);
Json encode(const MatsusakaComparison& m);
Json encode(const AdjointQuadratic& f);
Json encode(const IntegerBracket& b);
Json encode(const SurfaceModel& model, const BoundReport& r);

void decode(const Json& j, Rational& q);
void decode(const Json& j, ExtendedRational& q);
void decode(const SurfaceModel& model, const Json& j, DivisorClass& d);
void decode(const SurfaceModel& model, const Json& j, ZariskiDecomposition& z);
void decode(const SurfaceModel& model, const Json& j, FundamentalCycle& z);
void decode(const SurfaceModel& model, const Json& j, ObstructionSet& s);
void decode(const SurfaceModel& model, const Json& j, TauResult& t);
void decode(const SurfaceModel& model, const Json& j, CorrectionDivisor& e);
void decode(const SurfaceModel& model, const Json& j, SeparatingDivisor& s);
void decode(const Json& j, ConditionFlags& f);
void decode(const SurfaceModel& model, const Json& j, ThresholdEntry& t);
void decode(const Json& j, RingGeneration& g);
void decode(const Json& j, MatsusakaComparison& m);
void decode(const Json& j, AdjointQuadratic& f);
void decode(const Json& j, IntegerBracket& b);
void decode(const SurfaceModel& model, const Json& j, BoundReport& r);

template <typename T>
T decode_as(const SurfaceModel& model, const Json& j)
{
    T out;
    if constexpr (requires { decode(model, j, out); })
        decode(model, j, out);
    else
        decode(j, out);
    return out;
}

/// Indented "key: value" rendering of a report document. Rationals print
/// as "exact (~decimal)", divisors as their expression, so the text form
/// carries the same exact values as the JSON form.
void render_text(const Json& doc, std::ostream& out);

} // namespace effbound
