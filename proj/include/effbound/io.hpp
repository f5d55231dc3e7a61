#pragma once

#include "effbound/surface.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace effbound {

using Json = nlohmann::ordered_json;

inline constexpr int kSurfaceSchema = 1;

/// Surface file (schema 1):
///   { "schema": 1, "name": ..., "rank": r, "gram": [[...]], "canonical": [...],
///     "basis": [names]?, "curves": [{"name", "coords", "effective"?}],
///     "ample_reference": [...]? }
/// Integer fields accept JSON integers or integer strings; the ample
/// reference also accepts "p/q" strings.
SurfaceModel parse_surface(const std::filesystem::path& path);
SurfaceModel parse_surface_text(std::string_view text);
SurfaceModel parse_surface_json(const Json& doc);

Json surface_to_json(const SurfaceModel& model);

/// "1,2,1/2" (one entry per basis vector) or a linear expression in curve
/// and basis names such as "2*s + 1/2*f - e". Curve names take precedence.
/// A bare "0" is the zero class on any rank.
DivisorClass parse_divisor(const SurfaceModel& model, std::string_view text);

/// Curve indices from a comma list of names of effective curves.
std::vector<std::size_t> parse_curve_list(const SurfaceModel& model, std::string_view text);

/// "2*s + 1/2*f", "-e", "0".
std::string linear_expression(const std::vector<std::string>& names, const RatVector& coeffs);

/// Divisor in basis names when the model has them, else "(a, b, ...)".
std::string format_divisor(const SurfaceModel& model, const DivisorClass& d);

std::string format_curves(const SurfaceModel& model, const std::vector<std::size_t>& curves);

} // namespace effbound
