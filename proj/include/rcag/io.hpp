#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "rcag/circular.hpp"

namespace rcag {

enum class AngleUnit { Radians, Degrees };

/// Optional linear map onto [0, 2pi): latitude from [-pi/2, pi/2],
/// longitude from [-pi, pi]. Applied after unit conversion.
enum class Rescale { None, Latitude, Longitude };

[[nodiscard]] AngleUnit parse_angle_unit(std::string_view text);
[[nodiscard]] Rescale parse_rescale(std::string_view text);

/// One value per line; '#' comments and blank lines are skipped and a
/// non-numeric first payload line is taken as a header. Throws ParseError
/// with the line number, or InvalidInput when no values remain.
[[nodiscard]] AngleSeries parse_angles(std::istream& in, AngleUnit unit, Rescale rescale = Rescale::None);
[[nodiscard]] AngleSeries parse_angles(const std::filesystem::path& path, AngleUnit unit,
                                       Rescale rescale = Rescale::None);

/// One angle per line with 12 significant digits.
void write_angles(std::ostream& out, std::span<const Angle> series, AngleUnit unit);
void write_angles(const std::filesystem::path& path, std::span<const Angle> series, AngleUnit unit);

}  // namespace rcag
