#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gnslab/document.hpp"
#include "gnslab/point.hpp"

namespace gnslab {

enum class ExportFormat { kJson, kCsv, kSvg };

/// "json", "csv" or "svg"; kParseError otherwise.
ExportFormat parse_export_format(std::string_view name);

enum class PointClass { kGap, kGenerator, kElement };

std::string_view to_string(PointClass c);

/// Componentwise max over gaps and generators, plus one in every coordinate.
Point bounding_corner(const SemigroupDocument& doc);

/// `x,y,class` rows (`x,class` in dimension 1, `x1,...,xd,class` above 2) for
/// every lattice point in the bounding box, graded-lex order.
std::string export_csv(const SemigroupDocument& doc);

/// SVG 1.1 lattice plot: gaps red, minimal generators grey, other elements
/// blue. Dimension 2 only (Errc::kUnsupportedDimension otherwise).
std::string export_svg(const SemigroupDocument& doc);

std::string render(const SemigroupDocument& doc, ExportFormat format);
void export_figure(const SemigroupDocument& doc, ExportFormat format,
                   const std::filesystem::path& out);

}  // namespace gnslab
