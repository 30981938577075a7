#include "gnslab/export.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "gnslab/error.hpp"

namespace gnslab {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "svg") return ExportFormat::kSvg;
  throw Error(Errc::kParseError, "unknown export format '" + std::string(name) + "'");
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::kGap: return "gap";
    case PointClass::kGenerator: return "generator";
    case PointClass::kElement: return "element";
  }
  return "element";
}

Point bounding_corner(const SemigroupDocument& doc) {
  Point corner(doc.dimension);
  for (const auto* set : {&doc.gaps, &doc.generators}) {
    for (const auto& p : *set) {
      for (int i = 0; i < doc.dimension; ++i) corner.set(i, std::max(corner[i], p[i]));
    }
  }
  for (int i = 0; i < doc.dimension; ++i) corner.set(i, corner[i] + 1);
  return corner;
}

namespace {

class Classifier {
 public:
  explicit Classifier(const SemigroupDocument& doc)
      : gaps_(doc.gaps.begin(), doc.gaps.end()), gens_(doc.generators.begin(), doc.generators.end()) {}

  PointClass operator()(const Point& p) const {
    if (gaps_.contains(p)) return PointClass::kGap;
    if (gens_.contains(p)) return PointClass::kGenerator;
    return PointClass::kElement;
  }

 private:
  std::unordered_set<Point, PointHash> gaps_;
  std::unordered_set<Point, PointHash> gens_;
};

// Every point of the box [0, corner], graded-lex.
PointSet box(const Point& corner) {
  PointSet out;
  Point p(corner.dim());
  for (;;) {
    out.push_back(p);
    int i = 0;
    while (i < corner.dim() && p[i] == corner[i]) p.set(i++, 0);
    if (i == corner.dim()) break;
    p.set(i, p[i] + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view fill_of(PointClass c) {
  switch (c) {
    case PointClass::kGap: return "#d62728";
    case PointClass::kGenerator: return "#7f7f7f";
    case PointClass::kElement: return "#1f77b4";
  }
  return "#1f77b4";
}

}  // namespace

std::string export_csv(const SemigroupDocument& doc) {
  std::ostringstream out;
  const int d = doc.dimension;
  if (d == 1) {
    out << "x";
  } else if (d == 2) {
    out << "x,y";
  } else {
    for (int i = 1; i <= d; ++i) out << (i > 1 ? "," : "") << 'x' << i;
  }
  out << ",class\n";
  const Classifier classify(doc);
  for (const auto& p : box(bounding_corner(doc))) {
    for (int i = 0; i < d; ++i) out << p[i] << ',';
    out << to_string(classify(p)) << '\n';
  }
  return out.str();
}

std::string export_svg(const SemigroupDocument& doc) {
  if (doc.dimension != 2) {
    throw Error(Errc::kUnsupportedDimension,
                "svg export needs dimension 2, got " + std::to_string(doc.dimension));
  }
  const Point corner = bounding_corner(doc);
  constexpr int kCell = 24;
  constexpr int kPad = 30;
  const auto w = corner[0] * kCell + 2 * kPad;
  const auto h = corner[1] * kCell + 2 * kPad;
  // y grows upwards
  auto sx = [&](std::int64_t x) { return kPad + x * kCell; };
  auto sy = [&](std::int64_t y) { return h - kPad - y * kCell; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#dddddd\">\n";
  for (std::int64_t x = 0; x <= corner[0]; ++x) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x) << "\" y2=\""
        << sy(corner[1]) << "\"/>\n";
  }
  for (std::int64_t y = 0; y <= corner[1]; ++y) {
    out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(corner[0])
        << "\" y2=\"" << sy(y) << "\"/>\n";
  }
  out << "</g>\n<g>\n";
  const Classifier classify(doc);
  for (const auto& p : box(corner)) {
    const auto c = classify(p);
    out << "<circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"" << kCell / 4
        << "\" fill=\"" << fill_of(c) << "\"><title>(" << p[0] << "," << p[1] << ") "
        << to_string(c) << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render(const SemigroupDocument& doc, ExportFormat format) {
  switch (format) {
    case ExportFormat::kJson: return serialize(doc);
    case ExportFormat::kCsv: return export_csv(doc);
    case ExportFormat::kSvg: return export_svg(doc);
  }
  return serialize(doc);
}

void export_figure(const SemigroupDocument& doc, ExportFormat format,
                   const std::filesystem::path& out) {
  write_text(out, render(doc, format));
}

}  // namespace gnslab
