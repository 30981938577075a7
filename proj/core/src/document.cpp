#include "gnslab/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gnslab/error.hpp"

namespace gnslab {

using nlohmann::json;

namespace {

PointSet as_points(std::span<const std::int64_t> values) {
  PointSet out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(Point{v});
  return out;
}

std::vector<std::int64_t> generator_list(const NumericalSemigroup& s) {
  return {s.generators().begin(), s.generators().end()};
}

WilfVariant variant_from(const std::string& name) {
  for (auto v : {WilfVariant::kClassical, WilfVariant::kGeneralized, WilfVariant::kEquivalentForm}) {
    if (to_string(v) == name) return v;
  }
  throw Error(Errc::kParseError, "unknown wilf variant '" + name + "'");
}

json points_to_json(const PointSet& points) {
  json arr = json::array();
  for (const auto& p : points) {
    json row = json::array();
    for (int i = 0; i < p.dim(); ++i) row.push_back(p[i]);
    arr.push_back(std::move(row));
  }
  return arr;
}

PointSet points_from_json(const json& arr, int dim) {
  PointSet out;
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(Errc::kParseError, "point " + row.dump() + " does not have " +
                                         std::to_string(dim) + " coordinates");
    }
    out.push_back(Point(row.get<std::vector<std::int64_t>>()));
  }
  return out;
}

json wilf_to_json(const WilfReport& w) {
  return {{"variant", std::string(to_string(w.variant))},
          {"lhs", w.lhs},
          {"rhs", w.rhs},
          {"holds", w.holds},
          {"margin", w.margin},
          {"sufficient_condition", w.sufficient_condition}};
}

WilfReport wilf_from_json(const json& j) {
  WilfReport w;
  w.variant = variant_from(j.at("variant").get<std::string>());
  w.lhs = j.at("lhs").get<std::int64_t>();
  w.rhs = j.at("rhs").get<std::int64_t>();
  w.holds = j.at("holds").get<bool>();
  w.margin = j.at("margin").get<std::int64_t>();
  w.sufficient_condition = j.at("sufficient_condition").get<bool>();
  return w;
}

json invariants_to_json(const InvariantRecord& r) {
  json j = {{"dimension", r.dimension}, {"e", r.e}, {"g", r.g}, {"t", r.t},
            {"n", r.n},                 {"c", r.c}, {"tau", r.tau}};
  if (r.multiplicity) j["multiplicity"] = *r.multiplicity;
  if (r.frobenius) j["frobenius"] = *r.frobenius;
  return j;
}

InvariantRecord invariants_from_json(const json& j) {
  InvariantRecord r;
  r.dimension = j.at("dimension").get<std::int64_t>();
  r.e = j.at("e").get<std::int64_t>();
  r.g = j.at("g").get<std::int64_t>();
  r.t = j.at("t").get<std::int64_t>();
  r.n = j.at("n").get<std::int64_t>();
  r.c = j.at("c").get<std::int64_t>();
  r.tau = j.at("tau").get<std::int64_t>();
  if (j.contains("multiplicity")) r.multiplicity = j["multiplicity"].get<std::int64_t>();
  if (j.contains("frobenius")) r.frobenius = j["frobenius"].get<std::int64_t>();
  return r;
}

}  // namespace

SemigroupDocument make_document(const NumericalSemigroup& s) {
  SemigroupDocument doc;
  doc.kind = DocumentKind::kNumerical;
  doc.dimension = 1;
  doc.generators = as_points(s.generators());
  doc.gaps = as_points(s.gaps());
  doc.invariants = invariants(s);
  doc.wilf = wilf_check(s);
  doc.provenance = {"raw", {generator_list(s)}, 1};
  return doc;
}

SemigroupDocument make_document(const Gns& s, const GnsProfile& profile, Provenance provenance) {
  SemigroupDocument doc;
  doc.kind = DocumentKind::kGns;
  doc.dimension = s.dimension();
  doc.generators = profile.generators;
  doc.gaps.assign(s.gaps().begin(), s.gaps().end());
  doc.invariants = profile.invariants;
  doc.wilf = profile.wilf.generalized;
  doc.wilf_equivalent = profile.wilf.equivalent;
  provenance.dimension = s.dimension();
  doc.provenance = std::move(provenance);
  return doc;
}

SemigroupDocument make_document(const Gns& s, Provenance provenance) {
  return make_document(s, analyze(s), std::move(provenance));
}

SemigroupDocument make_document(const StripeSpec& spec) {
  return make_document(build_stripe(spec), {"stripe", {generator_list(spec.base)}, spec.dimension});
}

SemigroupDocument make_document(const GradedSpec& spec) {
  return make_document(build_graded(spec), {"graded", {generator_list(spec.base)}, spec.dimension});
}

SemigroupDocument make_document(const AxisSpec& spec) {
  Provenance p{"axis", {}, spec.dimension()};
  for (const auto& c : spec.components) p.bases.push_back(generator_list(c));
  return make_document(build_axis(spec), std::move(p));
}

std::string serialize(const SemigroupDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind == DocumentKind::kNumerical ? "numerical" : "gns";
  j["dimension"] = doc.dimension;
  j["generators"] = points_to_json(doc.generators);
  j["gaps"] = points_to_json(doc.gaps);
  j["invariants"] = invariants_to_json(doc.invariants);
  j["wilf"] = wilf_to_json(doc.wilf);
  if (doc.wilf_equivalent) j["wilf_equivalent"] = wilf_to_json(*doc.wilf_equivalent);
  j["provenance"] = {{"class", doc.provenance.construction},
                     {"bases", doc.provenance.bases},
                     {"dimension", doc.provenance.dimension}};
  return j.dump(2) + "\n";
}

SemigroupDocument parse_document(std::string_view text) {
  try {
    const json j = json::parse(text);
    SemigroupDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kDocumentSchemaVersion) {
      throw Error(Errc::kParseError,
                  "unsupported schema_version " + std::to_string(doc.schema_version));
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "numerical") {
      doc.kind = DocumentKind::kNumerical;
    } else if (kind == "gns") {
      doc.kind = DocumentKind::kGns;
    } else {
      throw Error(Errc::kParseError, "unknown kind '" + kind + "'");
    }
    doc.dimension = j.at("dimension").get<int>();
    if (doc.dimension < 1 || doc.dimension > kMaxDimension) {
      throw Error(Errc::kParseError, "dimension out of range");
    }
    doc.generators = points_from_json(j.at("generators"), doc.dimension);
    doc.gaps = points_from_json(j.at("gaps"), doc.dimension);
    doc.invariants = invariants_from_json(j.at("invariants"));
    doc.wilf = wilf_from_json(j.at("wilf"));
    if (j.contains("wilf_equivalent")) doc.wilf_equivalent = wilf_from_json(j["wilf_equivalent"]);
    const auto& p = j.at("provenance");
    doc.provenance.construction = p.at("class").get<std::string>();
    doc.provenance.bases = p.at("bases").get<std::vector<std::vector<std::int64_t>>>();
    doc.provenance.dimension = p.at("dimension").get<int>();
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::kParseError, std::string("malformed document: ") + e.what());
  }
}

SemigroupDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::kInvalidArgument, "write failed for " + path.string());
}

Gns to_gns(const SemigroupDocument& doc) { return Gns::from_gaps(doc.dimension, doc.gaps); }

}  // namespace gnslab
