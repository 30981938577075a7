#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnslab/constructions.hpp"
#include "gnslab/gns.hpp"
#include "gnslab/numerical_semigroup.hpp"
#include "gnslab/wilf.hpp"

namespace gnslab {

inline constexpr int kDocumentSchemaVersion = 1;

enum class DocumentKind { kNumerical, kGns };

/// Where a document's semigroup came from: "raw" or one of the three
/// constructions with the generator lists of their base semigroups.
struct Provenance {
  std::string construction = "raw";  // raw | stripe | graded | axis
  std::vector<std::vector<std::int64_t>> bases;
  int dimension = 1;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Self-describing record of one semigroup and its invariants. Numerical
/// semigroups are stored as points of N^1.
struct SemigroupDocument {
  int schema_version = kDocumentSchemaVersion;
  DocumentKind kind = DocumentKind::kGns;
  int dimension = 1;
  PointSet generators;
  PointSet gaps;
  InvariantRecord invariants;
  WilfReport wilf;
  /// Only for GNS documents.
  std::optional<WilfReport> wilf_equivalent;
  Provenance provenance;

  friend bool operator==(const SemigroupDocument&, const SemigroupDocument&) = default;
};

SemigroupDocument make_document(const NumericalSemigroup& s);
SemigroupDocument make_document(const Gns& s, const GnsProfile& profile, Provenance provenance);
SemigroupDocument make_document(const Gns& s, Provenance provenance = {});

SemigroupDocument make_document(const StripeSpec& spec);
SemigroupDocument make_document(const GradedSpec& spec);
SemigroupDocument make_document(const AxisSpec& spec);

/// JSON text, stable key order, points as integer arrays.
std::string serialize(const SemigroupDocument& doc);
/// Throws Errc::kParseError on malformed input or an unknown schema version.
SemigroupDocument parse_document(std::string_view text);

SemigroupDocument read_document(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Rebuilds the Gns a document describes from its gap list.
Gns to_gns(const SemigroupDocument& doc);

}  // namespace gnslab
