#pragma once

#include "conesep/basis.hpp"
#include "conesep/separation.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace conesep::io {

using Json = nlohmann::ordered_json;

struct PieceSpec {
  std::vector<Vector> generators;
  std::optional<std::vector<Vector>> facets;
  bool operator==(const PieceSpec&) const = default;
};

struct ConeSpec {
  RegionKind kind = RegionKind::Piece;
  std::vector<PieceSpec> pieces;
  bool operator==(const ConeSpec&) const = default;
};

struct InstanceOptions {
  std::optional<double> tol;
  std::optional<int> verify_samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> resolution;
  bool operator==(const InstanceOptions&) const = default;
};

struct Instance {
  int dim = 0;
  NormKind norm = NormKind::Euclidean;
  std::map<std::string, ConeSpec> cones;
  InstanceOptions options;
  bool operator==(const Instance&) const = default;
};

/// Malformed input. Parse errors carry a 1-based line and column.
class InputError : public std::runtime_error {
 public:
  enum class Kind { Parse, Schema };
  InputError(Kind kind, const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}
  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Strict mode rejects unknown fields at every level.
Instance parse_instance(const std::string& text, bool strict = true);
Instance load_instance(const std::string& path, bool strict = true);
Json read_json_file(const std::string& path);

Json to_json(const Instance& instance);

/// Builds the named cone; schema errors for missing names or invalid data.
ConeRegion build_region(const Instance& instance, const std::string& name);
/// Single-piece cone (kind convex) as a PolyCone.
PolyCone build_polycone(const Instance& instance, const std::string& name);

Json vector_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json to_json(const FamilyFlags& f);
Json to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const Json& j);
Json to_json(const VerificationReport& r);
Json to_json(const BaseCertificate& b);
Json to_json(const BoundaryReport& r);
Json to_json(const OracleVerdict& v);

std::string dump(const Json& j);

}  // namespace conesep::io
