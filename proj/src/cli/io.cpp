#include "conesep/io.hpp"

#include "conesep/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace conesep::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw InputError(InputError::Kind::Schema, what); }

void check_fields(const Json& j, const std::set<std::string>& allowed, const std::string& where, bool strict) {
  if (!j.is_object()) schema(where + " must be an object");
  if (!strict) return;
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) schema("unknown field '" + key + "' in " + where);
  }
}

const Json& required(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) schema("missing field '" + key + "' in " + where);
  return j.at(key);
}

std::vector<Vector> vector_list(const Json& j, int dim, const std::string& where) {
  if (!j.is_array()) schema(where + " must be a list of vectors");
  std::vector<Vector> out;
  for (const Json& v : j) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim) {
      schema(where + ": every vector needs " + std::to_string(dim) + " coordinates");
    }
    Vector x(dim);
    for (int i = 0; i < dim; ++i) {
      if (!v[static_cast<std::size_t>(i)].is_number()) schema(where + ": coordinates must be numbers");
      x[i] = v[static_cast<std::size_t>(i)].get<double>();
    }
    out.push_back(std::move(x));
  }
  return out;
}

RegionKind kind_from_string(const std::string& s) {
  if (s == "convex") return RegionKind::Piece;
  if (s == "union") return RegionKind::Union;
  if (s == "complement") return RegionKind::Complement;
  if (s == "boundary") return RegionKind::Boundary;
  schema("unknown cone kind '" + s + "'");
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(InputError::Kind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw InputError(InputError::Kind::Parse,
                     path + ": invalid JSON", line, column);
  }
}

Instance parse_instance(const std::string& text, bool strict) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw InputError(InputError::Kind::Parse, "invalid JSON", line, column);
  }
  check_fields(j, {"dim", "norm", "cones", "options"}, "instance", strict);
  Instance inst;
  const Json& dim = required(j, "dim", "instance");
  if (!dim.is_number_integer() || dim.get<int>() < 1) schema("dim must be a positive integer");
  inst.dim = dim.get<int>();
  if (j.contains("norm")) {
    if (!j["norm"].is_string()) schema("norm must be a string");
    try {
      inst.norm = norm_kind_from_string(j["norm"].get<std::string>());
    } catch (const ConeError& e) {
      schema(e.what());
    }
  }
  const Json& cones = required(j, "cones", "instance");
  if (!cones.is_object() || cones.empty()) schema("cones must be a non-empty object");
  for (const auto& [name, c] : cones.items()) {
    const std::string where = "cone '" + name + "'";
    check_fields(c, {"kind", "pieces"}, where, strict);
    ConeSpec spec;
    const Json& kind = required(c, "kind", where);
    if (!kind.is_string()) schema(where + ": kind must be a string");
    spec.kind = kind_from_string(kind.get<std::string>());
    const Json& pieces = required(c, "pieces", where);
    if (!pieces.is_array() || pieces.empty()) schema(where + ": pieces must be a non-empty list");
    for (const Json& p : pieces) {
      check_fields(p, {"generators", "facets"}, where + " piece", strict);
      PieceSpec ps;
      ps.generators = vector_list(required(p, "generators", where + " piece"), inst.dim, where + " generators");
      if (p.contains("facets")) ps.facets = vector_list(p["facets"], inst.dim, where + " facets");
      spec.pieces.push_back(std::move(ps));
    }
    if (spec.kind != RegionKind::Union && spec.pieces.size() != 1) {
      schema(where + ": kind " + std::string(to_string(spec.kind)) + " takes exactly one piece");
    }
    inst.cones.emplace(name, std::move(spec));
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    check_fields(o, {"tol", "verify_samples", "seed", "resolution"}, "options", strict);
    auto positive = [&](const char* key) {
      if (!o[key].is_number() || !(o[key].get<double>() > 0)) schema(std::string("options.") + key + " must be positive");
      return o[key].get<double>();
    };
    if (o.contains("tol")) inst.options.tol = positive("tol");
    if (o.contains("resolution")) inst.options.resolution = positive("resolution");
    if (o.contains("verify_samples")) {
      if (!o["verify_samples"].is_number_integer() || o["verify_samples"].get<int>() < 0) {
        schema("options.verify_samples must be a non-negative integer");
      }
      inst.options.verify_samples = o["verify_samples"].get<int>();
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) schema("options.seed must be a non-negative integer");
      inst.options.seed = o["seed"].get<std::uint64_t>();
    }
  }
  return inst;
}

Instance load_instance(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw InputError(InputError::Kind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str(), strict);
  } catch (const InputError& e) {
    throw InputError(e.kind(), path + ": " + e.what(), e.line(), e.column());
  }
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) schema("expected a vector");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) schema("vector entries must be numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Json to_json(const Instance& inst) {
  Json j;
  j["dim"] = inst.dim;
  j["norm"] = std::string(to_string(inst.norm));
  Json cones = Json::object();
  for (const auto& [name, spec] : inst.cones) {
    Json c;
    c["kind"] = std::string(to_string(spec.kind));
    Json pieces = Json::array();
    for (const PieceSpec& p : spec.pieces) {
      Json pj;
      pj["generators"] = Json::array();
      for (const Vector& g : p.generators) pj["generators"].push_back(vector_json(g));
      if (p.facets) {
        pj["facets"] = Json::array();
        for (const Vector& f : *p.facets) pj["facets"].push_back(vector_json(f));
      }
      pieces.push_back(std::move(pj));
    }
    c["pieces"] = std::move(pieces);
    cones[name] = std::move(c);
  }
  j["cones"] = std::move(cones);
  Json o = Json::object();
  if (inst.options.tol) o["tol"] = *inst.options.tol;
  if (inst.options.verify_samples) o["verify_samples"] = *inst.options.verify_samples;
  if (inst.options.seed) o["seed"] = *inst.options.seed;
  if (inst.options.resolution) o["resolution"] = *inst.options.resolution;
  if (!o.empty()) j["options"] = std::move(o);
  return j;
}

namespace {

const ConeSpec& find_cone(const Instance& inst, const std::string& name) {
  const auto it = inst.cones.find(name);
  if (it == inst.cones.end()) schema("no cone named '" + name + "'");
  return it->second;
}

PolyCone piece_cone(const PieceSpec& p) {
  try {
    return make_polycone(p.generators, p.facets);
  } catch (const ConeError& e) {
    schema(e.what());
  }
}

}  // namespace

PolyCone build_polycone(const Instance& inst, const std::string& name) {
  const ConeSpec& spec = find_cone(inst, name);
  if (spec.kind != RegionKind::Piece) schema("cone '" + name + "' must be of kind convex");
  return piece_cone(spec.pieces.front());
}

ConeRegion build_region(const Instance& inst, const std::string& name) {
  const ConeSpec& spec = find_cone(inst, name);
  try {
    switch (spec.kind) {
      case RegionKind::Piece: return ConeRegion::piece(piece_cone(spec.pieces.front()));
      case RegionKind::Complement: return ConeRegion::complement(piece_cone(spec.pieces.front()));
      case RegionKind::Boundary: return ConeRegion::boundary(piece_cone(spec.pieces.front()));
      case RegionKind::Union: {
        std::vector<ConeRegion> children;
        for (const PieceSpec& p : spec.pieces) children.push_back(ConeRegion::piece(piece_cone(p)));
        return ConeRegion::union_of(std::move(children));
      }
    }
  } catch (const ConeError& e) {
    if (e.kind() == ErrorKind::DimensionTooHigh) throw;
    schema("cone '" + name + "': " + e.what());
  }
  schema("cone '" + name + "': unknown kind");
}

Json to_json(const FamilyFlags& f) {
  return Json{{"bp", f.bp}, {"lin", f.lin}, {"cor_a_plus", f.cor_a_plus}, {"a_sharp", f.a_sharp}, {"aw_sharp", f.aw_sharp}};
}

Json to_json(const SeparationCertificate& c) {
  Json j;
  j["orientation"] = std::string(to_string(c.orientation));
  j["x_star"] = vector_json(c.x_star);
  j["alpha_interval"] = Json::array({c.lo, c.hi});
  j["alpha"] = c.alpha;
  j["distance"] = c.distance;
  j["witnesses"] = Json{{"inner", vector_json(c.witness_inner)}, {"outer", vector_json(c.witness_outer)}};
  j["family"] = to_json(c.family);
  j["iterations"] = c.iterations;
  return j;
}

SeparationCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) schema("certificate must be an object");
  SeparationCertificate c;
  const std::string o = required(j, "orientation", "certificate").get<std::string>();
  if (o == "CfromK") {
    c.orientation = Orientation::CfromK;
  } else if (o == "KfromC") {
    c.orientation = Orientation::KfromC;
  } else {
    schema("unknown orientation '" + o + "'");
  }
  c.x_star = vector_from_json(required(j, "x_star", "certificate"));
  const Json& iv = required(j, "alpha_interval", "certificate");
  if (!iv.is_array() || iv.size() != 2) schema("alpha_interval must have two entries");
  c.lo = iv[0].get<double>();
  c.hi = iv[1].get<double>();
  c.alpha = required(j, "alpha", "certificate").get<double>();
  if (j.contains("distance")) c.distance = j["distance"].get<double>();
  if (j.contains("witnesses")) {
    c.witness_inner = vector_from_json(j["witnesses"].at("inner"));
    c.witness_outer = vector_from_json(j["witnesses"].at("outer"));
  }
  if (j.contains("family")) {
    const Json& f = j["family"];
    c.family.bp = f.value("bp", false);
    c.family.lin = f.value("lin", false);
    c.family.cor_a_plus = f.value("cor_a_plus", false);
    c.family.a_sharp = f.value("a_sharp", false);
    c.family.aw_sharp = f.value("aw_sharp", false);
  }
  if (j.contains("iterations")) c.iterations = j["iterations"].get<int>();
  return c;
}

Json to_json(const VerificationReport& r) {
  return Json{{"inner_samples", r.inner_samples},       {"outer_samples", r.outer_samples},
              {"violations", r.violations},             {"min_inner_margin", r.min_inner_margin},
              {"min_outer_margin", r.min_outer_margin}, {"passed", r.passed}};
}

Json to_json(const BaseCertificate& b) {
  Json j;
  j["kind"] = std::string(to_string(b.kind));
  j["distance"] = b.distance;
  if (b.x_star.size() > 0) j["x_star"] = vector_json(b.x_star);
  if (b.kind == BaseKind::WellBased) j["alpha"] = b.alpha;
  if (!b.base_vertices.empty()) {
    j["base_vertices"] = Json::array();
    for (const Vector& v : b.base_vertices) j["base_vertices"].push_back(vector_json(v));
  }
  if (!b.witness_rays.empty()) {
    Json w;
    w["rays"] = Json::array();
    for (const Vector& v : b.witness_rays) w["rays"].push_back(vector_json(v));
    w["weights"] = b.witness_weights;
    w["point"] = vector_json(b.witness_point);
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const BoundaryReport& r) {
  return Json{{"full", r.full},
              {"closures", r.closures},
              {"bd_bd", r.bd_bd},
              {"bd_cl", r.bd_cl},
              {"cl_bd", r.cl_bd},
              {"intersection_trivial", r.intersection_trivial},
              {"consistent", r.consistent},
              {"distances", Json{{"full", r.distances[0]}, {"bd_bd", r.distances[1]}, {"bd_cl", r.distances[2]}, {"cl_bd", r.distances[3]}}}};
}

Json to_json(const OracleVerdict& v) {
  return Json{{"positive", v.positive}, {"x_star", vector_json(v.x_star)}, {"lo", v.lo},
              {"hi", v.hi},             {"margin", v.margin},                {"covering_bound", v.bound}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace conesep::io
