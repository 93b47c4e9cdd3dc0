#include "conesep/cli.hpp"

#include "conesep/error.hpp"
#include "conesep/io.hpp"
#include "conesep/svg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace conesep::cli {

namespace {

using io::Instance;
using io::InputError;
using io::Json;

struct Common {
  bool lenient = false;
  std::string output;
};

struct PairOpts {
  std::string pair;
  std::optional<double> tol;
  std::optional<int> verify_samples;
  std::optional<std::uint64_t> seed;
};

struct Names {
  std::string c, k;
};

Names split_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size()) {
    throw InputError(InputError::Kind::Schema, "--pair expects two names separated by a comma, got '" + s + "'");
  }
  return {s.substr(0, comma), s.substr(comma + 1)};
}

void require_euclidean(const Instance& inst) {
  if (inst.norm != NormKind::Euclidean) {
    throw ConeError(ErrorKind::InvalidArgument, "the separation engine supports the Euclidean norm only");
  }
}

SeparationOptions engine_options(const Instance& inst, const PairOpts& p) {
  SeparationOptions o;
  o.tol = p.tol.value_or(inst.options.tol.value_or(1e-9));
  return o;
}

int samples_of(const Instance& inst, const PairOpts& p) {
  return p.verify_samples.value_or(inst.options.verify_samples.value_or(1000));
}

std::uint64_t seed_of(const Instance& inst, const PairOpts& p) { return p.seed.value_or(inst.options.seed.value_or(1)); }

Json names_json(const Names& n) { return Json::array({n.c, n.k}); }

// A verified one-sided certificate with its sample report.
Json certified(const SeparationCertificate& cert, const ConeRegion& c, const ConeRegion& k, int samples,
               std::uint64_t seed, bool& passed) {
  const VerificationReport rep = verify_certificate(cert, c, k, samples, seed);
  passed = rep.passed;
  Json j = io::to_json(cert);
  j["verification"] = io::to_json(rep);
  return j;
}

Json separate_document(const Instance& inst, const std::string& mode, const PairOpts& p, int& code) {
  require_euclidean(inst);
  const Names n = split_pair(p.pair);
  const ConeRegion c = io::build_region(inst, n.c);
  const ConeRegion k = io::build_region(inst, n.k);
  const SeparationOptions opt = engine_options(inst, p);
  const int samples = samples_of(inst, p);
  const std::uint64_t seed = seed_of(inst, p);

  Json doc;
  doc["command"] = "separate";
  doc["mode"] = mode;
  doc["pair"] = names_json(n);
  doc["verdict"] = nullptr;

  auto inconclusive = [&](const std::string& why) {
    doc["verdict"] = "inconclusive";
    doc["reason"] = why;
    code = kInconclusive;
    return doc;
  };

  try {
    if (mode == "bidir") {
      const BidirectionalResult r = separate_convex_bidirectional(c, k, opt);
      bool ok = true;
      bool passed = true;
      if (r.cfromk) {
        doc["cfromk"] = certified(*r.cfromk, c, k, samples, seed, passed);
        ok = ok && passed;
      }
      if (r.kfromc) {
        doc["kfromc"] = certified(*r.kfromc, c, k, samples, seed, passed);
        ok = ok && passed;
      }
      if (!ok) return inconclusive("a certificate failed sample verification");
      if (r.linear) doc["linear"] = io::vector_json(*r.linear);
      doc["verdict"] = r.cfromk && r.kfromc ? "separated" : "not_separated";
      code = r.cfromk && r.kfromc ? kSeparated : kNotSeparated;
      return doc;
    }
    std::optional<SeparationCertificate> cert;
    if (mode == "nonsym") {
      cert = separate_nonsym(c, k, opt);
    } else {
      cert = separate_sym(c, k, opt);
    }
    if (!cert) {
      doc["verdict"] = "not_separated";
      if (mode == "nonsym") {
        DistanceOptions d;
        d.tol = opt.tol;
        doc["distance"] = body_distance(body(c, false), body(k, true), d).distance;
      }
      code = kNotSeparated;
      return doc;
    }
    bool passed = false;
    Json cj = certified(*cert, c, k, samples, seed, passed);
    doc["verification"] = cj["verification"];
    cj.erase("verification");
    doc["certificate"] = std::move(cj);
    if (!passed) return inconclusive("certificate failed sample verification");
    doc["verdict"] = "separated";
    code = kSeparated;
    return doc;
  } catch (const ConeError& e) {
    if (e.kind() != ErrorKind::Inconclusive) throw;
    return inconclusive(e.what());
  }
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.output.empty() || common.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(common.output);
  if (!f) throw InputError(InputError::Kind::Schema, "cannot write '" + common.output + "'");
  f << text;
}

int threads_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CONESEP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(n);
}

// Exit code of an exception escaping a command.
int error_code(std::ostream& err) {
  try {
    throw;
  } catch (const InputError& e) {
    if (e.kind() == InputError::Kind::Parse) {
      if (e.line() > 0) err << "parse error at line " << e.line() << ", column " << e.column() << ": ";
      else err << "parse error: ";
      err << e.what() << "\n";
      return kParseError;
    }
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const ConeError& e) {
    err << "engine error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Inconclusive ? kInconclusive : kEngineError;
  } catch (const Json::exception& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const std::exception& e) {
    err << "engine error: " << e.what() << "\n";
    return kEngineError;
  }
}

Json certificate_document(const std::string& path, std::optional<std::string>& pair) {
  const Json j = io::read_json_file(path);
  if (j.is_object() && j.contains("pair") && j["pair"].is_array() && j["pair"].size() == 2) {
    pair = j["pair"][0].get<std::string>() + "," + j["pair"][1].get<std::string>();
  }
  if (j.is_object() && j.contains("certificate")) return j["certificate"];
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bishop-Phelps cone separation certificates", "conesep"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  std::string instance_path;
  app.add_flag("--lenient", common.lenient, "Ignore unknown instance fields");
  app.add_option("-o,--output", common.output, "Write the document to a file");

  auto add_instance = [&](CLI::App* sub) { sub->add_option("instance", instance_path, "Instance file")->required(); };
  auto add_pair = [](CLI::App* sub, PairOpts& p) {
    sub->add_option("--pair", p.pair, "Cone names C,K")->required();
    sub->add_option("--tol", p.tol, "Distance tolerance");
    sub->add_option("--verify-samples", p.verify_samples, "Samples per side for verification");
    sub->add_option("--seed", p.seed, "Sampling seed");
  };

  PairOpts sep;
  std::string mode = "nonsym";
  std::string alpha_policy = "midpoint";
  CLI::App* separate = app.add_subcommand("separate", "Certify separation of two cones");
  add_instance(separate);
  add_pair(separate, sep);
  separate->add_option("--mode", mode)->check(CLI::IsMember({"nonsym", "sym", "bidir"}));
  separate->add_option("--alpha-policy", alpha_policy)->check(CLI::IsMember({"midpoint"}));

  std::string base_cone;
  double base_tol = 1e-9;
  CLI::App* base = app.add_subcommand("base", "Well-based and convex-base certificates");
  add_instance(base);
  base->add_option("--cone", base_cone)->required();
  base->add_option("--tol", base_tol);

  PairOpts interp;
  std::string inner, outer;
  CLI::App* interpolate_cmd = app.add_subcommand("interpolate", "Bishop-Phelps cone between C and K");
  add_instance(interpolate_cmd);
  interpolate_cmd->add_option("--inner", inner)->required();
  interpolate_cmd->add_option("--outer", outer)->required();
  interpolate_cmd->add_option("--tol", interp.tol);
  interpolate_cmd->add_option("--verify-samples", interp.verify_samples);
  interpolate_cmd->add_option("--seed", interp.seed);

  PairOpts chk;
  std::string report = "bd-equivalence";
  CLI::App* check = app.add_subcommand("check", "Boundary equivalence report");
  add_instance(check);
  add_pair(check, chk);
  check->add_option("--report", report)->check(CLI::IsMember({"bd-equivalence"}));

  std::string render_out, render_cert, render_pair;
  CLI::App* render = app.add_subcommand("render", "Planar SVG figure");
  add_instance(render);
  render->add_option("--out", render_out)->required();
  render->add_option("--certificate", render_cert);
  render->add_option("--pair", render_pair);

  PairOpts orc;
  std::optional<double> resolution;
  double direction_resolution = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force sampling check");
  add_instance(oracle);
  add_pair(oracle, orc);
  oracle->add_option("--resolution", resolution, "Angular step in degrees");
  oracle->add_option("--direction-resolution", direction_resolution);

  PairOpts ver;
  std::string verify_cert;
  CLI::App* verify = app.add_subcommand("verify", "Re-verify a certificate by sampling");
  add_instance(verify);
  verify->add_option("--certificate", verify_cert)->required();
  verify->add_option("--pair", ver.pair);
  verify->add_option("--verify-samples", ver.verify_samples);
  verify->add_option("--seed", ver.seed);

  PairOpts bat;
  std::vector<std::string> batch_files;
  std::string batch_mode = "nonsym";
  CLI::App* batch = app.add_subcommand("batch", "Separate the same pair in many instance files");
  batch->add_option("instances", batch_files)->required();
  add_pair(batch, bat);
  batch->add_option("--mode", batch_mode)->check(CLI::IsMember({"nonsym", "sym", "bidir"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kSchemaError;
  }

  try {
    if (*batch) {
      std::vector<Json> docs(batch_files.size());
      std::vector<int> codes(batch_files.size(), 0);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < batch_files.size(); i = next++) {
          std::ostringstream diag;
          try {
            const Instance inst = io::load_instance(batch_files[i], !common.lenient);
            docs[i] = separate_document(inst, batch_mode, bat, codes[i]);
          } catch (...) {
            codes[i] = error_code(diag);
            docs[i] = Json{{"error", diag.str()}};
          }
        }
      };
      const int n = std::min<int>(threads_cap(), static_cast<int>(batch_files.size()));
      std::vector<std::thread> pool;
      for (int t = 1; t < n; ++t) pool.emplace_back(worker);
      worker();
      for (std::thread& t : pool) t.join();
      Json all = Json::array();
      for (std::size_t i = 0; i < docs.size(); ++i) {
        all.push_back(Json{{"instance", batch_files[i]}, {"exit", codes[i]}, {"document", docs[i]}});
      }
      emit(common, io::dump(all), out);
      return *std::max_element(codes.begin(), codes.end());
    }

    const Instance inst = io::load_instance(instance_path, !common.lenient);

    if (*separate) {
      int code = kEngineError;
      const Json doc = separate_document(inst, mode, sep, code);
      emit(common, io::dump(doc), out);
      return code;
    }

    if (*base) {
      require_euclidean(inst);
      const ConeRegion c = io::build_region(inst, base_cone);
      const BaseCertificate wb = is_well_based(c, base_tol);
      const BaseCertificate cb = has_convex_base(c, base_tol);
      Json doc;
      doc["command"] = "base";
      doc["cone"] = base_cone;
      doc["well_based"] = io::to_json(wb);
      doc["convex_base"] = io::to_json(cb);
      emit(common, io::dump(doc), out);
      return wb.kind == BaseKind::WellBased ? kSeparated : kNotSeparated;
    }

    if (*interpolate_cmd) {
      require_euclidean(inst);
      const ConeRegion c = io::build_region(inst, inner);
      const PolyCone k = io::build_polycone(inst, outer);
      const std::optional<Interpolation> r =
          interpolate(c, k, engine_options(inst, interp), samples_of(inst, interp), seed_of(inst, interp));
      Json doc;
      doc["command"] = "interpolate";
      doc["pair"] = Json::array({inner, outer});
      if (!r) {
        doc["verdict"] = "not_separated";
        emit(common, io::dump(doc), out);
        return kNotSeparated;
      }
      doc["verdict"] = r->check.passed ? "separated" : "inconclusive";
      doc["gamma"] = Json{{"x_star", io::vector_json(r->gamma.functional.x_star)},
                          {"alpha", r->gamma.functional.alpha},
                          {"family", io::to_json(r->gamma.family)}};
      doc["certificate"] = io::to_json(r->certificate);
      doc["check"] = Json{{"inner_samples", r->check.inner_samples},
                          {"gamma_samples", r->check.gamma_samples},
                          {"violations", r->check.violations},
                          {"passed", r->check.passed}};
      emit(common, io::dump(doc), out);
      return r->check.passed ? kSeparated : kInconclusive;
    }

    if (*check) {
      require_euclidean(inst);
      const Names n = split_pair(chk.pair);
      const BoundaryReport r = boundary_equivalence_report(io::build_region(inst, n.c), io::build_region(inst, n.k),
                                                           engine_options(inst, chk).tol);
      Json doc;
      doc["command"] = "check";
      doc["report"] = report;
      doc["pair"] = names_json(n);
      doc["result"] = io::to_json(r);
      emit(common, io::dump(doc), out);
      if (!r.consistent) return kInconclusive;
      return r.full ? kSeparated : kNotSeparated;
    }

    if (*oracle) {
      require_euclidean(inst);
      const Names n = split_pair(orc.pair);
      const double res = resolution.value_or(inst.options.resolution.value_or(0.25));
      const OracleVerdict v =
          oracle_separation(io::build_region(inst, n.c), io::build_region(inst, n.k), res, direction_resolution);
      Json doc;
      doc["command"] = "oracle";
      doc["pair"] = names_json(n);
      doc["resolution"] = res;
      doc["result"] = io::to_json(v);
      emit(common, io::dump(doc), out);
      return v.positive ? kSeparated : kNotSeparated;
    }

    if (*verify) {
      require_euclidean(inst);
      std::optional<std::string> doc_pair;
      const SeparationCertificate cert = io::certificate_from_json(certificate_document(verify_cert, doc_pair));
      if (ver.pair.empty()) {
        if (!doc_pair) throw InputError(InputError::Kind::Schema, "no --pair given and none recorded in the certificate");
        ver.pair = *doc_pair;
      }
      const Names n = split_pair(ver.pair);
      const VerificationReport rep = verify_certificate(cert, io::build_region(inst, n.c), io::build_region(inst, n.k),
                                                        samples_of(inst, ver), seed_of(inst, ver));
      Json doc;
      doc["command"] = "verify";
      doc["pair"] = names_json(n);
      doc["verification"] = io::to_json(rep);
      emit(common, io::dump(doc), out);
      return rep.passed ? kSeparated : kNotSeparated;
    }

    if (*render) {
      svg::Figure fig;
      std::vector<std::string> names;
      for (const auto& [name, spec] : inst.cones) {
        fig.cones.push_back({name, io::build_region(inst, name)});
        names.push_back(name);
      }
      std::optional<std::string> doc_pair;
      if (!render_cert.empty()) {
        fig.certificate = io::certificate_from_json(certificate_document(render_cert, doc_pair));
      }
      if (render_pair.empty() && doc_pair) render_pair = *doc_pair;
      if (!render_pair.empty()) {
        const Names n = split_pair(render_pair);
        auto index = [&](const std::string& s) {
          const auto it = std::find(names.begin(), names.end(), s);
          if (it == names.end()) throw InputError(InputError::Kind::Schema, "no cone named '" + s + "'");
          return static_cast<std::size_t>(it - names.begin());
        };
        std::size_t a = index(n.c), b = index(n.k);
        if (fig.certificate && fig.certificate->orientation == Orientation::KfromC) std::swap(a, b);
        fig.pair = std::make_pair(a, b);
      }
      const std::string text = svg::render(fig);
      if (render_out == "-") {
        out << text;
      } else {
        std::ofstream f(render_out);
        if (!f) throw InputError(InputError::Kind::Schema, "cannot write '" + render_out + "'");
        f << text;
      }
      return 0;
    }
  } catch (...) {
    return error_code(err);
  }
  return kEngineError;
}

}  // namespace conesep::cli
