#include "strongcp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string_view>

#include "strongcp/abstract_system.hpp"
#include "strongcp/errors.hpp"
#include "strongcp/families.hpp"
#include "strongcp/generators.hpp"
#include "strongcp/hyperplane.hpp"
#include "strongcp/io.hpp"
#include "strongcp/polytope.hpp"
#include "strongcp/svg.hpp"

namespace strongcp::cli {

namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kSchemaVersion = "1";

class Digest {
 public:
  Digest& add(std::string_view part) {
    for (unsigned char c : part) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // part separator
    hash_ *= 0x100000001b3ULL;
    return *this;
  }
  std::string hex() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return std::string("fnv1a64:") + buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json number(double v) { return v; }
Json number(std::int64_t v) { return v; }
Json number(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return io::format_number(v);
}

template <CoordinateScalar Scalar>
Json vector_json(const Vector<Scalar>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v[i]));
  return out;
}

Json coords_json(const std::vector<std::string>& tokens) {
  Json out = Json::array();
  for (const auto& t : tokens) out.push_back(t);
  return out;
}

struct FamilyInput {
  std::string spec;
  std::string normals_text;  // contents of the custom normals file, if any
};

FamilyInput read_family_input(const std::string& spec) {
  FamilyInput in{spec, {}};
  constexpr std::string_view kCustom = "custom:";
  if (spec.rfind(kCustom, 0) == 0) in.normals_text = io::read_text(spec.substr(kCustom.size()));
  return in;
}

template <CoordinateScalar Scalar>
OrientationFamily<Scalar> build_family(const FamilyInput& in, int d) {
  const auto& spec = in.spec;
  if (spec == "axis-box") return axis_box_family<Scalar>(d);
  if (spec == "skyline") return skyline_family<Scalar>(d);
  if (spec == "orthant") return orthant_family<Scalar>(d);
  if (spec == "downward-triangle") {
    if (d != 2) throw DimensionMismatch("downward-triangle family is planar, points have d=" +
                                        std::to_string(d));
    if constexpr (is_exact_v<Scalar>) {
      throw InvalidArgument("downward-triangle family has irrational normals; drop --exact");
    } else {
      return downward_triangle_family();
    }
  }
  if (spec.rfind("custom:", 0) == 0) {
    const auto normals = io::parse_point_file(in.normals_text);
    if (normals.d != d) {
      throw DimensionMismatch("custom normals have dimension " + std::to_string(normals.d) +
                              ", points have " + std::to_string(d));
    }
    std::vector<Vector<Scalar>> raw;
    if constexpr (is_exact_v<Scalar>) {
      const auto m = normals.to_integer();
      for (Eigen::Index i = 0; i < m.cols(); ++i) raw.emplace_back(m.col(i));
    } else {
      const auto m = normals.to_double();
      for (Eigen::Index i = 0; i < m.cols(); ++i) raw.emplace_back(m.col(i));
    }
    return normalize_orientations(raw);
  }
  throw ParseError("unknown family '" + spec +
                   "' (expected axis-box, skyline, orthant, downward-triangle or custom:<file>)");
}

template <CoordinateScalar Scalar>
PointSet<Scalar> load_points(const io::PointFile& file) {
  if constexpr (is_exact_v<Scalar>) {
    return file.to_integer();
  } else {
    return file.to_double();
  }
}

template <CoordinateScalar Scalar>
Json family_json(const FamilyInput& in, const OrientationFamily<Scalar>& family) {
  Json orientations = Json::array();
  for (const auto& u : family) orientations.push_back(vector_json(u.direction()));
  return Json{{"spec", in.spec}, {"k", family.k()}, {"orientations", orientations}};
}

template <CoordinateScalar Scalar>
Json verdict_json(const Verdict& v, const OrientationFamily<Scalar>& family, std::size_t n) {
  Json out{{"ok", v.ok}, {"max_light_count", max_light_count(n, family.k())}};
  if (!v.ok) {
    out["witness_orientation"] = Json{{"index", *v.witness_orientation},
                                      {"direction", vector_json(family[*v.witness_orientation].direction())}};
    out["witness_count"] = *v.witness_count;
  }
  return out;
}

Json header(std::string_view mode, const Digest& digest) {
  return Json{{"schema_version", kSchemaVersion}, {"mode", mode}, {"input_digest", digest.hex()}};
}

template <CoordinateScalar Scalar>
Json compute_report(const io::PointFile& file, const FamilyInput& fin, const Digest& digest) {
  const Stopwatch clock;
  const auto points = load_points<Scalar>(file);
  const auto family = build_family<Scalar>(fin, file.d);
  const auto cert = compute_strong_centerpoint(points, family);
  const auto verdict = verify_strong_centerpoint(points, family, cert.chosen_point(points));

  Json report = header("compute", digest);
  report["arithmetic"] = is_exact_v<Scalar> ? "exact" : "float";
  report["n"] = file.n();
  report["d"] = file.d;
  report["family"] = family_json(fin, family);
  report["point"] = Json{{"index", cert.chosen_index}, {"coords", coords_json(file.rows[cert.chosen_index])}};
  Json halfspaces = Json::array();
  for (std::size_t i = 0; i < cert.halfspaces.size(); ++i) {
    halfspaces.push_back(Json{{"orientation", i},
                              {"offset", number(cert.halfspaces[i].offset)},
                              {"strictly_below", cert.below_counts[i]}});
  }
  report["certificate"] = Json{{"m", cert.m},
                               {"halfspaces", halfspaces},
                               {"region_size", cert.region_members.size()},
                               {"region_members", cert.region_members}};
  report["verdict"] = verdict_json(verdict, family, file.n());
  report["timing_ms"] = clock.elapsed_ms();
  return report;
}

template <CoordinateScalar Scalar>
std::pair<Json, bool> verify_report(const io::PointFile& file, const FamilyInput& fin,
                                    const std::vector<std::string>& candidate,
                                    const Digest& digest) {
  const Stopwatch clock;
  const auto points = load_points<Scalar>(file);
  const auto family = build_family<Scalar>(fin, file.d);
  if (static_cast<int>(candidate.size()) != file.d) {
    throw DimensionMismatch("candidate has " + std::to_string(candidate.size()) +
                            " coordinates, points have d=" + std::to_string(file.d));
  }
  Vector<Scalar> p(file.d);
  for (int j = 0; j < file.d; ++j) {
    if constexpr (is_exact_v<Scalar>) {
      p[j] = io::parse_integer(candidate[static_cast<std::size_t>(j)]);
    } else {
      p[j] = io::parse_double(candidate[static_cast<std::size_t>(j)]);
    }
  }
  const auto verdict = verify_strong_centerpoint(points, family, p);

  Json report = header("verify", digest);
  report["arithmetic"] = is_exact_v<Scalar> ? "exact" : "float";
  report["n"] = file.n();
  report["d"] = file.d;
  report["family"] = family_json(fin, family);
  report["candidate"] = Json{{"coords", coords_json(candidate)}};
  report["verdict"] = verdict_json(verdict, family, file.n());
  report["timing_ms"] = clock.elapsed_ms();
  return {report, verdict.ok};
}

std::vector<std::string> split_candidate(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int write_report(std::ostream& out, const Json& report, int code) {
  out << report.dump(2) << '\n';
  return code;
}

struct Options {
  std::string points_path;
  std::string family = "axis-box";
  std::string candidate;
  std::string system_path;
  std::string svg_path;
  bool exact = false;
  bool oracle = false;
  bool check = false;
  // generate
  std::string generator;
  std::size_t n = 8;
  int d = 2;
  std::size_t k = 4;
  std::uint64_t seed = 1;
  std::string kind = "all-collinear";
  double jitter = 0.0;
  std::string normals_out;
};

int cmd_compute(const Options& opt, std::ostream& out) {
  const auto text = io::read_text(opt.points_path);
  const auto file = io::parse_point_file(text);
  const auto fin = read_family_input(opt.family);
  Digest digest;
  digest.add(text).add(fin.spec).add(fin.normals_text).add(opt.exact ? "exact" : "float");
  if (opt.exact) return write_report(out, compute_report<std::int64_t>(file, fin, digest), kOk);
  return write_report(out, compute_report<double>(file, fin, digest), kOk);
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto text = io::read_text(opt.points_path);
  const auto file = io::parse_point_file(text);
  const auto fin = read_family_input(opt.family);
  const auto candidate = split_candidate(opt.candidate);
  Digest digest;
  digest.add(text).add(fin.spec).add(fin.normals_text).add(opt.exact ? "exact" : "float");
  for (const auto& c : candidate) digest.add(c);
  const auto [report, ok] = opt.exact
                                ? verify_report<std::int64_t>(file, fin, candidate, digest)
                                : verify_report<double>(file, fin, candidate, digest);
  return write_report(out, report, ok ? kOk : kNegativeVerdict);
}

int cmd_abstract(const Options& opt, std::ostream& out) {
  const auto text = io::read_text(opt.system_path);
  const auto sys = io::parse_set_system(text);
  const Stopwatch clock;
  Digest digest;
  digest.add(text);
  Json report = header("abstract", digest);
  report["n"] = sys.n();
  report["k"] = sys.k();
  report["sets"] = sys.size();
  report["heavy_sets"] = sys.heavy_sets();

  if (opt.check) {
    const auto violation = check_bounded_intersection(sys);
    report["check"] = Json{{"ok", !violation.has_value()}};
    if (violation) {
      report["check"]["violation"] = *violation;
      report["timing_ms"] = clock.elapsed_ms();
      return write_report(out, report, kPropertyViolation);
    }
  }

  const auto result = strong_centerpoint_k(sys);
  if (result.has_element()) {
    report["outcome"] = Json{{"type", "element"}, {"element", result.element()}};
  } else {
    report["outcome"] = Json{{"type", "no_centerpoint"}, {"witness", result.failure().witness}};
  }
  Json trace = Json::array();
  for (const auto& level : result.trace) {
    Json entry{{"ground_size", level.ground_size}, {"order", level.order}};
    entry["chosen_set"] = level.chosen_set ? Json(*level.chosen_set) : Json(nullptr);
    trace.push_back(entry);
  }
  report["trace"] = trace;
  report["resolved_directly"] = result.resolved_directly;

  int code = result.has_element() ? kOk : kNegativeVerdict;
  if (opt.oracle && sys.n() <= 200) {
    const auto centerpoints = brute_force_strong_centerpoints(sys);
    const bool agrees =
        result.has_element()
            ? std::find(centerpoints.begin(), centerpoints.end(), result.element()) !=
                  centerpoints.end()
            : centerpoints.empty();
    report["oracle"] = Json{{"centerpoints", centerpoints}, {"agrees", agrees}};
    if (!agrees) code = kOracleDisagreement;
  }
  report["timing_ms"] = clock.elapsed_ms();
  return write_report(out, report, code);
}

int cmd_plot(const Options& opt, std::ostream& out) {
  const auto text = io::read_text(opt.points_path);
  const auto file = io::parse_point_file(text);
  if (file.d != 2) throw DimensionMismatch("plot needs planar points, got d=" + std::to_string(file.d));
  const auto fin = read_family_input(opt.family);
  const auto points = file.to_double();
  const auto family = build_family<double>(fin, file.d);
  const auto cert = compute_strong_centerpoint(points, family);
  const auto svg = render_svg(points, family, cert);
  std::ofstream svg_out(opt.svg_path, std::ios::binary);
  if (!svg_out) throw ParseError("cannot write '" + opt.svg_path + "'");
  svg_out << svg;
  Digest digest;
  digest.add(text).add(fin.spec).add(fin.normals_text);
  Json report = header("plot", digest);
  report["svg"] = opt.svg_path;
  report["point"] = Json{{"index", cert.chosen_index}, {"coords", coords_json(file.rows[cert.chosen_index])}};
  return write_report(out, report, kOk);
}

void write_normals(const std::string& path, const OrientationFamilyi& family) {
  PointSeti m(family.dim(), static_cast<Eigen::Index>(family.k()));
  for (std::size_t i = 0; i < family.k(); ++i) m.col(static_cast<Eigen::Index>(i)) = family[i].direction();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << io::format_points(m);
}

int cmd_generate(const Options& opt, std::ostream& out) {
  if (opt.generator == "tightness") {
    const auto fin = read_family_input(opt.family);
    const auto family = build_family<double>(fin, opt.d);
    out << io::format_points(tightness_instance(family, opt.n, opt.jitter, opt.seed).points);
  } else if (opt.generator == "convex") {
    out << io::format_points(convex_position_instance(opt.n));
  } else if (opt.generator == "random") {
    const auto inst = random_instance(opt.seed, opt.n, opt.d, opt.k);
    if (!opt.normals_out.empty()) write_normals(opt.normals_out, inst.family);
    out << io::format_points(inst.points);
  } else if (opt.generator == "degenerate") {
    out << io::format_points(degenerate_instance(parse_degenerate_kind(opt.kind), opt.n).points);
  } else {
    throw ParseError("unknown generator '" + opt.generator + "'");
  }
  return kOk;
}

int cmd_incidence(const Options& opt, std::ostream& out) {
  const auto file = io::read_point_file(opt.points_path);
  if (file.all_integer()) {
    out << io::format_set_system(hyperplane_system(file.to_integer(), file.d));
  } else {
    out << io::format_set_system(hyperplane_system(file.to_double(), file.d));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong centerpoints for fixed-orientation polytopes and bounded-intersection set systems",
               "strongcp"};
  app.require_subcommand(1);
  Options opt;

  auto* compute = app.add_subcommand("compute", "Compute a strong centerpoint of a point file");
  compute->add_option("points", opt.points_path, "Point file")->required();
  compute->add_option("--family", opt.family,
                      "axis-box | skyline | orthant | downward-triangle | custom:<normals-file>");
  compute->add_flag("--exact", opt.exact, "Exact integer arithmetic (integer coordinates only)");

  auto* verify = app.add_subcommand("verify", "Check whether a candidate is a strong centerpoint");
  verify->add_option("points", opt.points_path, "Point file")->required();
  verify->add_option("--family", opt.family, "Orientation family");
  verify->add_option("--candidate", opt.candidate, "Candidate coordinates, e.g. 7,0")->required();
  verify->add_flag("--exact", opt.exact, "Exact integer arithmetic");

  auto* abstract = app.add_subcommand("abstract", "Solve a bounded-intersection set system");
  abstract->add_option("system", opt.system_path, "Set-system file")->required();
  abstract->add_flag("--oracle", opt.oracle, "Cross-check against exhaustive search (n <= 200)");
  abstract->add_flag("--check", opt.check, "Verify the bounded-intersection property first");

  auto* plot = app.add_subcommand("plot", "Render a planar instance as SVG");
  plot->add_option("points", opt.points_path, "Point file")->required();
  plot->add_option("--family", opt.family, "Orientation family");
  plot->add_option("--svg", opt.svg_path, "Output SVG path")->required();

  auto* generate = app.add_subcommand("generate", "Write a generated point file to stdout");
  generate->add_option("generator", opt.generator, "tightness | convex | random | degenerate")
      ->required();
  generate->add_option("--family", opt.family, "Family for the tightness instance");
  generate->add_option("--n", opt.n, "Number of points");
  generate->add_option("--d", opt.d, "Dimension");
  generate->add_option("--k", opt.k, "Number of orientations (random)");
  generate->add_option("--seed", opt.seed, "Seed");
  generate->add_option("--kind", opt.kind, "all-coincident | all-collinear | with-duplicates");
  generate->add_option("--jitter", opt.jitter, "Cluster jitter radius (tightness)");
  generate->add_option("--normals-out", opt.normals_out, "Write the random family's normals here");

  auto* incidence = app.add_subcommand("incidence", "Write the hyperplane incidence set system");
  incidence->add_option("points", opt.points_path, "Point file (d = 2 or 3)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (abstract->parsed()) return cmd_abstract(opt, out);
    if (plot->parsed()) return cmd_plot(opt, out);
    if (generate->parsed()) return cmd_generate(opt, out);
    if (incidence->parsed()) return cmd_incidence(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << '\n';
    return kPropertyViolation;
  } catch (const SizeGuardExceeded& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace strongcp::cli
