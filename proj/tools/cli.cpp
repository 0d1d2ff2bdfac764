#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "podbond/error.hpp"
#include "podbond/json_io.hpp"

namespace podbond::cli {

namespace {

Json envelope(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items())
    if (k != "schema") into[k] = v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

Vec3<Rational> parse_vec3(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw Error(Errc::parse, "expected x,y,z but got \"" + s + "\"");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

Direction parse_direction(const std::string& s) { return Direction::from_vector(to_double(parse_vec3(s))); }

// "px,py,pz:dx,dy,dz"
std::pair<Vec3<Rational>, Vec3<Rational>> parse_line(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw Error(Errc::parse, "expected px,py,pz:dx,dy,dz but got \"" + s + "\"");
  return {parse_vec3(parts[0]), parse_vec3(parts[1])};
}

bool exact_unit(const Vec3<Rational>& d) { return dot(d, d) == Rational(1); }

OrientedLine<double> float_line(const std::pair<Vec3<Rational>, Vec3<Rational>>& l) {
  return {to_double(l.first), to_double(l.second)};
}

// "angle,re,im"
PlanarIsometry parse_planar(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw Error(Errc::parse, "expected angle,re,im but got \"" + s + "\"");
  return PlanarIsometry::make(Rational::parse(parts[0]).to_double(),
                              {Rational::parse(parts[1]).to_double(), Rational::parse(parts[2]).to_double()});
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int exit_code(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::invalid_argument:
      return kMalformed;
    case Errc::not_boundary:
    case Errc::not_on_x:
      return kVerificationFailed;
    default:
      return kDegenerate;
  }
}

struct Options {
  std::string pod, point, motion, plot, type, side = "left", kind = "inversion";
  std::string L, R, line, platform_line, base_line, tau1 = "0,0,0", tau2 = "0,0,0";
  int level = 1, starts = 64, samples = 12, min_pairs = 5;
  std::uint64_t seed = 1;
  double tol = 1e-9, parameter = 1.0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const Pod pod = pod_from_json(read_json_file(o.pod));
  const AnalysisOptions opts{o.starts, o.seed, o.tol, o.min_pairs};
  const AnalysisReport r = o.level >= 2 ? mobility_two_report(pod, opts) : mobility_one_report(pod, opts);
  Json j = envelope("analyze");
  merge(j, to_json(r));
  emit(out, j);
  return kOk;
}

template <class K>
Json classify_json(const IsometryPoint<K>& p, double tol) {
  Json j = envelope("classify");
  j["backend"] = ScalarTraits<K>::backend;
  const Bond<K> b = Bond<K>::from_point(p, tol);
  merge(j, to_json(b));
  if (b.cls == BoundaryClass::Vertex) {
    j["note"] = "never a bond";
  } else {
    const NormalFormCertificate c = normal_form(p, tol);
    j["parameter"] = c.parameter ? Json(*c.parameter) : Json(nullptr);
    j["certificate"] = to_json(c);
  }
  return j;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto pt = point_from_json(read_json_file(o.point));
  emit(out, std::visit([&](const auto& p) { return classify_json(p, o.tol); }, pt));
  return kOk;
}

int cmd_verify_motion(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw Error(Errc::invalid_argument, "--samples must be at least 1");
  const Pod pod = pod_from_json(read_json_file(o.pod));
  const RationalMotion m = motion_from_json(read_json_file(o.motion));
  std::ofstream plot;
  if (!o.plot.empty()) {
    plot.open(o.plot);
    if (!plot) throw Error(Errc::invalid_argument, "cannot write " + o.plot);
    plot << 't';
    for (std::size_t i = 0; i < pod.size(); ++i) plot << ",leg" << i + 1;
    plot << '\n';
  }
  double worst = 0.0;
  bool exact_zero = true;
  int evaluated = 0;
  for (int k = 0; k < o.samples; ++k) {
    const Rational t = o.samples == 1 ? Rational(0) : Rational(-1) + Rational(2 * k) / Rational(o.samples - 1);
    const auto pose = m.pose(t);
    if (!pose) continue;
    ++evaluated;
    const auto res = spherical_residuals(pod, *pose);
    if (plot) plot << t.to_double();
    for (const auto& r : res) {
      exact_zero = exact_zero && r.is_zero();
      worst = std::max(worst, r.abs().to_double());
      if (plot) plot << ',' << r.to_double();
    }
    if (plot) plot << '\n';
  }
  const bool passed = worst <= o.tol;
  Json j = envelope("verify-motion");
  j["samples"] = o.samples;
  j["evaluated"] = evaluated;
  j["max_residual"] = worst;
  j["exact_zero"] = exact_zero;
  j["tol"] = o.tol;
  j["passed"] = passed;
  emit(out, j);
  return passed ? kOk : kVerificationFailed;
}

int cmd_limit_bonds(const Options& o, std::ostream& out) {
  const RationalMotion m = motion_from_json(read_json_file(o.motion));
  std::optional<Pod> pod;
  if (!o.pod.empty()) pod = pod_from_json(read_json_file(o.pod));
  Json bonds = Json::array();
  for (const LimitBond& lb : limit_bonds(m, o.tol)) {
    Json e{{"t", to_json(lb.t)}, {"exact_t", lb.exact_t ? to_json(*lb.exact_t) : Json(nullptr)}, {"order", lb.order}};
    e["bond"] = lb.exact ? to_json(*lb.exact) : to_json(lb.approx);
    if (pod) {
      if (lb.exact) {
        const auto v = verify_bond(*lb.exact, *pod, o.tol);
        e["member"] = v.member;
        e["max_residual"] = v.max_abs;
      } else {
        const auto v = verify_bond(lb.approx, *pod, o.tol);
        e["member"] = v.member;
        e["max_residual"] = v.max_abs;
      }
    }
    bonds.push_back(e);
  }
  Json j = envelope("limit-bonds");
  j["bonds"] = bonds;
  emit(out, j);
  return kOk;
}

int cmd_make_bond(const Options& o, std::ostream& out) {
  Json j = envelope("make-bond");
  j["type"] = o.type;
  if (o.type == "butterfly") {
    const auto pl = parse_line(o.platform_line), bl = parse_line(o.base_line);
    if (exact_unit(pl.second) && exact_unit(bl.second))
      merge(j, to_json(butterfly_bond(OrientedLine<Rational>(pl.first, pl.second),
                                      OrientedLine<Rational>(bl.first, bl.second), o.tol)));
    else
      merge(j, to_json(butterfly_bond(float_line(pl), float_line(bl), o.tol)));
  } else if (o.type == "collinearity") {
    const auto l = parse_line(o.line);
    const Side side = o.side == "right" ? Side::right : Side::left;
    if (exact_unit(l.second))
      merge(j, to_json(collinearity_bond(OrientedLine<Rational>(l.first, l.second), side, o.tol)));
    else
      merge(j, to_json(collinearity_bond(float_line(l), side, o.tol)));
  } else if (o.type == "mobius") {
    const MobiusKind kind = o.kind == "similarity" ? MobiusKind::similarity : MobiusKind::inversion;
    merge(j, to_json(mobius_bond(parse_direction(o.L), parse_direction(o.R), kind, o.parameter,
                                 parse_planar(o.tau1), parse_planar(o.tau2), o.tol)));
  } else {
    throw Error(Errc::invalid_argument, "unknown bond type \"" + o.type + "\"");
  }
  emit(out, j);
  return kOk;
}

int cmd_project_check(const Options& o, std::ostream& out) {
  const Pod pod = pod_from_json(read_json_file(o.pod));
  const Direction L = parse_direction(o.L), R = parse_direction(o.R);
  const auto fit = mobius_fit(project_points(pod.platform(), R), project_points(pod.base(), L), o.tol);
  Json j = envelope("project-check");
  j["L"] = to_json(L);
  j["R"] = to_json(R);
  j["residual"] = std::sqrt(projection_objective(pod, L, R));
  j["equivalent"] = fit && !fit->degenerate && !fit->underdetermined;
  j["fit"] = fit ? to_json(*fit) : Json(nullptr);
  emit(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bond theory toolkit for n-pods", "podbond"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Necessary conditions for mobility");
  analyze->add_option("--pod", o.pod, "Pod JSON file")->required();
  analyze->add_option("--level", o.level, "1: mobility one, 2: mobility two")->check(CLI::Range(1, 2));
  analyze->add_option("--starts", o.starts, "Optimizer starts")->check(CLI::NonNegativeNumber);
  analyze->add_option("--seed", o.seed, "Random seed");
  analyze->add_option("--tol", o.tol, "Residual tolerance");
  analyze->add_option("--min-pairs", o.min_pairs, "Minima needed for condition (a)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a boundary point");
  classify_cmd->add_option("--point", o.point, "Point JSON file")->required();
  classify_cmd->add_option("--tol", o.tol, "Zero tolerance (float points)");

  auto* verify = app.add_subcommand("verify-motion", "Spherical residuals along a rational motion");
  verify->add_option("--pod", o.pod, "Pod JSON file")->required();
  verify->add_option("--motion", o.motion, "Motion JSON file")->required();
  verify->add_option("--samples", o.samples, "Number of parameter samples in [-1, 1]");
  verify->add_option("--tol", o.tol, "Residual tolerance");
  verify->add_option("--plot", o.plot, "Write per-leg residuals as CSV");

  auto* limits = app.add_subcommand("limit-bonds", "Bonds at the roots of h(t)");
  limits->add_option("--motion", o.motion, "Motion JSON file")->required();
  limits->add_option("--pod", o.pod, "Pod JSON file for membership verdicts");
  limits->add_option("--tol", o.tol, "Zero tolerance");

  auto* make = app.add_subcommand("make-bond", "Build a bond from geometric data");
  make->add_option("--type", o.type, "butterfly | collinearity | mobius")->required();
  make->add_option("--platform-line", o.platform_line, "px,py,pz:dx,dy,dz (butterfly)");
  make->add_option("--base-line", o.base_line, "px,py,pz:dx,dy,dz (butterfly)");
  make->add_option("--line", o.line, "px,py,pz:dx,dy,dz (collinearity)");
  make->add_option("--side", o.side, "left | right (collinearity)");
  make->add_option("--L", o.L, "lx,ly,lz (mobius)");
  make->add_option("--R", o.R, "rx,ry,rz (mobius)");
  make->add_option("--kind", o.kind, "inversion | similarity (mobius)");
  make->add_option("--parameter", o.parameter, "r or gamma (mobius)");
  make->add_option("--tau1", o.tau1, "angle,re,im (mobius)");
  make->add_option("--tau2", o.tau2, "angle,re,im (mobius)");
  make->add_option("--tol", o.tol, "Zero tolerance");

  auto* project = app.add_subcommand("project-check", "Mobius fit of the projections along (L, R)");
  project->add_option("--pod", o.pod, "Pod JSON file")->required();
  project->add_option("--L", o.L, "lx,ly,lz")->required();
  project->add_option("--R", o.R, "rx,ry,rz")->required();
  project->add_option("--tol", o.tol, "Residual tolerance");

  std::vector<std::string> argv_store{"podbond"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (verify->parsed()) return cmd_verify_motion(o, out);
    if (limits->parsed()) return cmd_limit_bonds(o, out);
    if (make->parsed()) return cmd_make_bond(o, out);
    if (project->parsed()) return cmd_project_check(o, out);
  } catch (const Error& e) {
    err << "podbond: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "podbond: " << e.what() << '\n';
    return kDegenerate;
  }
  return kMalformed;
}

}  // namespace podbond::cli
