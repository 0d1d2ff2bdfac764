#include "podbond/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "podbond/error.hpp"

namespace podbond {

namespace {

// DOM builder for nlohmann's SAX interface that stores floats as raw text.
class ExactSax : public nlohmann::json_sax<Json> {
 public:
  Json result;

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(v); }
  bool number_unsigned(number_unsigned_t v) override { return put(v); }
  bool number_float(number_float_t /*v*/, const string_t& s) override { return put(s); }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t& /*v*/) override { return false; }
  bool start_object(std::size_t /*n*/) override { return open(Json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t /*n*/) override { return open(Json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string& /*tok*/, const nlohmann::detail::exception& e) override {
    throw Error(Errc::parse, "JSON parse error at byte " + std::to_string(pos) + ": " + e.what());
  }

 private:
  Json* slot() {
    if (stack_.empty()) return &result;
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(nullptr);
      return &top.back();
    }
    return &top[key_];
  }
  bool put(Json v) {
    *slot() = std::move(v);
    return true;
  }
  bool open(Json v) {
    Json* s = slot();
    *s = std::move(v);
    stack_.push_back(s);
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<Json*> stack_;
  std::string key_;
};

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
    fail("unsupported schema " + j.at("schema").dump());
}

template <class T, class F>
Vec3<T> vec3_of(const Json& j, F&& f) {
  if (!j.is_array() || j.size() != 3) fail("expected an array of 3 entries, got " + j.dump());
  return {f(j[0]), f(j[1]), f(j[2])};
}

template <class T, class F>
Mat3<T> mat3_of(const Json& j, F&& f) {
  if (!j.is_array() || j.size() != 3) fail("expected a 3x3 array, got " + j.dump());
  return {vec3_of<T>(j[0], f), vec3_of<T>(j[1], f), vec3_of<T>(j[2], f)};
}

template <class T, class F>
Json vec_json(const Vec3<T>& v, F&& f) {
  return Json::array({f(v[0]), f(v[1]), f(v[2])});
}

template <class T, class F>
Json mat_json(const Mat3<T>& m, F&& f) {
  return Json::array({vec_json(m[0], f), vec_json(m[1], f), vec_json(m[2], f)});
}

template <class K>
Json point_json(const IsometryPoint<K>& p) {
  auto f = [](const K& z) { return to_json(z); };
  Json j;
  j["backend"] = ScalarTraits<K>::backend;
  j["h"] = to_json(p.h());
  j["M"] = mat_json(p.M(), f);
  j["x"] = vec_json(p.x(), f);
  j["y"] = vec_json(p.y(), f);
  j["r"] = to_json(p.r());
  return j;
}

ComplexApprox complex_from_json(const Json& j) {
  if (j.is_object()) return {double_from_json(field(j, "re")), j.contains("im") ? double_from_json(j.at("im")) : 0.0};
  return ComplexApprox(double_from_json(j));
}

GaussPoly poly_from_json(const Json& j) {
  if (!j.is_array()) return GaussPoly(gaussian_from_json(j));
  std::vector<GaussianRational> c;
  for (const auto& e : j) c.push_back(gaussian_from_json(e));
  return GaussPoly(std::move(c));
}

Json poly_json(const GaussPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json indices_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

}  // namespace

Json parse_json(std::string_view text) {
  ExactSax sax;
  Json::sax_parse(text.begin(), text.end(), &sax);
  return sax.result;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const Rational& v) { return v.str(); }
Json to_json(const GaussianRational& v) { return Json{{"re", v.re().str()}, {"im", v.im().str()}}; }
// Adding 0.0 turns -0.0 into 0.0.
Json to_json(const ComplexApprox& v) { return Json{{"re", v.re() + 0.0}, {"im", v.im() + 0.0}}; }
Json to_json(const std::complex<double>& v) { return Json{{"re", v.real() + 0.0}, {"im", v.imag() + 0.0}}; }
Json to_json(const Vec3<Rational>& v) {
  return vec_json(v, [](const Rational& r) { return to_json(r); });
}
Json to_json(const Direction& d) { return Json::array({d[0] + 0.0, d[1] + 0.0, d[2] + 0.0}); }

Json to_json(const ExactIsometry& s) {
  auto f = [](const Rational& r) { return to_json(r); };
  return Json{{"M", mat_json(s.M(), f)}, {"y", vec_json(s.y(), f)}};
}

Json to_json(const FloatIsometry& s) {
  auto f = [](double d) { return Json(d); };
  return Json{{"M", mat_json(s.M(), f)}, {"y", vec_json(s.y(), f)}};
}

Json to_json(const Pod& pod) {
  Json j;
  j["platform"] = Json::array();
  j["base"] = Json::array();
  j["d2"] = Json::array();
  for (std::size_t i = 0; i < pod.size(); ++i) {
    j["platform"].push_back(to_json(pod.platform()[i]));
    j["base"].push_back(to_json(pod.base()[i]));
    j["d2"].push_back(to_json(pod.d2()[i]));
  }
  return j;
}

Json to_json(const ExactPoint& p) { return point_json(p); }
Json to_json(const FloatPoint& p) { return point_json(p); }

Json to_json(const RationalMotion& m) {
  const auto& c = m.coords();
  Json j;
  j["h"] = poly_json(c[coord::h]);
  j["M"] = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < 3; ++k) row.push_back(poly_json(c[coord::m(i, k)]));
    j["M"].push_back(row);
  }
  j["x"] = Json::array({poly_json(c[coord::x(0)]), poly_json(c[coord::x(1)]), poly_json(c[coord::x(2)])});
  j["y"] = Json::array({poly_json(c[coord::y(0)]), poly_json(c[coord::y(1)]), poly_json(c[coord::y(2)])});
  j["r"] = poly_json(c[coord::r]);
  return j;
}

Json to_json(const PlanarMobius& k) {
  return Json{{"a", to_json(k.a())}, {"b", to_json(k.b())}, {"c", to_json(k.c())}, {"d", to_json(k.d())}};
}

Json to_json(const MobiusFit& f) {
  return Json{{"map", to_json(f.map)},
              {"residual", f.residual},
              {"type", f.degenerate ? "degenerate" : (f.map.is_similarity(1e-9) ? "similarity" : "inversion")},
              {"underdetermined", f.underdetermined}};
}

Json to_json(const ProjectionMinimum& m) {
  Json j{{"L", to_json(m.L)}, {"R", to_json(m.R)}};
  const Json fit = to_json(m.fit);
  for (const auto& [k, v] : fit.items()) j[k] = v;
  return j;
}

Json to_json(const PartitionWitness& w) {
  auto line = [](const std::optional<ExactLine>& l) -> Json {
    if (!l) return nullptr;
    return Json{{"point", to_json(l->point)}, {"direction", to_json(l->direction)}};
  };
  return Json{{"platform_indices", indices_json(w.platform_indices)},
              {"base_indices", indices_json(w.base_indices)},
              {"platform_line", line(w.platform_line)},
              {"base_line", line(w.base_line)},
              {"degenerate", w.degenerate}};
}

Json to_json(const NormalFormCertificate& c) {
  Json j{{"class", to_string(c.cls)},
         {"sigma_left", to_json(c.sigma_left)},
         {"sigma_right", to_json(c.sigma_right)},
         {"normal_point", to_json(c.normal_point)}};
  j["parameter"] = c.parameter ? Json(*c.parameter) : Json(nullptr);
  return j;
}

template <class K>
Json to_json(const Bond<K>& b) {
  Json j{{"class", to_string(b.cls)}, {"point", to_json(b.point)}};
  if (b.L) j["L"] = to_json(*b.L);
  if (b.R) j["R"] = to_json(*b.R);
  if (b.carrier) j["carrier"] = to_json(*b.carrier);
  if (b.planar_map) j["planar_map"] = to_json(*b.planar_map);
  if (b.cls == BoundaryClass::Vertex) j["note"] = "the vertex is never a bond";
  return j;
}

template Json to_json(const ExactBond&);
template Json to_json(const FloatBond&);

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["level"] = r.level;
  j["note"] = "necessary conditions only: a raised flag does not imply mobility";
  j["options"] = Json{{"starts", r.options.starts},
                      {"seed", r.options.seed},
                      {"tol", r.options.tol},
                      {"min_pairs", r.options.min_pairs}};
  Json mobius = Json::array();
  for (const auto& m : r.minima)
    if (is_mobius_witness(m)) mobius.push_back(to_json(m));
  Json cond;
  cond["i"] = Json{{"flag", r.condition_i}, {"witnesses", mobius}};
  cond["ii"] = Json{{"flag", r.condition_ii}, {"witness", r.partition ? to_json(*r.partition) : Json(nullptr)}};
  if (r.level >= 2) {
    cond["a"] = Json{{"flag", r.condition_a}, {"distinct_pairs", mobius.size()}};
    Json b = nullptr;
    if (r.equal_witness)
      b = Json{{"interchanged", r.equal_witness->interchanged},
               {"collinear_indices", indices_json(r.equal_witness->collinear_indices)},
               {"equal_indices", indices_json(r.equal_witness->equal_indices)},
               {"degenerate", r.equal_witness->degenerate}};
    cond["b"] = Json{{"flag", r.condition_b}, {"witness", b}};
    Json c = nullptr;
    if (r.parallel_witness)
      c = Json{{"first", indices_json(r.parallel_witness->first)},
               {"second", indices_json(r.parallel_witness->second)},
               {"platform_direction", to_json(r.parallel_witness->platform_direction)},
               {"base_direction", to_json(r.parallel_witness->base_direction)}};
    cond["c"] = Json{{"flag", r.condition_c}, {"witness", c}};
  }
  j["conditions"] = cond;
  Json all = Json::array();
  for (const auto& m : r.minima) all.push_back(to_json(m));
  j["minima"] = all;
  return j;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())), mpz_class(1));
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return Rational::parse(j.dump());
  } catch (const Error& e) {
    fail(std::string("bad rational ") + j.dump() + ": " + e.what());
  }
  fail("expected a rational, got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object())
    return {rational_from_json(field(j, "re")), j.contains("im") ? rational_from_json(j.at("im")) : Rational(0)};
  return GaussianRational(rational_from_json(j));
}

double double_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) return rational_from_json(j).to_double();
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  fail("expected a number, got " + j.dump());
}

Vec3<Rational> vec3_from_json(const Json& j) {
  return vec3_of<Rational>(j, [](const Json& e) { return rational_from_json(e); });
}

Direction direction_from_json(const Json& j) {
  try {
    return Direction::from_vector(vec3_of<double>(j, [](const Json& e) { return double_from_json(e); }));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(std::string("bad direction: ") + e.what());
  }
}

ExactIsometry isometry_from_json(const Json& j) {
  check_schema(j);
  auto f = [](const Json& e) { return rational_from_json(e); };
  try {
    return ExactIsometry(mat3_of<Rational>(field(j, "M"), f), vec3_of<Rational>(field(j, "y"), f));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(std::string("bad isometry: ") + e.what());
  }
}

Pod pod_from_json(const Json& j) {
  check_schema(j);
  const Json& pl = field(j, "platform");
  const Json& ba = field(j, "base");
  if (!pl.is_array() || !ba.is_array()) fail("platform and base must be arrays");
  std::vector<Vec3<Rational>> p, b;
  for (const auto& e : pl) p.push_back(vec3_from_json(e));
  for (const auto& e : ba) b.push_back(vec3_from_json(e));
  std::vector<Rational> d2;
  if (j.contains("d2")) {
    if (!j.at("d2").is_array()) fail("d2 must be an array");
    for (const auto& e : j.at("d2")) d2.push_back(rational_from_json(e));
  } else {
    d2.assign(p.size(), Rational(0));
  }
  try {
    return Pod(std::move(p), std::move(b), std::move(d2));
  } catch (const Error& e) {
    fail(std::string("bad pod: ") + e.what());
  }
}

std::variant<ExactPoint, FloatPoint> point_from_json(const Json& j) {
  check_schema(j);
  const Json& src = j.contains("point") ? j.at("point") : j;
  const bool is_float = src.contains("backend") && src.at("backend") == "float";
  if (src.contains("backend") && !is_float && src.at("backend") != "exact") fail("unknown backend " + src.at("backend").dump());
  try {
    if (is_float) {
      auto f = [](const Json& e) { return complex_from_json(e); };
      return FloatPoint::from_blocks(f(field(src, "h")), mat3_of<ComplexApprox>(field(src, "M"), f),
                                     vec3_of<ComplexApprox>(field(src, "x"), f), vec3_of<ComplexApprox>(field(src, "y"), f),
                                     f(field(src, "r")));
    }
    auto f = [](const Json& e) { return gaussian_from_json(e); };
    return ExactPoint::from_blocks(f(field(src, "h")), mat3_of<GaussianRational>(field(src, "M"), f),
                                   vec3_of<GaussianRational>(field(src, "x"), f),
                                   vec3_of<GaussianRational>(field(src, "y"), f), f(field(src, "r")));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(std::string("bad point: ") + e.what());
  }
}

RationalMotion motion_from_json(const Json& j) {
  check_schema(j);
  auto f = [](const Json& e) { return poly_from_json(e); };
  Coords<GaussPoly> c = assemble<GaussPoly>(f(field(j, "h")), mat3_of<GaussPoly>(field(j, "M"), f),
                                            vec3_of<GaussPoly>(field(j, "x"), f), vec3_of<GaussPoly>(field(j, "y"), f),
                                            f(field(j, "r")));
  return RationalMotion(std::move(c));
}

}  // namespace podbond
