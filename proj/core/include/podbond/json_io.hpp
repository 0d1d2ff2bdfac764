#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <variant>

#include "podbond/analyze.hpp"
#include "podbond/motion.hpp"

namespace podbond {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "podbond-1";

/// Parses JSON keeping decimal literals as their source text (stored as
/// strings), so they convert to rationals without binary rounding. Throws
/// Errc::parse.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

Json to_json(const Rational& v);
Json to_json(const GaussianRational& v);
Json to_json(const ComplexApprox& v);
Json to_json(const std::complex<double>& v);
Json to_json(const Vec3<Rational>& v);
Json to_json(const Direction& d);
Json to_json(const ExactIsometry& s);
Json to_json(const FloatIsometry& s);
Json to_json(const Pod& pod);
Json to_json(const ExactPoint& p);
Json to_json(const FloatPoint& p);
Json to_json(const RationalMotion& m);
Json to_json(const PlanarMobius& k);
Json to_json(const MobiusFit& f);
Json to_json(const ProjectionMinimum& m);
Json to_json(const PartitionWitness& w);
Json to_json(const NormalFormCertificate& c);
Json to_json(const AnalysisReport& r);
template <class K>
Json to_json(const Bond<K>& b);

/// Accepts "p/q" strings, integers and decimal text.
Rational rational_from_json(const Json& j);
/// Accepts {"re": .., "im": ..} or a real shorthand.
GaussianRational gaussian_from_json(const Json& j);
double double_from_json(const Json& j);
Vec3<Rational> vec3_from_json(const Json& j);
Direction direction_from_json(const Json& j);
ExactIsometry isometry_from_json(const Json& j);
Pod pod_from_json(const Json& j);
/// "backend": "float" selects the float backend; exact otherwise.
std::variant<ExactPoint, FloatPoint> point_from_json(const Json& j);
RationalMotion motion_from_json(const Json& j);

}  // namespace podbond
