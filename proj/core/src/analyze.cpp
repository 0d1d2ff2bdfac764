#include "podbond/analyze.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "podbond/error.hpp"

namespace podbond {

namespace {

using C = std::complex<double>;

std::size_t distinct_count(const std::vector<C>& v) {
  double s = 1.0;
  for (const auto& z : v) s = std::max(s, std::abs(z));
  std::vector<C> seen;
  for (const auto& z : v)
    if (std::none_of(seen.begin(), seen.end(), [&](const C& w) { return std::abs(w - z) <= 1e-9 * s; }))
      seen.push_back(z);
  return seen.size();
}

Eigen::MatrixXcd fit_system(const std::vector<C>& qs, const std::vector<C>& Qs) {
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(qs.size()), 4);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    a(r, 0) = qs[i] * Qs[i];
    a(r, 1) = Qs[i];
    a(r, 2) = -qs[i];
    a(r, 3) = -1.0;
    // Unit rows: each point pair counts once on P^1 x P^1.
    a.row(r) /= std::sqrt((1.0 + std::norm(qs[i])) * (1.0 + std::norm(Qs[i])));
  }
  return a;
}

double smallest_singular_value(const Eigen::MatrixXcd& a) {
  if (a.rows() < 4) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(3);
}

bool lex_less(const Vec3<double>& a, const Vec3<double>& b) { return a < b; }

Vec3<double> random_unit(std::mt19937_64& rng) {
  // Raw engine output keeps the sequence identical across standard libraries.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double z = 2.0 * uniform() - 1.0, phi = 2.0 * std::numbers::pi * uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

Direction moved(const Direction& d, const ProjectionFrame& f, double a, double b) {
  return Direction::from_vector(add(d.vec(), add(scale(a, f.e1), scale(b, f.e2))));
}

struct LocalResult {
  Direction L, R;
  double value;
};

LocalResult descend(const Pod& pod, Direction L, Direction R) {
  constexpr int kMaxIter = 200;
  constexpr double kH = 1e-5;
  double f = projection_objective(pod, L, R);
  double radius = 0.1;
  for (int it = 0; it < kMaxIter && f > 1e-30 && radius > 1e-14; ++it) {
    const ProjectionFrame fl = ProjectionFrame::of(L), fr = ProjectionFrame::of(R);
    auto at = [&](const Eigen::Vector4d& d) {
      return projection_objective(pod, moved(L, fl, d(0), d(1)), moved(R, fr, d(2), d(3)));
    };
    Eigen::Vector4d g;
    Eigen::Matrix4d hess;
    for (int i = 0; i < 4; ++i) {
      const Eigen::Vector4d ei = kH * Eigen::Vector4d::Unit(i);
      const double fp = at(ei), fm = at(-ei);
      g(i) = (fp - fm) / (2.0 * kH);
      hess(i, i) = (fp - 2.0 * f + fm) / (kH * kH);
      for (int j = 0; j < i; ++j) {
        const Eigen::Vector4d ej = kH * Eigen::Vector4d::Unit(j);
        hess(i, j) = hess(j, i) = (at(ei + ej) - at(ei - ej) - at(ej - ei) + at(-ei - ej)) / (4.0 * kH * kH);
      }
    }
    // Newton step with |eigenvalues|, clipped to the trust radius.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(hess);
    const Eigen::Vector4d lam = es.eigenvalues().cwiseAbs().cwiseMax(1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()));
    Eigen::Vector4d step = -es.eigenvectors() * (es.eigenvectors().transpose() * g).cwiseQuotient(lam);
    if (!step.allFinite() || step.norm() == 0.0) break;
    if (step.norm() > radius) step *= radius / step.norm();
    const Direction L2 = moved(L, fl, step(0), step(1));
    const Direction R2 = moved(R, fr, step(2), step(3));
    const double f2 = projection_objective(pod, L2, R2);
    if (f2 < f) {
      L = L2, R = R2, f = f2;
      radius = std::min(2.0 * radius, 1.0);
    } else if (step.norm() < 1e-9) {
      break;
    } else {
      radius *= 0.5;
    }
  }
  return {L, R, f};
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

std::vector<Vec3<Rational>> pick(const std::vector<Vec3<Rational>>& pts, const std::vector<std::size_t>& idx) {
  std::vector<Vec3<Rational>> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

bool is_zero(const Vec3<Rational>& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::optional<ExactLine> line_through(const std::vector<Vec3<Rational>>& pts) {
  if (pts.empty()) return std::nullopt;
  for (const auto& p : pts)
    if (p != pts[0]) return ExactLine{pts[0], sub(p, pts[0])};
  return ExactLine{pts[0], Vec3<Rational>{}};
}

// Indices k with pts[k] on the line through a and b (a != b), or equal to a.
std::vector<std::size_t> on_line(const std::vector<Vec3<Rational>>& pts, const Vec3<Rational>& a,
                                 const Vec3<Rational>& b) {
  std::vector<std::size_t> out;
  const Vec3<Rational> d = sub(b, a);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Vec3<Rational> e = sub(pts[k], a);
    if (is_zero(d) ? is_zero(e) : is_zero(cross(e, d))) out.push_back(k);
  }
  return out;
}

// All differences within each group are parallel to one common direction.
std::optional<Vec3<Rational>> parallel_groups(const std::vector<Vec3<Rational>>& pts,
                                              const std::vector<std::size_t>& g1,
                                              const std::vector<std::size_t>& g2) {
  std::optional<Vec3<Rational>> dir;
  for (const auto* g : {&g1, &g2})
    for (auto k : *g) {
      const Vec3<Rational> e = sub(pts[k], pts[g->front()]);
      if (is_zero(e)) continue;
      if (!dir)
        dir = e;
      else if (!is_zero(cross(e, *dir)))
        return std::nullopt;
    }
  return dir.value_or(Vec3<Rational>{});
}

std::vector<std::vector<std::size_t>> line_candidates(const std::vector<Vec3<Rational>>& pts) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] != pts[j]) out.push_back(on_line(pts, pts[i], pts[j]));
  return out;
}

}  // namespace

std::vector<C> project_points(const std::vector<Vec3<double>>& points, const Direction& L) {
  const ProjectionFrame f = ProjectionFrame::of(L);
  std::vector<C> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(f.project(p));
  return out;
}

std::vector<C> project_points(const std::vector<Vec3<Rational>>& points, const Direction& L) {
  std::vector<Vec3<double>> d;
  d.reserve(points.size());
  for (const auto& p : points) d.push_back(to_double(p));
  return project_points(d, L);
}

std::optional<MobiusFit> mobius_fit(const std::vector<C>& qs, const std::vector<C>& Qs, double tol) {
  if (qs.size() != Qs.size()) throw Error(Errc::invalid_argument, "mobius_fit: length mismatch");
  if (qs.empty()) throw Error(Errc::invalid_argument, "mobius_fit: no points");
  const Eigen::MatrixXcd a = fit_system(qs, Qs);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const double residual = a.rows() < 4 ? 0.0 : svd.singularValues()(3);
  if (residual > tol) return std::nullopt;
  const Eigen::VectorXcd k = svd.matrixV().col(3);
  // Unknown order (c, d, a, b).
  MobiusFit fit{PlanarMobius(k(2), k(3), k(0), k(1)), residual, false, false};
  fit.underdetermined = distinct_count(qs) < 3 || distinct_count(Qs) < 3;
  fit.degenerate = fit.map.degenerate(1e-9);
  return fit;
}

bool collinear(const std::vector<Vec3<Rational>>& pts) {
  const auto l = line_through(pts);
  if (!l || is_zero(l->direction)) return true;
  return std::all_of(pts.begin(), pts.end(),
                     [&](const Vec3<Rational>& p) { return is_zero(cross(sub(p, l->point), l->direction)); });
}

std::optional<PartitionWitness> collinear_partition(const Pod& pod) {
  const std::size_t n = pod.size();
  const auto& pp = pod.platform();
  const auto& bb = pod.base();
  std::vector<std::vector<std::size_t>> candidates{{}};
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(on_line(pp, pp[i], pp[i]));
  for (auto& c : line_candidates(pp)) candidates.push_back(std::move(c));
  for (const auto& s : candidates) {
    const auto rest = complement(s, n);
    if (!collinear(pick(bb, rest))) continue;
    PartitionWitness w{s, rest, line_through(pick(pp, s)), line_through(pick(bb, rest)), s.size() <= 2 || rest.size() <= 2};
    return w;
  }
  return std::nullopt;
}

double projection_objective(const Pod& pod, const Direction& L, const Direction& R) {
  const auto qs = project_points(pod.platform(), R);
  const auto Qs = project_points(pod.base(), L);
  const double s = smallest_singular_value(fit_system(qs, Qs));
  return s * s;
}

std::vector<ProjectionMinimum> search_projection_pair(const Pod& pod, int starts, std::uint64_t seed, double tol) {
  if (pod.size() == 0 || starts <= 0) return {};
  std::mt19937_64 rng(seed);
  // Screen kScreen random pairs per start and descend from the best ones.
  constexpr int kScreen = 128;
  const int pairs = (starts + 1) / 2;
  struct Candidate {
    double value;
    Direction L, R;
  };
  std::vector<Candidate> pool;
  for (int k = 0; k < kScreen * pairs; ++k) {
    const Direction L = Direction::from_vector(random_unit(rng));
    const Direction R = Direction::from_vector(random_unit(rng));
    pool.push_back({std::min(projection_objective(pod, L, R), projection_objective(pod, -L, R)), L, R});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  std::vector<ProjectionMinimum> found;
  for (int k = 0; k < pairs; ++k) {
    for (int j = 0; j < 2 && 2 * k + j < starts; ++j) {
      const LocalResult res = descend(pod, j == 0 ? pool[k].L : -pool[k].L, pool[k].R);
      const auto fit = mobius_fit(project_points(pod.platform(), res.R), project_points(pod.base(), res.L), tol);
      if (fit) found.push_back({res.L, res.R, *fit});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const ProjectionMinimum& a, const ProjectionMinimum& b) {
    if (a.fit.residual != b.fit.residual) return a.fit.residual < b.fit.residual;
    if (a.L.vec() != b.L.vec()) return lex_less(a.L.vec(), b.L.vec());
    return lex_less(a.R.vec(), b.R.vec());
  });
  std::vector<ProjectionMinimum> out;
  for (const auto& m : found)
    if (std::none_of(out.begin(), out.end(), [&](const ProjectionMinimum& o) {
          return o.L.angle_to(m.L) <= 1e-3 && o.R.angle_to(m.R) <= 1e-3;
        }))
      out.push_back(m);
  return out;
}

bool is_mobius_witness(const ProjectionMinimum& m) { return !m.fit.degenerate && !m.fit.underdetermined; }

std::optional<EqualityWitness> equal_collinear_condition(const Pod& pod) {
  const std::size_t n = pod.size();
  if (n == 0) return std::nullopt;
  for (const bool swapped : {false, true}) {
    const auto& line_side = swapped ? pod.base() : pod.platform();
    const auto& equal_side = swapped ? pod.platform() : pod.base();
    for (std::size_t i = 0; i < n; ++i) {
      const auto eq = on_line(equal_side, equal_side[i], equal_side[i]);
      if (eq.front() != i) continue;
      const auto rest = complement(eq, n);
      if (collinear(pick(line_side, rest))) return EqualityWitness{swapped, rest, eq, rest.size() <= 2};
    }
  }
  return std::nullopt;
}

std::optional<ParallelWitness> parallel_lines_condition(const Pod& pod) {
  const std::size_t n = pod.size();
  if (n < 4) return std::nullopt;
  std::vector<std::vector<std::size_t>> candidates = line_candidates(pod.platform());
  for (auto& c : line_candidates(pod.base())) candidates.push_back(std::move(c));
  candidates.push_back({0, 1});
  for (const auto& s : candidates) {
    if (s.size() < 2 || s.size() > n - 2) continue;
    const auto rest = complement(s, n);
    const auto dp = parallel_groups(pod.platform(), s, rest);
    if (!dp) continue;
    const auto db = parallel_groups(pod.base(), s, rest);
    if (!db) continue;
    return ParallelWitness{s, rest, *dp, *db};
  }
  return std::nullopt;
}

AnalysisReport mobility_one_report(const Pod& pod, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.level = 1;
  r.options = opts;
  r.minima = search_projection_pair(pod, opts.starts, opts.seed, opts.tol);
  r.condition_i = std::any_of(r.minima.begin(), r.minima.end(), is_mobius_witness);
  r.partition = collinear_partition(pod);
  r.condition_ii = r.partition.has_value();
  return r;
}

AnalysisReport mobility_two_report(const Pod& pod, const AnalysisOptions& opts) {
  AnalysisReport r = mobility_one_report(pod, opts);
  r.level = 2;
  const auto witnesses = std::count_if(r.minima.begin(), r.minima.end(), is_mobius_witness);
  r.condition_a = witnesses >= opts.min_pairs;
  r.equal_witness = equal_collinear_condition(pod);
  r.condition_b = r.equal_witness.has_value();
  r.parallel_witness = parallel_lines_condition(pod);
  r.condition_c = r.parallel_witness.has_value();
  return r;
}

}  // namespace podbond
