#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "podbond/bonds.hpp"
#include "podbond/pod.hpp"

namespace podbond {

/// q_i = <p_i, e1> + i <p_i, e2> in the frame of L.
std::vector<std::complex<double>> project_points(const std::vector<Vec3<double>>& points, const Direction& L);
std::vector<std::complex<double>> project_points(const std::vector<Vec3<Rational>>& points, const Direction& L);

struct MobiusFit {
  PlanarMobius map;
  /// Smallest singular value of the n x 4 system (0 when n < 4).
  double residual = 0.0;
  /// Fewer than three distinct q_i or Q_i: any map through them fits.
  bool underdetermined = false;
  /// Kernel with ad = bc (a butterfly-type configuration, not a map).
  bool degenerate = false;
};

/// Kernel of c q_i Q_i + d Q_i - a q_i - b = 0. None when the smallest
/// singular value exceeds tol. Throws Errc::invalid_argument on a length
/// mismatch or empty input.
std::optional<MobiusFit> mobius_fit(const std::vector<std::complex<double>>& qs,
                                    const std::vector<std::complex<double>>& Qs, double tol = 1e-9);

/// Line through `point` along a (not necessarily unit) direction. A zero
/// direction means the points it stands for coincide.
struct ExactLine {
  Vec3<Rational> point;
  Vec3<Rational> direction;
};

/// Platform points indexed by `platform_indices` are collinear, and so are
/// the base points of the complement.
struct PartitionWitness {
  std::vector<std::size_t> platform_indices;
  std::vector<std::size_t> base_indices;
  std::optional<ExactLine> platform_line;
  std::optional<ExactLine> base_line;
  /// One side has at most two points.
  bool degenerate = false;
};

bool collinear(const std::vector<Vec3<Rational>>& pts);
std::optional<PartitionWitness> collinear_partition(const Pod& pod);

struct ProjectionMinimum {
  Direction L;
  Direction R;
  MobiusFit fit;
};

/// Multi-start local minimization of the fit residual of
/// (pi_R p_i, pi_L P_i) over S^2 x S^2. Returns the minima with residual at
/// most tol, deduplicated, sorted by residual and then by (L, R).
std::vector<ProjectionMinimum> search_projection_pair(const Pod& pod, int starts, std::uint64_t seed,
                                                      double tol = 1e-9);

/// Objective of the search: squared smallest singular value.
double projection_objective(const Pod& pod, const Direction& L, const Direction& R);

struct AnalysisOptions {
  int starts = 64;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  /// Minima needed for condition (a).
  int min_pairs = 5;
};

/// p_i collinear for i in `collinear_indices` and P_j all equal for j in
/// `equal_indices`; with `interchanged` the roles of platform and base swap.
struct EqualityWitness {
  bool interchanged = false;
  std::vector<std::size_t> collinear_indices;
  std::vector<std::size_t> equal_indices;
  bool degenerate = false;
};

/// Platform points of `first` on one line, of `second` on a parallel line;
/// the same for the base points with their own direction.
struct ParallelWitness {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  Vec3<Rational> platform_direction;
  Vec3<Rational> base_direction;
};

std::optional<EqualityWitness> equal_collinear_condition(const Pod& pod);
std::optional<ParallelWitness> parallel_lines_condition(const Pod& pod);

/// Necessary conditions for mobility. They are never sufficient.
struct AnalysisReport {
  int level = 1;
  AnalysisOptions options;
  std::vector<ProjectionMinimum> minima;
  bool condition_i = false;
  bool condition_ii = false;
  std::optional<PartitionWitness> partition;
  bool condition_a = false;
  bool condition_b = false;
  bool condition_c = false;
  std::optional<EqualityWitness> equal_witness;
  std::optional<ParallelWitness> parallel_witness;
};

/// True for minima that count as an inversion or similarity.
bool is_mobius_witness(const ProjectionMinimum& m);

AnalysisReport mobility_one_report(const Pod& pod, const AnalysisOptions& opts = {});
AnalysisReport mobility_two_report(const Pod& pod, const AnalysisOptions& opts = {});

}  // namespace podbond
