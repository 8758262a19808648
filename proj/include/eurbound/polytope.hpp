#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "eurbound/affine.hpp"

namespace eurbound {

/// Constraint <normal, z> <= offset with a unit normal.
struct HalfSpace {
  RVector normal;
  double offset = 0.0;

  /// Scales (a, b) so that ||a|| = 1; throws OutOfRange for a ~zero normal.
  static HalfSpace normalized(RVector a, double b);
};

enum class CutResult { Added, Duplicate };

inline constexpr std::size_t kDefaultVertexLimit = 1'000'000;

/// Bounded polytope in the reduced z-space, kept in both representations:
/// the ordered half-space list and the vertex set with per-vertex active
/// constraint index sets. Cuts update the vertex set incrementally
/// (double-description step): vertices are classified against the new
/// hyperplane and each adjacent kept/cut pair (sharing >= dim-1 active
/// constraints) contributes its edge intersection. Degenerate vertices carry
/// their full active sets. Not internally synchronized; mutate under
/// exclusive access.
class Polytope {
 public:
  /// Seed cell: axis-aligned box with 2*dim facets and 2^dim vertices.
  static Polytope axis_aligned_box(const RVector& lo, const RVector& hi);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<RVector>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& vertex_active_sets() const {
    return active_sets_;
  }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Appends the normalized half-space and updates the vertex set. Returns
  /// Duplicate (and leaves the polytope unchanged) when an existing
  /// half-space matches within 1e-10 in both normal and offset. Throws
  /// AbortTooManyVertices when the vertex set would exceed the limit.
  CutResult add_cut(const HalfSpace& h);

  void set_vertex_limit(std::size_t limit) { vertex_limit_ = limit; }
  std::size_t vertex_limit() const { return vertex_limit_; }

  /// Count of skipped near-parallel edge intersections (diagnostic).
  std::size_t degeneracy_count() const { return degeneracy_count_; }

  /// Plain-text dump of both representations, one constraint/vertex per line.
  void dump(std::ostream& os) const;

 private:
  Polytope() = default;

  int dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RVector> vertices_;
  std::vector<std::vector<int>> active_sets_;  // sorted constraint indices
  std::size_t vertex_limit_ = kDefaultVertexLimit;
  std::size_t degeneracy_count_ = 0;
};

/// Initial outer approximation of the feasible set in z-space. Seeds the
/// vertex set with the coordinate bounding box obtained from support-function
/// evaluations along the columns of Q (each facet is itself a valid
/// constraint), then adds the spectral box constraints
///   +-(Qz)_i <= lambda_max(+-E_i) -+ s_i
/// and, when use_pairs is set, the pairwise constraints from the spectra of
/// E_i + E_j. Duplicates are skipped.
Polytope initial_polytope(const AffineModel& model, const Povm& povm,
                          bool use_pairs,
                          std::size_t vertex_limit = kDefaultVertexLimit);

}  // namespace eurbound
