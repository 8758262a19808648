#include "eurbound/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "eurbound/kernels.hpp"

namespace eurbound {

namespace {

// classification band around a cut hyperplane; vertices inside the band are
// kept and marked active (below the solver gap targets, above eigenresidual
// noise)
constexpr double kOnTol = 1e-9;
constexpr double kDedupTol = 1e-8;
constexpr double kDuplicateHalfspaceTol = 1e-10;

int common_active_count(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

std::vector<int> merge_active(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

HalfSpace HalfSpace::normalized(RVector a, double b) {
  const double norm = a.norm();
  if (!(norm > 1e-14) || !a.allFinite() || !std::isfinite(b)) {
    throw OutOfRange("halfspace: normal is zero or not finite");
  }
  return {a / norm, b / norm};
}

Polytope Polytope::axis_aligned_box(const RVector& lo, const RVector& hi) {
  const auto r = static_cast<int>(lo.size());
  if (r < 1 || hi.size() != r) {
    throw DimensionMismatch("box: bound vectors empty or mismatched");
  }
  if (!lo.allFinite() || !hi.allFinite()) {
    throw Unbounded("box: non-finite coordinate bound");
  }
  for (int k = 0; k < r; ++k) {
    if (hi(k) < lo(k)) {
      throw OutOfRange("box: upper bound below lower bound");
    }
  }
  if (r >= 30 || (std::size_t{1} << r) > kDefaultVertexLimit) {
    throw AbortTooManyVertices("box: 2^dim seed vertices exceed the limit");
  }
  Polytope poly;
  poly.dim_ = r;
  poly.halfspaces_.reserve(static_cast<std::size_t>(2 * r));
  for (int k = 0; k < r; ++k) {
    RVector up = RVector::Zero(r);
    up(k) = 1.0;
    poly.halfspaces_.push_back({up, hi(k)});  // index 2k
    RVector down = RVector::Zero(r);
    down(k) = -1.0;
    poly.halfspaces_.push_back({down, -lo(k)});  // index 2k+1
  }
  const std::size_t corners = std::size_t{1} << r;
  poly.vertices_.reserve(corners);
  poly.active_sets_.reserve(corners);
  for (std::size_t mask = 0; mask < corners; ++mask) {
    RVector v(r);
    std::vector<int> active(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      const bool upper = (mask >> k) & 1U;
      v(k) = upper ? hi(k) : lo(k);
      active[static_cast<std::size_t>(k)] = upper ? 2 * k : 2 * k + 1;
    }
    std::sort(active.begin(), active.end());
    poly.vertices_.push_back(std::move(v));
    poly.active_sets_.push_back(std::move(active));
  }
  return poly;
}

CutResult Polytope::add_cut(const HalfSpace& h) {
  if (h.normal.size() != dim_) {
    throw DimensionMismatch("add_cut: wrong dimension");
  }
  for (const auto& existing : halfspaces_) {
    if ((existing.normal - h.normal).norm() <= kDuplicateHalfspaceTol &&
        std::abs(existing.offset - h.offset) <= kDuplicateHalfspaceTol) {
      return CutResult::Duplicate;
    }
  }
  const int cut_index = static_cast<int>(halfspaces_.size());

  std::vector<double> slack;
  halfspace_slacks(vertices_, h.normal, h.offset, slack);

  std::vector<std::size_t> cut_ids;
  std::size_t survivors = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (slack[i] < -kOnTol) {
      cut_ids.push_back(i);
    } else {
      ++survivors;
    }
  }
  if (cut_ids.empty()) {
    // redundant or touching cut: only active sets change
    halfspaces_.push_back(h);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (std::abs(slack[i]) <= kOnTol) {
        active_sets_[i].push_back(cut_index);  // cut_index > all others, stays sorted
      }
    }
    return CutResult::Added;
  }
  if (survivors == 0) {
    throw OutOfRange("add_cut: constraint removes every vertex");
  }

  // edge intersections from strictly-kept / cut adjacent pairs; a vertex in
  // the on-plane band already realizes its edge intersections
  std::vector<RVector> fresh;
  std::vector<std::vector<int>> fresh_active;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    if (slack[u] <= kOnTol) continue;
    for (const std::size_t w : cut_ids) {
      if (common_active_count(active_sets_[u], active_sets_[w]) < dim_ - 1) {
        continue;
      }
      const double denom = slack[u] - slack[w];
      if (denom <= 1e-300) {
        ++degeneracy_count_;
        continue;
      }
      const double t = slack[u] / denom;
      std::vector<int> active;
      std::set_intersection(active_sets_[u].begin(), active_sets_[u].end(),
                            active_sets_[w].begin(), active_sets_[w].end(),
                            std::back_inserter(active));
      active.push_back(cut_index);
      fresh.push_back(vertices_[u] + t * (vertices_[w] - vertices_[u]));
      fresh_active.push_back(std::move(active));
      if (survivors + fresh.size() > vertex_limit_) {
        throw AbortTooManyVertices("add_cut: vertex limit exceeded");
      }
    }
  }

  std::vector<RVector> next;
  std::vector<std::vector<int>> next_active;
  next.reserve(survivors + fresh.size());
  std::vector<std::size_t> on_plane;  // indices into next, dedup candidates
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (slack[i] < -kOnTol) continue;
    if (std::abs(slack[i]) <= kOnTol) {
      active_sets_[i].push_back(cut_index);
      on_plane.push_back(next.size());
    }
    next.push_back(std::move(vertices_[i]));
    next_active.push_back(std::move(active_sets_[i]));
  }
  for (std::size_t f = 0; f < fresh.size(); ++f) {
    bool merged = false;
    for (const std::size_t g : on_plane) {
      if ((next[g] - fresh[f]).norm() <= kDedupTol) {
        next_active[g] = merge_active(next_active[g], fresh_active[f]);
        merged = true;
        break;
      }
    }
    if (!merged) {
      on_plane.push_back(next.size());
      next.push_back(std::move(fresh[f]));
      next_active.push_back(std::move(fresh_active[f]));
    }
  }

  if (next.size() > vertex_limit_) {
    throw AbortTooManyVertices("add_cut: vertex limit exceeded");
  }
  halfspaces_.push_back(h);
  vertices_ = std::move(next);
  active_sets_ = std::move(next_active);
  return CutResult::Added;
}

void Polytope::dump(std::ostream& os) const {
  for (const auto& h : halfspaces_) {
    os << "H";
    for (Eigen::Index k = 0; k < h.normal.size(); ++k) os << ' ' << h.normal(k);
    os << ' ' << h.offset << '\n';
  }
  for (const auto& v : vertices_) {
    os << "V";
    for (Eigen::Index k = 0; k < v.size(); ++k) os << ' ' << v(k);
    os << '\n';
  }
}

Polytope initial_polytope(const AffineModel& model, const Povm& povm,
                          bool use_pairs, std::size_t vertex_limit) {
  const int r = model.reduced_rank;
  if (r < 1) {
    throw OutOfRange("initial_polytope: model has reduced rank 0");
  }
  const int m = povm.size();
  RVector lo(r);
  RVector hi(r);
  for (int k = 0; k < r; ++k) {
    const RVector u = model.Q.col(k);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(observable(povm, u));
    if (solver.info() != Eigen::Success) {
      throw ConvergenceFailure("initial_polytope: coordinate bound eigensolve failed");
    }
    const double shift = u.dot(model.s);
    // tiny outward pad keeps the seed cell full-dimensional; its facets stay
    // valid outer constraints
    const double pad = 1e-13 * (1.0 + solver.eigenvalues().cwiseAbs().maxCoeff());
    lo(k) = solver.eigenvalues()(0) - shift - pad;
    hi(k) = solver.eigenvalues()(povm.dim() - 1) - shift + pad;
    if (!std::isfinite(lo(k)) || !std::isfinite(hi(k))) {
      throw Unbounded("initial_polytope: non-finite coordinate bound");
    }
  }
  Polytope poly = Polytope::axis_aligned_box(lo, hi);
  poly.set_vertex_limit(vertex_limit);

  const auto add_spectral_cut = [&](const RVector& row, const CMatrix& op,
                                    double s_total) {
    if (row.norm() <= 1e-12) return;  // outcome probability constant on the model span
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(op);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceFailure("initial_polytope: spectral cut eigensolve failed");
    }
    const double lambda_lo = solver.eigenvalues()(0);
    const double lambda_hi = solver.eigenvalues()(povm.dim() - 1);
    poly.add_cut(HalfSpace::normalized(row, lambda_hi - s_total));
    poly.add_cut(HalfSpace::normalized(-row, -lambda_lo + s_total));
  };

  for (int i = 0; i < m; ++i) {
    add_spectral_cut(model.Q.row(i).transpose(), povm.element(i), model.s(i));
  }
  if (use_pairs) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        add_spectral_cut(
            (model.Q.row(i) + model.Q.row(j)).transpose(),
            povm.element(i) + povm.element(j), model.s(i) + model.s(j));
      }
    }
  }
  return poly;
}

}  // namespace eurbound
