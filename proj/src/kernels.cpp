#include "eurbound/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eurbound {

namespace {

inline double vertex_objective(const RVector& z, const RMatrix& q,
                               const RVector& s, const EntropySpec& spec,
                               RVector& scratch) {
  scratch = s;
  scratch.noalias() += q * z;
  return entropy_value_clamped(spec, scratch);
}

inline bool better(double value, std::ptrdiff_t index, const VertexScan& best) {
  return value < best.value || (value == best.value && index < best.index);
}

}  // namespace

VertexScan min_entropy_vertex_serial(const std::vector<RVector>& vertices,
                                     const RMatrix& q, const RVector& s,
                                     const EntropySpec& spec) {
  VertexScan best;
  RVector scratch(s.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double h = vertex_objective(vertices[i], q, s, spec, scratch);
    const auto idx = static_cast<std::ptrdiff_t>(i);
    if (better(h, idx, best)) best = {idx, h};
  }
  return best;
}

VertexScan min_entropy_vertex(const std::vector<RVector>& vertices,
                              const RMatrix& q, const RVector& s,
                              const EntropySpec& spec) {
#ifdef _OPENMP
  if (vertices.size() < 64) {
    return min_entropy_vertex_serial(vertices, q, s, spec);
  }
  const auto n = static_cast<std::ptrdiff_t>(vertices.size());
  VertexScan best;
#pragma omp parallel
  {
    VertexScan local;
    RVector scratch(s.size());
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double h =
          vertex_objective(vertices[static_cast<std::size_t>(i)], q, s, spec, scratch);
      if (better(h, i, local)) local = {i, h};
    }
#pragma omp critical(eurbound_vertex_scan)
    {
      // comparator is a total order on (value, index), so the merge result
      // does not depend on thread arrival order
      if (local.index >= 0 && better(local.value, local.index, best)) best = local;
    }
  }
  return best;
#else
  return min_entropy_vertex_serial(vertices, q, s, spec);
#endif
}

void halfspace_slacks_serial(const std::vector<RVector>& vertices,
                             const RVector& a, double b,
                             std::vector<double>& out) {
  out.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out[i] = b - a.dot(vertices[i]);
  }
}

void halfspace_slacks(const std::vector<RVector>& vertices, const RVector& a,
                      double b, std::vector<double>& out) {
#ifdef _OPENMP
  if (vertices.size() < 512) {
    halfspace_slacks_serial(vertices, a, b, out);
    return;
  }
  out.resize(vertices.size());
  const auto n = static_cast<std::ptrdiff_t>(vertices.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = b - a.dot(vertices[static_cast<std::size_t>(i)]);
  }
#else
  halfspace_slacks_serial(vertices, a, b, out);
#endif
}

}  // namespace eurbound
