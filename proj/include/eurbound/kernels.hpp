#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "eurbound/affine.hpp"
#include "eurbound/entropy.hpp"

namespace eurbound {

// Data-parallel inner loops of the solver. Each kernel has a serial
// reference implementation kept for testing and benchmarking; the default
// entry points use OpenMP when available and are required to produce
// bit-identical results for any thread count (per-vertex work is
// independent, reductions merge per-thread candidates in index order).

struct VertexScan {
  std::ptrdiff_t index = -1;
  double value = std::numeric_limits<double>::infinity();
};

/// Lowest-index minimizer of H(clamp(s + Q z)) over the vertex list.
VertexScan min_entropy_vertex(const std::vector<RVector>& vertices,
                              const RMatrix& q, const RVector& s,
                              const EntropySpec& spec);
VertexScan min_entropy_vertex_serial(const std::vector<RVector>& vertices,
                                     const RMatrix& q, const RVector& s,
                                     const EntropySpec& spec);

/// Signed slacks b - <a, v> for every vertex.
void halfspace_slacks(const std::vector<RVector>& vertices, const RVector& a,
                      double b, std::vector<double>& out);
void halfspace_slacks_serial(const std::vector<RVector>& vertices,
                             const RVector& a, double b,
                             std::vector<double>& out);

}  // namespace eurbound
