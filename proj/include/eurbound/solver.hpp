#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eurbound/entropy.hpp"
#include "eurbound/polytope.hpp"

namespace eurbound {

struct SolverConfig {
  double epsilon = 1e-6;  // target gap h_plus - h_minus
  int max_iterations = 500;
  bool use_pair_constraints = true;
  std::size_t vertex_limit = kDefaultVertexLimit;
  EntropySpec entropy{};
  double rank_tolerance = 1e-10;
  // optional extra upper-bound probes from ground states of Omega(u) along
  // seeded random directions u before the main loop
  int multistart_directions = 0;
  std::uint64_t multistart_seed = 0;

  void check() const;
};

enum class SolveStatus { Converged, MaxIterations, Stalled };

const char* status_name(SolveStatus status);

/// Per-iteration snapshot. h_minus is the vertex lower bound of this
/// iteration, h_plus the best physical upper bound seen so far; both are in
/// the requested entropy's scale. cut_normal has size 0 when the iteration
/// ended the loop without adding a cut.
struct IterationRecord {
  int index = 0;
  double h_minus = 0.0;
  double h_plus = 0.0;
  double gap = 0.0;
  RVector optimal_vertex_z;
  RVector witness_probabilities;
  RVector cut_normal;
  std::size_t vertex_count = 0;
};

/// Proof object: h(E) lies in [final_h_minus, final_h_plus]; the witness
/// state attains final_h_plus.
struct BoundCertificate {
  SolverConfig config;
  std::vector<IterationRecord> iterations;
  double final_h_minus = 0.0;
  double final_h_plus = 0.0;
  bool converged = false;
  SolveStatus status = SolveStatus::Converged;
  CVector witness_state;
};

/// Entropy-minimizing vertex of the current outer polytope, evaluated on
/// clamped probabilities; ties break to the lowest vertex index.
std::pair<RVector, double> lower_bound_step(const Polytope& poly,
                                            const AffineModel& model,
                                            const EntropySpec& spec);

/// Physical upper bound: ground state of Omega(grad H(p(z_star))) and the
/// entropy of its outcome distribution.
std::pair<CVector, double> upper_bound_step(const AffineModel& model,
                                            const Povm& povm,
                                            const RVector& z_star,
                                            const EntropySpec& spec);

/// Outer-approximation loop: certified two-sided bounds on the minimal
/// entropy of the measurement over all states. Renyi objectives with
/// alpha > 1 are not concave, so the loop internally minimizes the Tsallis
/// entropy of the same distribution (same minimizer, strictly monotone link)
/// and reports bounds mapped back to the Renyi scale.
BoundCertificate minimize_entropy(const Povm& povm, const SolverConfig& config);

}  // namespace eurbound
