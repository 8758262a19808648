#include "eurbound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eurbound/kernels.hpp"

namespace eurbound {

namespace {

constexpr double kCutViolationFloor = 1e-12;
constexpr double kStallImprovement = 1e-14;
constexpr int kStallWindow = 10;

RVector clamped_probability(const AffineModel& model, const RVector& z) {
  RVector p = z_to_probability(model, z);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    p(i) = std::clamp(p(i), 0.0, 1.0);
    sum += p(i);
  }
  if (std::abs(sum - 1.0) > 1e-8 && sum > 0.0) p /= sum;
  return p;
}

}  // namespace

void SolverConfig::check() const {
  if (!(epsilon > 0.0)) throw OutOfRange("solver: epsilon must be positive");
  if (max_iterations < 1) throw OutOfRange("solver: max_iterations must be >= 1");
  if (!(rank_tolerance > 0.0)) throw OutOfRange("solver: rank_tolerance must be positive");
  entropy.check();
}

const char* status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::Stalled: return "stalled";
  }
  return "unknown";
}

std::pair<RVector, double> lower_bound_step(const Polytope& poly,
                                            const AffineModel& model,
                                            const EntropySpec& spec) {
  const VertexScan scan =
      min_entropy_vertex(poly.vertices(), model.Q, model.s, spec);
  if (scan.index < 0) {
    throw OutOfRange("lower_bound_step: polytope has no vertices");
  }
  return {poly.vertices()[static_cast<std::size_t>(scan.index)], scan.value};
}

std::pair<CVector, double> upper_bound_step(const AffineModel& model,
                                            const Povm& povm,
                                            const RVector& z_star,
                                            const EntropySpec& spec) {
  const RVector p_poly = clamped_probability(model, z_star);
  const RVector g = entropy_gradient(spec, p_poly);
  const EigenPair ground = min_eigen(observable(povm, g));
  const RVector p_real = probabilities(povm, ground.vector);
  return {ground.vector, entropy_value(spec, p_real)};
}

BoundCertificate minimize_entropy(const Povm& povm, const SolverConfig& config) {
  config.check();
  const EntropySpec requested = config.entropy;
  // Renyi is minimized through the Tsallis entropy of the same distribution
  const bool via_tsallis = requested.family == EntropyFamily::Renyi;
  EntropySpec objective = requested;
  if (via_tsallis) objective.family = EntropyFamily::Tsallis;
  const auto to_requested = [&](double h) {
    return via_tsallis ? tsallis_to_renyi(h, requested.alpha) : h;
  };

  BoundCertificate cert;
  cert.config = config;

  const AffineModel model = build_affine_model(povm, config.rank_tolerance);
  if (model.reduced_rank == 0) {
    // state-independent outcome distribution: h(E) = H(s) exactly
    const double h = entropy_value(requested, model.s);
    IterationRecord rec;
    rec.index = 0;
    rec.h_minus = h;
    rec.h_plus = h;
    rec.gap = 0.0;
    rec.witness_probabilities = model.s;
    rec.vertex_count = 0;
    cert.iterations.push_back(std::move(rec));
    cert.final_h_minus = h;
    cert.final_h_plus = h;
    cert.converged = true;
    cert.status = SolveStatus::Converged;
    cert.witness_state = CVector::Unit(povm.dim(), 0);
    return cert;
  }

  Polytope poly = initial_polytope(model, povm, config.use_pair_constraints,
                                   config.vertex_limit);

  double best_lower = -std::numeric_limits<double>::infinity();
  double best_upper = std::numeric_limits<double>::infinity();
  CVector witness = CVector::Unit(povm.dim(), 0);

  for (int j = 0; j < config.multistart_directions; ++j) {
    GaussianSource gauss(mix_seed(config.multistart_seed, static_cast<std::uint64_t>(j)));
    RVector u(povm.size());
    for (int i = 0; i < povm.size(); ++i) u(i) = gauss.normal();
    const EigenPair ground = min_eigen(observable(povm, u));
    const double h = entropy_value(objective, probabilities(povm, ground.vector));
    if (h < best_upper) {
      best_upper = h;
      witness = ground.vector;
    }
  }

  cert.status = SolveStatus::MaxIterations;
  int stall_count = 0;
  for (int k = 0; k < config.max_iterations; ++k) {
    const auto [z_star, h_lower] = lower_bound_step(poly, model, objective);
    if (h_lower > best_lower + kStallImprovement) {
      stall_count = 0;
    } else {
      ++stall_count;
    }
    best_lower = std::max(best_lower, h_lower);

    const RVector p_poly = clamped_probability(model, z_star);
    const RVector g = entropy_gradient(objective, p_poly);
    const EigenPair ground = min_eigen(observable(povm, g));
    const RVector p_real = probabilities(povm, ground.vector);
    const double h_upper = entropy_value(objective, p_real);
    if (h_upper < best_upper) {
      best_upper = h_upper;
      witness = ground.vector;
    }

    IterationRecord rec;
    rec.index = k;
    rec.h_minus = to_requested(h_lower);
    rec.h_plus = to_requested(best_upper);
    rec.gap = rec.h_plus - rec.h_minus;
    rec.optimal_vertex_z = z_star;
    rec.witness_probabilities = p_real;
    rec.vertex_count = poly.vertex_count();

    const double gap = to_requested(best_upper) - to_requested(best_lower);
    if (gap <= config.epsilon) {
      cert.status = SolveStatus::Converged;
      cert.iterations.push_back(std::move(rec));
      break;
    }
    if (stall_count >= kStallWindow) {
      cert.status = SolveStatus::Stalled;
      cert.iterations.push_back(std::move(rec));
      break;
    }

    // support cut in the descent direction -g:  -(g^T Q) z <= h_val + g^T s
    // with h_val = lambda_max(-Omega(g)) = -lambda_min(Omega(g))
    const RVector normal = -(model.Q.transpose() * g);
    const double offset = -ground.value + g.dot(model.s);
    const double scale = normal.norm();
    if (scale <= 1e-14) {
      cert.status = SolveStatus::Stalled;
      cert.iterations.push_back(std::move(rec));
      break;
    }
    const double violation = (normal.dot(z_star) - offset) / scale;
    if (violation < kCutViolationFloor) {
      cert.status = SolveStatus::Stalled;
      cert.iterations.push_back(std::move(rec));
      break;
    }
    const HalfSpace cut = HalfSpace::normalized(normal, offset);
    if (poly.add_cut(cut) == CutResult::Duplicate) {
      cert.status = SolveStatus::Stalled;
      cert.iterations.push_back(std::move(rec));
      break;
    }
    rec.cut_normal = cut.normal;
    cert.iterations.push_back(std::move(rec));
  }

  cert.final_h_minus = to_requested(best_lower);
  cert.final_h_plus = to_requested(best_upper);
  cert.converged = cert.status == SolveStatus::Converged;
  cert.witness_state = witness;
  return cert;
}

}  // namespace eurbound
