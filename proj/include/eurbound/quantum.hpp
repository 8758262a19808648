#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "eurbound/errors.hpp"

namespace eurbound {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-10;

CMatrix hermitian_part(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tol = kHermitianTol);

/// Multiplies by a global phase so the first component with magnitude above
/// 1e-12 becomes real and nonnegative. Keeps eigenvector output reproducible.
CVector fix_phase(CVector v);

struct EigenPair {
  double value = 0.0;
  CVector vector;
};

// Largest/smallest eigenpair of a dense Hermitian matrix. The eigenvector is
// phase-fixed; throws ConvergenceFailure if the solver does not converge.
EigenPair max_eigen(const CMatrix& h);
EigenPair min_eigen(const CMatrix& h);

/// A positive operator-valued measure: m >= 2 positive semi-definite
/// operators on C^d summing to the identity. Construction is validating;
/// instances are immutable and safe to share across threads.
class Povm {
 public:
  /// Symmetrizes each element as (E + E^dagger)/2, then checks positivity
  /// (min eigenvalue >= -1e-10) and completeness (Frobenius distance of the
  /// sum from the identity <= 1e-10).
  static Povm validate(std::vector<CMatrix> elements);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const CMatrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<CMatrix>& elements() const { return elements_; }

 private:
  Povm(int dim, std::vector<CMatrix> elements)
      : dim_(dim), elements_(std::move(elements)) {}

  int dim_;
  std::vector<CMatrix> elements_;
};

/// Effective measurement for N settings: each element scaled by 1/N, blocks
/// concatenated in input order.
Povm combine_povms(const std::vector<Povm>& povms);

/// Generalized Gell-Mann matrices for su(d), normalized as
/// Tr[pi_mu pi_nu] = 2 delta_mu_nu. Ordering: symmetric pairs (j<k in
/// lexicographic order), then antisymmetric pairs (same order), then the
/// d-1 diagonal generators.
std::vector<CMatrix> gell_mann_basis(int d);

/// Born-rule outcome distribution <psi|E_mu|psi>, entries clamped to [0,1].
RVector probabilities(const Povm& povm, const CVector& state);

/// Deterministic scalar Gaussians: mt19937_64 -> 53-bit uniforms -> Box-Muller.
/// Avoids std::normal_distribution, whose output is implementation-defined.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double uniform01();  // in [0, 1)
  double normal();
  Cplx complex_normal();  // independent N(0,1) real and imaginary parts

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random POVM from the Ginibre construction: A_i with i.i.d. standard
/// complex Gaussian entries, G_i = A_i A_i^dagger, E_i = S^{-1/2} G_i S^{-1/2}
/// with S = sum_i G_i. Deterministic for a fixed seed.
Povm random_haar_povm(int d, int m, std::uint64_t seed);

/// Normalized d-vector with i.i.d. complex Gaussian entries.
CVector random_pure_state(int d, std::uint64_t seed);

/// Stateless seed mixer (splitmix64) for per-index substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace eurbound
