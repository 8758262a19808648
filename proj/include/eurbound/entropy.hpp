#pragma once

#include <vector>

#include "eurbound/quantum.hpp"

namespace eurbound {

enum class EntropyFamily { Shannon, Tsallis, Renyi };

const char* family_name(EntropyFamily family);

/// Entropy functional in nats. Tsallis/Renyi require alpha in
/// (0,1) or (1,inf); clamp_epsilon is the probability floor applied before
/// gradient evaluation (the Shannon gradient diverges at p = 0).
struct EntropySpec {
  EntropyFamily family = EntropyFamily::Shannon;
  double alpha = 1.0;
  double clamp_epsilon = 1e-12;

  static EntropySpec shannon() { return {EntropyFamily::Shannon, 1.0, 1e-12}; }
  static EntropySpec tsallis(double alpha) { return {EntropyFamily::Tsallis, alpha, 1e-12}; }
  static EntropySpec renyi(double alpha) { return {EntropyFamily::Renyi, alpha, 1e-12}; }

  void check() const;
};

/// Entropy of a probability vector. Entries below -1e-10 or a total off 1 by
/// more than 1e-8 raise InvalidDistribution; small negatives are clamped to 0
/// and Shannon uses the 0*ln(0) = 0 convention.
double entropy_value(const EntropySpec& spec, const RVector& p);

/// Entropy of a possibly slightly-infeasible vector (e.g. an outer-polytope
/// vertex image): negatives clamp to 0, entries above 1 clamp to 1, and the
/// vector is renormalized only when the total drifts from 1 by more than 1e-8.
double entropy_value_clamped(const EntropySpec& spec, RVector p);

/// Componentwise gradient with entries floored at clamp_epsilon first.
RVector entropy_gradient(const EntropySpec& spec, const RVector& p);

/// Renyi and Tsallis entropies of one distribution are linked by the strictly
/// monotone map H_R = ln(1 + (1-alpha) H_T) / (1-alpha).
double tsallis_to_renyi(double h_tsallis, double alpha);

/// Uncertainty bounds for N measurement settings derived from the minimal
/// entropy h_min of the effective measurement (h_min taken in the family's
/// own entropy scale):
///   q_tsallis     = N^alpha h_min - (N - N^alpha)/(1 - alpha)
///   q_renyi       = h_min
///   q_shannon_sum = N h_min - N ln N   (Shannon only)
struct EurBounds {
  double h_min = 0.0;
  double q_tsallis = 0.0;
  double q_renyi = 0.0;
  double q_shannon_sum = 0.0;  // NaN unless the family is Shannon
  int n_measurements = 1;
  double alpha = 1.0;
};

EurBounds eur_bounds_from_hmin(double h_min, int n, const EntropySpec& spec);

/// |sum_i H_T(p_i) - (N^alpha H_T(q) - (N - N^alpha)/(1-alpha))| for the
/// scaled concatenation q = (1/N) (p_1 ++ ... ++ p_N). Zero in exact
/// arithmetic; exposed as a test utility.
double tsallis_concat_identity_check(const std::vector<RVector>& ps, double alpha);

}  // namespace eurbound
