#pragma once

#include "eurbound/quantum.hpp"

namespace eurbound {

/// Affine description of the reachable outcome distributions: p = s + Q z,
/// where s is the distribution of the maximally mixed state and Q holds the
/// first r left-singular vectors of the Bloch coefficient matrix M
/// (M_{mu,nu} = Tr[E_mu pi_nu] / 2). reduced_rank == 0 means every state
/// yields the same distribution s.
struct AffineModel {
  Povm povm;
  RVector s;                // m entries, s_mu = Tr[E_mu]/d
  RMatrix Q;                // m x r, orthonormal columns
  RVector singular_values;  // r entries, descending
  int reduced_rank = 0;

  int outcomes() const { return static_cast<int>(s.size()); }
};

/// Rank cut: keep singular values above tol_rank * sigma_max.
AffineModel build_affine_model(const Povm& povm, double tol_rank = 1e-10);

/// The Bloch coefficient matrix, materialized. Row mu holds Tr[E_mu pi_nu]/2
/// in the gell_mann_basis ordering; entries are computed in closed form from
/// the matrix elements of E_mu, so the generators are never built densely.
RMatrix bloch_coefficient_matrix(const Povm& povm);

/// Effective observable Omega(u) = sum_i u_i E_i.
CMatrix observable(const Povm& povm, const RVector& u);

struct SupportEvaluation {
  RVector direction;
  double value = 0.0;
  CVector maximizer;
};

/// Support function of the quantum probability space:
/// sigma_P(u) = lambda_max(Omega(u)), attained on the top eigenstate.
SupportEvaluation support_function(const Povm& povm, const RVector& u);

RVector z_to_probability(const AffineModel& model, const RVector& z);

/// Orthonormal projection z = Q^T (p(state) - s).
RVector state_to_z(const AffineModel& model, const CVector& state);

namespace detail {
// Gram-route factorization (via M M^T, which has closed form
// (Tr[E_mu E_nu] - d s_mu s_nu)/2); used when materializing M would exceed
// the column budget, exposed for cross-validation against the direct SVD.
// Squaring halves the usable precision, so the rank tolerance is floored at
// ~sqrt(machine epsilon).
void gram_factorization(const Povm& povm, double tol_rank, RMatrix& q_out,
                        RVector& sigma_out);
}  // namespace detail

}  // namespace eurbound
