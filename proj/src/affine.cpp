#include "eurbound/affine.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace eurbound {

namespace {

// Columns of M beyond this are not materialized; the SVD factors are then
// recovered from the m x m Gram matrix instead.
constexpr Eigen::Index kColumnBudget = 1'000'000;

RVector mixed_state_distribution(const Povm& povm) {
  RVector s(povm.size());
  for (int i = 0; i < povm.size(); ++i) {
    s(i) = std::real(povm.element(i).trace()) / povm.dim();
  }
  return s;
}

}  // namespace

RMatrix bloch_coefficient_matrix(const Povm& povm) {
  const int d = povm.dim();
  const Eigen::Index gens = static_cast<Eigen::Index>(d) * d - 1;
  RMatrix m(povm.size(), gens);
  const Eigen::Index pairs = static_cast<Eigen::Index>(d) * (d - 1) / 2;
  for (int mu = 0; mu < povm.size(); ++mu) {
    const CMatrix& e = povm.element(mu);
    Eigen::Index idx = 0;
    // Tr[E (|j><k| + |k><j|)]/2 = Re E_jk
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        m(mu, idx) = std::real(e(j, k));
        m(mu, idx + pairs) = -std::imag(e(j, k));  // antisymmetric partner
        ++idx;
      }
    }
    idx = 2 * pairs;
    for (int l = 1; l < d; ++l) {
      const double c = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
      double acc = 0.0;
      for (int j = 0; j < l; ++j) acc += std::real(e(j, j));
      acc -= static_cast<double>(l) * std::real(e(l, l));
      m(mu, idx++) = 0.5 * c * acc;
    }
  }
  return m;
}

namespace detail {

void gram_factorization(const Povm& povm, double tol_rank, RMatrix& q_out,
                        RVector& sigma_out) {
  const int m = povm.size();
  const double d = povm.dim();
  const RVector s = mixed_state_distribution(povm);
  RMatrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double overlap =
          std::real((povm.element(i) * povm.element(j)).trace());
      const double g = 0.5 * (overlap - d * s(i) * s(j));
      gram(i, j) = g;
      gram(j, i) = g;
    }
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("affine: Gram eigensolve failed");
  }
  const RVector evals = solver.eigenvalues();  // ascending
  const double lambda_max = std::max(evals(m - 1), 0.0);
  const double sigma_max = std::sqrt(lambda_max);
  const double tol = std::max(tol_rank, 3e-8) * sigma_max;
  std::vector<int> keep;
  for (int i = m - 1; i >= 0; --i) {
    if (evals(i) > 0.0 && std::sqrt(evals(i)) > tol) keep.push_back(i);
  }
  const int r = static_cast<int>(keep.size());
  q_out.resize(m, r);
  sigma_out.resize(r);
  for (int c = 0; c < r; ++c) {
    q_out.col(c) = solver.eigenvectors().col(keep[static_cast<std::size_t>(c)]);
    sigma_out(c) = std::sqrt(evals(keep[static_cast<std::size_t>(c)]));
  }
}

}  // namespace detail

AffineModel build_affine_model(const Povm& povm, double tol_rank) {
  if (!(tol_rank > 0.0)) {
    throw OutOfRange("affine: tol_rank must be positive");
  }
  AffineModel model{povm, mixed_state_distribution(povm), {}, {}, 0};
  const Eigen::Index gens =
      static_cast<Eigen::Index>(povm.dim()) * povm.dim() - 1;
  if (gens <= kColumnBudget) {
    const RMatrix m = bloch_coefficient_matrix(povm);
    Eigen::BDCSVD<RMatrix> svd(m, Eigen::ComputeThinU);
    const RVector sigmas = svd.singularValues();
    const double sigma_max = sigmas.size() > 0 ? sigmas(0) : 0.0;
    int r = 0;
    while (r < sigmas.size() && sigmas(r) > tol_rank * sigma_max) ++r;
    if (sigma_max <= 0.0) r = 0;
    model.Q = svd.matrixU().leftCols(r);
    model.singular_values = sigmas.head(r);
    model.reduced_rank = r;
  } else {
    detail::gram_factorization(povm, tol_rank, model.Q, model.singular_values);
    model.reduced_rank = static_cast<int>(model.Q.cols());
  }
  return model;
}

CMatrix observable(const Povm& povm, const RVector& u) {
  if (u.size() != povm.size()) {
    throw DimensionMismatch("observable: direction length != outcome count");
  }
  CMatrix omega = CMatrix::Zero(povm.dim(), povm.dim());
  for (int i = 0; i < povm.size(); ++i) {
    omega += u(i) * povm.element(i);
  }
  return omega;
}

SupportEvaluation support_function(const Povm& povm, const RVector& u) {
  if (!u.allFinite()) {
    throw OutOfRange("support_function: direction is not finite");
  }
  const EigenPair top = max_eigen(observable(povm, u));
  return {u, top.value, top.vector};
}

RVector z_to_probability(const AffineModel& model, const RVector& z) {
  if (z.size() != model.reduced_rank) {
    throw DimensionMismatch("z_to_probability: wrong reduced dimension");
  }
  if (model.reduced_rank == 0) return model.s;
  return model.s + model.Q * z;
}

RVector state_to_z(const AffineModel& model, const CVector& state) {
  const RVector p = probabilities(model.povm, state);
  if (model.reduced_rank == 0) return RVector::Zero(0);
  return model.Q.transpose() * (p - model.s);
}

}  // namespace eurbound
