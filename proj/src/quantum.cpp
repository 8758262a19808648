#include "eurbound/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace eurbound {

CMatrix hermitian_part(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CVector fix_phase(CVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > 1e-12) {
      v *= std::conj(v(i)) / m;
      break;
    }
  }
  return v;
}

namespace {

Eigen::SelfAdjointEigenSolver<CMatrix> solve_hermitian(const CMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionMismatch("eigen: matrix is not square");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(h));
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigen: Hermitian eigensolver did not converge");
  }
  return solver;
}

}  // namespace

EigenPair max_eigen(const CMatrix& h) {
  const auto solver = solve_hermitian(h);
  const Eigen::Index last = h.rows() - 1;
  return {solver.eigenvalues()(last), fix_phase(solver.eigenvectors().col(last))};
}

EigenPair min_eigen(const CMatrix& h) {
  const auto solver = solve_hermitian(h);
  return {solver.eigenvalues()(0), fix_phase(solver.eigenvectors().col(0))};
}

Povm Povm::validate(std::vector<CMatrix> elements) {
  if (elements.size() < 2) {
    throw NotComplete("povm: needs at least two elements");
  }
  const Eigen::Index d = elements.front().rows();
  if (d < 1 || elements.front().cols() != d) {
    throw DimensionMismatch("povm: elements must be square");
  }
  for (auto& e : elements) {
    if (e.rows() != d || e.cols() != d) {
      throw DimensionMismatch("povm: elements have mixed dimensions");
    }
    e = hermitian_part(e);  // tolerate parser-level asymmetry
  }
  CMatrix sum = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto solver = solve_hermitian(elements[i]);
    const double lambda_min = solver.eigenvalues()(0);
    if (lambda_min < -kPsdTol) {
      std::ostringstream msg;
      msg << "povm: element " << i << " has eigenvalue " << lambda_min;
      throw NotPositive(msg.str());
    }
    sum += elements[i];
  }
  const double defect = (sum - CMatrix::Identity(d, d)).norm();
  if (defect > kCompletenessTol) {
    std::ostringstream msg;
    msg << "povm: element sum deviates from identity by " << defect;
    throw NotComplete(msg.str());
  }
  return Povm(static_cast<int>(d), std::move(elements));
}

Povm combine_povms(const std::vector<Povm>& povms) {
  if (povms.empty()) {
    throw DimensionMismatch("combine: empty measurement list");
  }
  const int d = povms.front().dim();
  const double scale = 1.0 / static_cast<double>(povms.size());
  std::vector<CMatrix> elements;
  for (const auto& p : povms) {
    if (p.dim() != d) {
      throw DimensionMismatch("combine: measurements act on different dimensions");
    }
    for (const auto& e : p.elements()) {
      elements.push_back(scale * e);
    }
  }
  return Povm::validate(std::move(elements));
}

std::vector<CMatrix> gell_mann_basis(int d) {
  if (d < 2) {
    throw DimensionMismatch("gell_mann_basis: d must be at least 2");
  }
  std::vector<CMatrix> pis;
  pis.reserve(static_cast<std::size_t>(d) * d - 1);
  // symmetric pairs
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      pis.push_back(std::move(g));
    }
  }
  // antisymmetric pairs
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = Cplx(0.0, -1.0);
      g(k, j) = Cplx(0.0, 1.0);
      pis.push_back(std::move(g));
    }
  }
  // diagonal generators
  for (int l = 1; l < d; ++l) {
    CMatrix g = CMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) g(j, j) = c;
    g(l, l) = -c * static_cast<double>(l);
    pis.push_back(std::move(g));
  }
  return pis;
}

RVector probabilities(const Povm& povm, const CVector& state) {
  if (state.size() != povm.dim()) {
    throw DimensionMismatch("probabilities: state dimension does not match POVM");
  }
  RVector p(povm.size());
  for (int i = 0; i < povm.size(); ++i) {
    const double v = std::real(state.dot(povm.element(i) * state));
    p(i) = std::clamp(v, 0.0, 1.0);
  }
  return p;
}

double GaussianSource::uniform01() {
  // top 53 bits -> double in [0, 1)
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double GaussianSource::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Cplx GaussianSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Povm random_haar_povm(int d, int m, std::uint64_t seed) {
  if (d < 2 || m < 2) {
    throw DimensionMismatch("random_haar_povm: need d >= 2 and m >= 2");
  }
  GaussianSource gauss(seed);
  std::vector<CMatrix> gram(static_cast<std::size_t>(m));
  CMatrix total = CMatrix::Zero(d, d);
  for (int i = 0; i < m; ++i) {
    CMatrix a(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        a(r, c) = gauss.complex_normal();
      }
    }
    gram[static_cast<std::size_t>(i)] = a * a.adjoint();
    total += gram[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(total));
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("random_haar_povm: normalization eigensolve failed");
  }
  const RVector inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const CMatrix root = solver.eigenvectors() * inv_sqrt.asDiagonal() *
                       solver.eigenvectors().adjoint();
  std::vector<CMatrix> elements;
  elements.reserve(static_cast<std::size_t>(m));
  for (const auto& g : gram) {
    elements.push_back(root * g * root);
  }
  return Povm::validate(std::move(elements));
}

CVector random_pure_state(int d, std::uint64_t seed) {
  GaussianSource gauss(seed);
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = gauss.complex_normal();
  v.normalize();
  return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step on seed + golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace eurbound
