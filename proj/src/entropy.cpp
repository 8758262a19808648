#include "eurbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace eurbound {

const char* family_name(EntropyFamily family) {
  switch (family) {
    case EntropyFamily::Shannon: return "shannon";
    case EntropyFamily::Tsallis: return "tsallis";
    case EntropyFamily::Renyi: return "renyi";
  }
  return "unknown";
}

void EntropySpec::check() const {
  if (family != EntropyFamily::Shannon) {
    if (!(alpha > 0.0) || alpha == 1.0) {
      throw InvalidDistribution("entropy: alpha must be positive and != 1");
    }
  }
  if (!(clamp_epsilon > 0.0) || clamp_epsilon > 1e-6) {
    throw InvalidDistribution("entropy: clamp_epsilon must lie in (0, 1e-6]");
  }
}

namespace {

double raw_entropy(const EntropySpec& spec, const RVector& p) {
  switch (spec.family) {
    case EntropyFamily::Shannon: {
      double h = 0.0;
      for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) h -= p(i) * std::log(p(i));
      }
      return h;
    }
    case EntropyFamily::Tsallis: {
      double power_sum = 0.0;
      for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) power_sum += std::pow(p(i), spec.alpha);
      }
      return (power_sum - 1.0) / (1.0 - spec.alpha);
    }
    case EntropyFamily::Renyi: {
      double power_sum = 0.0;
      for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) power_sum += std::pow(p(i), spec.alpha);
      }
      return std::log(power_sum) / (1.0 - spec.alpha);
    }
  }
  return 0.0;
}

}  // namespace

double entropy_value(const EntropySpec& spec, const RVector& p) {
  spec.check();
  RVector q = p;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q(i) < -1e-10) {
      std::ostringstream msg;
      msg << "entropy: probability " << i << " is negative (" << q(i) << ")";
      throw InvalidDistribution(msg.str());
    }
    q(i) = std::max(q(i), 0.0);
    sum += q(i);
  }
  if (std::abs(sum - 1.0) > 1e-8) {
    std::ostringstream msg;
    msg << "entropy: probabilities sum to " << sum;
    throw InvalidDistribution(msg.str());
  }
  return raw_entropy(spec, q);
}

double entropy_value_clamped(const EntropySpec& spec, RVector p) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    p(i) = std::clamp(p(i), 0.0, 1.0);
    sum += p(i);
  }
  if (std::abs(sum - 1.0) > 1e-8 && sum > 0.0) {
    p /= sum;
  }
  return raw_entropy(spec, p);
}

RVector entropy_gradient(const EntropySpec& spec, const RVector& p) {
  spec.check();
  RVector q(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < -1e-10) {
      throw InvalidDistribution("entropy gradient: negative probability");
    }
    q(i) = std::max(p(i), spec.clamp_epsilon);
  }
  RVector g(q.size());
  switch (spec.family) {
    case EntropyFamily::Shannon:
      for (Eigen::Index i = 0; i < q.size(); ++i) g(i) = -(1.0 + std::log(q(i)));
      break;
    case EntropyFamily::Tsallis:
      for (Eigen::Index i = 0; i < q.size(); ++i) {
        g(i) = spec.alpha * std::pow(q(i), spec.alpha - 1.0) / (1.0 - spec.alpha);
      }
      break;
    case EntropyFamily::Renyi: {
      double power_sum = 0.0;
      for (Eigen::Index i = 0; i < q.size(); ++i) power_sum += std::pow(q(i), spec.alpha);
      for (Eigen::Index i = 0; i < q.size(); ++i) {
        g(i) = spec.alpha * std::pow(q(i), spec.alpha - 1.0) /
               ((1.0 - spec.alpha) * power_sum);
      }
      break;
    }
  }
  return g;
}

double tsallis_to_renyi(double h_tsallis, double alpha) {
  const double power_sum = std::max(1.0 + (1.0 - alpha) * h_tsallis,
                                    std::numeric_limits<double>::min());
  return std::log(power_sum) / (1.0 - alpha);
}

EurBounds eur_bounds_from_hmin(double h_min, int n, const EntropySpec& spec) {
  spec.check();
  if (n < 1) {
    throw OutOfRange("eur_bounds: n_measurements must be positive");
  }
  EurBounds out;
  out.h_min = h_min;
  out.n_measurements = n;
  out.q_renyi = h_min;
  const double nd = static_cast<double>(n);
  if (spec.family == EntropyFamily::Shannon) {
    out.alpha = 1.0;
    out.q_shannon_sum = nd * h_min - nd * std::log(nd);
    out.q_tsallis = out.q_shannon_sum;  // alpha -> 1 limit
  } else {
    out.alpha = spec.alpha;
    out.q_shannon_sum = std::numeric_limits<double>::quiet_NaN();
    const double n_alpha = std::pow(nd, spec.alpha);
    out.q_tsallis = n_alpha * h_min - (nd - n_alpha) / (1.0 - spec.alpha);
  }
  return out;
}

double tsallis_concat_identity_check(const std::vector<RVector>& ps, double alpha) {
  if (ps.empty()) {
    throw InvalidDistribution("identity check: empty distribution list");
  }
  const EntropySpec spec = EntropySpec::tsallis(alpha);
  const double n = static_cast<double>(ps.size());
  Eigen::Index total = 0;
  for (const auto& p : ps) total += p.size();
  RVector concat(total);
  Eigen::Index offset = 0;
  double lhs = 0.0;
  for (const auto& p : ps) {
    lhs += entropy_value(spec, p);
    concat.segment(offset, p.size()) = p / n;
    offset += p.size();
  }
  const double n_alpha = std::pow(n, alpha);
  // scaled concatenation is a genuine distribution, evaluate directly
  double power_sum = 0.0;
  for (Eigen::Index i = 0; i < concat.size(); ++i) {
    if (concat(i) > 0.0) power_sum += std::pow(concat(i), alpha);
  }
  const double h_concat = (power_sum - 1.0) / (1.0 - alpha);
  const double rhs = n_alpha * h_concat - (n - n_alpha) / (1.0 - alpha);
  return std::abs(lhs - rhs);
}

}  // namespace eurbound
