#pragma once

#include <vector>

#include "eurbound/quantum.hpp"

namespace eurbound {

/// Squared-overlap statistics of two orthonormal bases: c is the largest of
/// the d^2 values |<a_i|b_j>|^2, c2 the second element of the
/// descending-sorted multiset (ties give c2 == c), and b = (1 + sqrt(c))/2.
struct OverlapData {
  double c = 1.0;
  double c2 = 1.0;
  double b = 1.0;
};

/// Throws NotOrthonormal unless both inputs are orthonormal bases of the
/// same dimension (unit norms, pairwise inner products below 1e-10).
OverlapData overlaps(const std::vector<CVector>& basis_a,
                     const std::vector<CVector>& basis_b);

/// c2 == 0 makes the CP/RPZ expressions singular; both then fall back to the
/// Maassen-Uffink value (callers can flag this).
bool degenerate_overlap(const OverlapData& ov);

/// Maassen-Uffink bound -ln(c), in nats.
double mu_bound(const OverlapData& ov);

/// Coles-Piani bound ln(1/c) + (1 - sqrt(c)) ln(c/c2) / 2.
double cp_bound(const OverlapData& ov);

/// Rudnicki-Puchala-Zyczkowski bound ln(1/c) - ln(b^2 + (c2/c)(1 - b^2)).
double rpz_bound(const OverlapData& ov);

}  // namespace eurbound
