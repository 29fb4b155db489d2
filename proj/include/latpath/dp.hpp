#ifndef LATPATH_DP_HPP
#define LATPATH_DP_HPP

#include <optional>

#include "latpath/grid.hpp"
#include "latpath/steps.hpp"

// Counting recurrences for the boundary-constrained path families and their
// extensions past the combinatorial boundary. Each function fixes its own
// boundary semantics; none of them are configurable.
namespace latpath::dp {

/// Ballot numbers B(m,n): unit paths from (1,0) staying strictly below y=x.
/// Square 0..M x 0..M with B(m,n) = 0 for m <= n.
Grid ballot(int M);

/// B'(m,n) on 0..M x 0..M: B'(m,n) - B'(m-1,n) - B'(m,n-1) is +1 at (1,0),
/// -1 at (0,1) and 0 elsewhere, zero outside the quadrant.
Grid ballot_extended(int M);

/// C_p(m,n): unit paths from (1,0) never touching x = p*y. Columns 0..M,
/// rows 0..M/p; cells present for m >= p*n (zero on the line).
Grid c_p(int p, int M);

/// C'_p on 0..M x 0..M with sources +1 at (1,0) and -p at (0,1).
Grid c_p_extended(int p, int M);

/// D_p(m,n): unit paths from the origin never crossing y = p*x (touching
/// allowed). Cells present for 0 <= n <= p*m + p; the rows p*m+1..p*m+p are
/// the boundary zeros. n_max < 0 means p*M + p.
Grid d_p(int p, int M, int n_max = -1);

/// D_2 continued by D(m-1,n) = D(m,n) - D(m,n-1) to the region n >= 0,
/// m + n >= 0. Rows 0..n_max, columns -n_max..m_max.
Grid d2_extended(int n_max, int m_max);

/// The same leftward continuation for any slope p. Nothing is claimed about
/// its values; it backs the dp-line experiment.
Grid d_p_extended_experimental(int p, int n_max, int m_max);

/// S(m,n): generalized Dyck paths to (m,n) with no four consecutive up steps
/// that end with a down step. Columns 0..M, rows 0..n_max (M when < 0).
Grid s_count(int M, int n_max = -1);

/// Weighted sums P_h(m,n) of paths from (0,h) with rises in T that stay at
/// height >= 0. Columns 0..M, rows 0..K*M+h.
Grid p_h(const StepSet& steps, const Weights& weights, int h, int M);

/// P'_h: equals P_h for n >= -K and continues below by
///   P'_h(m,n) = P'_h(m+1,n+K) - sum_{i != K} c_i P'_h(m,n+K-i),  n < -K.
/// Row n needs extra columns to the right; the cone width is computed and
/// filled automatically. Requires K >= 1 and n_min <= -K-1. Rows
/// n_min..n_max, n_max defaulting to K*M+h.
Grid p_h_extended(const StepSet& steps, const Weights& weights, int h, int M, int n_min,
                  std::optional<int> n_max = std::nullopt);

/// Extra columns p_h_extended needs to the right of m to reach row n.
int extension_cone_width(int K, int n);

/// E_{p,h}(m,n): unit paths from the origin never crossing y = p*x + h.
/// Cells present for 0 <= n <= p*m + h + p. n_max < 0 means p*M + h + p.
Grid e_ph(int p, int h, int M, int n_max = -1);

}  // namespace latpath::dp

#endif  // LATPATH_DP_HPP
