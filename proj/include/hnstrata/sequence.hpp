// Admissible sequences and their convex-path avatars.
//
// An admissible sequence mu = ((n_1,k_1),...,(n_r,k_r)) has positive ranks and
// strictly decreasing slopes k_i/n_i.  It is equivalent to the convex lattice
// path from (0,0) to (n,k) whose vertices are the partial (rank, degree) sums.
// Everything here is an immutable value; operations are pure functions.

#pragma once

#include <cstddef>
#include <vector>

#include "hnstrata/arith.hpp"

namespace hnstrata {

struct Block {
  i64 rank;    // n_i > 0
  i64 degree;  // k_i
  friend bool operator==(const Block&, const Block&) = default;
};

class AdmissibleSequence {
public:
  /// Validates and builds a sequence.  Throws errc::invalid_rank for a
  /// non-positive rank (or an empty list) and errc::slope_order when a pair of
  /// consecutive slopes fails to decrease strictly; the message names the
  /// 1-based offending block.
  static AdmissibleSequence make(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t length() const noexcept { return blocks_.size(); }  // r
  i64 total_rank() const noexcept { return total_rank_; }         // n
  i64 total_degree() const noexcept { return total_degree_; }     // k

  Rational slope(std::size_t i) const { return Rational(blocks_[i].degree, blocks_[i].rank); }
  bool semi_stable() const noexcept { return blocks_.size() == 1; }

  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;

private:
  AdmissibleSequence(std::vector<Block> blocks, i64 n, i64 k)
      : blocks_(std::move(blocks)), total_rank_(n), total_degree_(k) {}

  std::vector<Block> blocks_;
  i64 total_rank_ = 0;
  i64 total_degree_ = 0;
};

struct LatticePoint {
  i64 x;
  i64 y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// Convex path from (0,0) to (n,k); interior vertices are exactly the points
/// where the slope changes, so the vertex list is canonical.
class ConvexPath {
public:
  /// Throws errc::convexity unless the vertices start at (0,0), have strictly
  /// increasing x and strictly decreasing segment slopes.
  static ConvexPath from_vertices(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  i64 span_rank() const noexcept { return vertices_.back().x; }    // n
  i64 span_degree() const noexcept { return vertices_.back().y; }  // k

  /// Exact height of the path at integer 0 <= x <= n.
  Rational height(i64 x) const;

  friend bool operator==(const ConvexPath&, const ConvexPath&) = default;

private:
  explicit ConvexPath(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {}
  std::vector<LatticePoint> vertices_;
};

ConvexPath to_path(const AdmissibleSequence& mu);
AdmissibleSequence from_path(const ConvexPath& path);

/// Slope vector mu-hat: n entries, entry j equal to the slope of the block
/// containing position j.  Entries are non-increasing.
std::vector<Rational> slope_vector(const AdmissibleSequence& mu);

struct CodimensionReport {
  i64 c1 = 0;               // sum over i>j of n_i k_j - n_j k_i
  i64 c2 = 0;               // (g-1) * sum over i>j of n_i n_j
  i64 c = 0;                // c1 + c2
  Rational critical_value;  // l(mu) = sum of k_i^2 / n_i
};

/// Complex codimension of the stratum of type mu at the given genus (g >= 1).
CodimensionReport codimension(const AdmissibleSequence& mu, i64 genus);

/// l(mu) = sum of k_i^2 / n_i, independent of genus.
Rational critical_value(const AdmissibleSequence& mu);

/// mu_m = ((m, ceil_strict(km/n)), (n-m, k - ceil_strict(km/n))), the
/// codimension minimizer among length-2 splits at rank m.  Requires 1 <= m <= n-1.
AdmissibleSequence canonical_length_two(i64 n, i64 k, i64 m);

/// Merges blocks 1..r-1 into one; requires r >= 2.  The result is admissible.
AdmissibleSequence collapse_head(const AdmissibleSequence& mu);

/// Lexicographic order on the vertex lists of the associated paths; a total
/// order on sequences of any fixed (n,k), used for deterministic output.
bool path_lex_less(const AdmissibleSequence& a, const AdmissibleSequence& b);

/// Heights of the path of mu at x = 0..n, scaled by lcm(1..n) so that all
/// entries are integers.  Pointwise comparison of two such vectors (same n,k)
/// decides dominance.
std::vector<i64> scaled_heights(const AdmissibleSequence& mu);

/// The scaling factor used by scaled_heights.
i64 height_scale(i64 n);

}  // namespace hnstrata
