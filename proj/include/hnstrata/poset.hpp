// Dominance order on admissible sequences, bounded enumeration of strata,
// minimal covers, and the linear extension built from successive minimal
// antichains.

#pragma once

#include <optional>
#include <vector>

#include "hnstrata/sequence.hpp"

namespace hnstrata {

/// lhs >= rhs in the dominance order: every prefix sum of the slope vector of
/// lhs weakly exceeds the corresponding prefix sum for rhs.  Both sequences
/// must share total rank and degree (errc::incomparable_context otherwise).
bool dominates(const AdmissibleSequence& lhs, const AdmissibleSequence& rhs);

/// Path formulation of the same relation: upper lies (weakly) above lower as
/// functions on [0, n].  Agrees with dominates() on all valid inputs.
bool path_lies_above(const ConvexPath& upper, const ConvexPath& lower);

struct StratumContext {
  i64 rank;    // n
  i64 degree;  // k
  i64 genus;   // g
  friend bool operator==(const StratumContext&, const StratumContext&) = default;
};

/// All admissible sequences of type (n,k) with c(mu, g) < bound, in a
/// deterministic order (by codimension, then lexicographic vertex list).
struct StratumSet {
  StratumContext context;
  i64 bound = 0;
  std::vector<AdmissibleSequence> members;
};

StratumSet enumerate_strata(i64 n, i64 k, i64 genus, i64 bound);

/// Finite search window for minimal covers of a path P:
///   s1 = max(k_1/n_1, 0), sr = min(k_r/n_r, 0),
///   h2_bound = floor(n (s1 - sr)) + max(k, 0).
/// Every minimal cover either keeps the right endpoint of its last
/// slope >= k/n segment at height <= h2_bound, or is one of the single-bump
/// tent paths through a point one above a vertex of P.
struct CoverSearchBounds {
  Rational s1;
  Rational sr;
  i64 h2_bound = 0;
};

CoverSearchBounds cover_search_bounds(const AdmissibleSequence& mu);

/// All minimal covers of mu: sequences lambda > mu with nothing strictly
/// between.  Candidates are the least concave majorants of P(mu) with one
/// lattice point raised minimally above the path (every cover arises this
/// way); each candidate is certified by exhaustively enumerating the convex
/// lattice paths between P(mu) and the candidate.  Genus-independent.
std::vector<AdmissibleSequence> minimal_covers(const AdmissibleSequence& mu);

/// A linear extension of dominance on a StratumSet.  order[i] sits at stage
/// levels[i]: level 0 is the semi-stable type, level l collects the minimal
/// elements of what remains after earlier levels.
struct LinearExtension {
  StratumContext context;
  i64 bound = 0;
  std::vector<AdmissibleSequence> order;
  std::vector<i64> levels;

  std::optional<i64> level_of(const AdmissibleSequence& mu) const;
};

LinearExtension linear_extension(const StratumSet& set);

/// True iff no element of order is preceded by an element strictly above it.
bool validate_extension(const LinearExtension& ext);

}  // namespace hnstrata
