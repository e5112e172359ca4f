// Naive brute-force verifiers for the quantitative results, kept independent
// of the optimized module internals: dominance is re-derived from path
// heights, codimension and critical values from the defining sums, and
// enumeration from an explicit degree box.  Any disagreement with the
// optimized modules is a failure of the optimized module.
//
// Sweep sizes may be capped through the HNSTRATA_MAX_WORK environment
// variable; exceeding the cap raises errc::work_limit.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hnstrata/poset.hpp"
#include "hnstrata/sequence.hpp"

namespace hnstrata {

struct VerifyReport {
  std::string suite;
  bool pass = true;
  i64 checked = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::pair<std::string, std::string>> notes;
  double elapsed_ms = 0.0;
};

/// Box enumeration of admissible sequences with degrees in
/// [k - D - nD, k + D + nD] and c(mu, g) < D.  Deliberately naive; refuses
/// inputs beyond n <= 6, |k| <= 6, D <= 20.
StratumSet oracle_enumerate_box(i64 n, i64 k, i64 genus, i64 bound);

/// Naive minimal covers: enumerates every convex path between P(mu) and a
/// cap just above its maximum height (covers never exceed the maximum by
/// more than one), then keeps the minimal ones by full pairwise dominance.
std::vector<AdmissibleSequence> oracle_minimal_covers(const AdmissibleSequence& mu);

/// Checks {c1(mu_m) : 1 <= m < n} = {d, 2d, ..., n} with d = gcd(n,k) and n
/// dropped exactly when d = 1, by direct evaluation.  Also records which of
/// the residues [km]_n / [-km]_n the values match ([-km]_n is the one that
/// holds; [km]_n fails whenever 2km is nonzero mod n).
VerifyReport verify_cyclic(i64 n, i64 k);
VerifyReport verify_cyclic_sweep(i64 n_max, i64 k_max);

/// Checks that critical values respect dominance on every comparable pair of
/// enumerate_strata(n, k, genus, bound), with dominance and l(mu) recomputed
/// naively.
VerifyReport verify_monotone_critical(i64 n, i64 k, i64 genus, i64 bound);
VerifyReport verify_monotone_sweep(i64 n_max, i64 k_max, i64 bound);

/// Checks the two codimension reductions: collapsing the head of any
/// sequence of length > 2 strictly lowers c, and among length-2 splits
/// ((m,l),(n-m,k-l)) the canonical mu_m is the unique minimizer while every
/// l below its degree fails admissibility.  Sweeps total ranks up to n,
/// block degrees up to k_bound in magnitude, genus up to g_max.
VerifyReport verify_reductions(i64 n, i64 k_bound, i64 g_max);

/// Set-compares oracle_enumerate_box with enumerate_strata over the sweep
/// n <= n_max, |k| <= k_max, g <= g_max, D <= bound_max.
VerifyReport verify_enumeration(i64 n_max, i64 k_max, i64 g_max, i64 bound_max);

/// Compares minimal_covers with oracle_minimal_covers over every member of
/// enumerate_strata(n, k, 1, bound) for n <= n_max, |k| <= k_max.
VerifyReport verify_covers(i64 n_max, i64 k_max, i64 bound);

/// Current work cap (from HNSTRATA_MAX_WORK, default effectively unlimited).
i64 oracle_work_cap();

}  // namespace hnstrata
