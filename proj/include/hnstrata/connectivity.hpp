// Minimum positive stratum codimension d(E) and the connectivity d(E) - 2 of
// the space of central Yang-Mills connections, over orientable surfaces
// (closed form and brute force) and non-orientable surfaces (symmetric
// strata on the orientable double cover).

#pragma once

#include <optional>
#include <vector>

#include "hnstrata/poset.hpp"
#include "hnstrata/sequence.hpp"

namespace hnstrata {

enum class BundleClass { unspecified, plus, minus };

struct SurfaceBundleSpec {
  enum class Kind { orientable, non_orientable };
  Kind kind = Kind::orientable;
  i64 genus = 1;  // g for orientable, double-cover genus g~ otherwise
  i64 rank = 1;
  i64 chern = 0;  // orientable only
  BundleClass bundle_class = BundleClass::unspecified;  // Klein bottle only
};

enum class EmptinessStatus { nonempty, empty, unknown };

enum class ConnStatus { exact, lower_bound_only, no_stratum };

struct ConnectivityResult {
  i64 min_codim = 0;      // d: minimum positive real codimension
  i64 connectivity = 0;   // d - 2
  std::optional<AdmissibleSequence> witness;
  ConnStatus status = ConnStatus::exact;
  bool gap_certificate = false;  // no relevant stratum at codimension d + 1
};

/// Closed-form minimum real codimension over a genus-g orientable surface:
/// d = 2 gcd(n,k) for g = 1, d = 2 min([k]_n, [-k]_n) + 2(g-1)(n-1) for g > 1.
/// Witness is mu_{n-1} or mu_1 according to which residue attains the
/// minimum (ties toward mu_{n-1}); for g = 1 the largest m attaining the
/// minimum is reported.  n = 1 has no non-central stratum and returns
/// ConnStatus::no_stratum.
ConnectivityResult min_codim_orientable_formula(i64 n, i64 k, i64 genus);

/// Brute-force counterpart: minimizes 2 c(mu, g) over enumerate_strata with
/// an adaptively grown bound; the window is certified once the bound exceeds
/// the minimum plus one.
ConnectivityResult min_codim_orientable_bruteforce(i64 n, i64 k, i64 genus);

/// Fixed-point stratum type over a non-orientable surface: the full sequence
/// is ((n_1,k_1),...,(n_r,k_r),(n_0,0),(n_r,-k_r),...,(n_1,-k_1)) with the
/// middle block omitted when n_0 = 0.
struct SymmetricSequence {
  std::vector<Block> half;  // k_i >= 1, slopes strictly decreasing
  i64 middle_rank = 0;      // n_0 >= 0

  AdmissibleSequence full() const;
  i64 total_rank() const;
  bool is_pure_pair() const { return half.size() == 1 && middle_rank == 0; }
};

struct SymmetricStratum {
  SymmetricSequence seq;
  CodimensionReport codim;  // at genus g~; equals the real codimension
  EmptinessStatus status = EmptinessStatus::unknown;
};

/// All symmetric sequences of total rank n with c(full, g~) < bound, sorted
/// by (c, lexicographic vertex list).  Emptiness: middle_rank > 0 is
/// non-empty; a Klein-bottle (g~ = 1) pure pair ((n/2,k),(n/2,-k)) is
/// non-empty exactly for the bundle class matching the parity of n + k + 2;
/// anything else is unknown.
std::vector<SymmetricStratum> enumerate_symmetric(i64 n, i64 g_tilde, i64 bound,
                                                  BundleClass bundle_class = BundleClass::unspecified);

/// Connectivity of the space of flat connections over a non-orientable
/// surface with double-cover genus g~ and rank n >= 2.  Requires a bundle
/// class when g~ = 1 and n is even (errc::ambiguous_bundle otherwise).
ConnectivityResult connectivity_nonorientable(const SurfaceBundleSpec& spec);

/// Dispatch on the surface kind.
ConnectivityResult connectivity_for(const SurfaceBundleSpec& spec);

/// The family mu_i = ((i,1),(n-2i,0),(i,-1)) realizing small symmetric
/// codimensions; requires 1 <= i <= n/2.
SymmetricSequence symmetric_mu_family(i64 n, i64 i);

}  // namespace hnstrata
