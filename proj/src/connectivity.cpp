#include "hnstrata/connectivity.hpp"

#include <algorithm>
#include <utility>

namespace hnstrata {

AdmissibleSequence SymmetricSequence::full() const {
  std::vector<Block> blocks;
  blocks.reserve(2 * half.size() + 1);
  for (const Block& b : half) blocks.push_back(b);
  if (middle_rank > 0) blocks.push_back({middle_rank, 0});
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    blocks.push_back({it->rank, checked_neg(it->degree)});
  return AdmissibleSequence::make(std::move(blocks));
}

i64 SymmetricSequence::total_rank() const {
  i64 n = middle_rank;
  for (const Block& b : half) n = checked_add(n, checked_mul(2, b.rank));
  return n;
}

SymmetricSequence symmetric_mu_family(i64 n, i64 i) {
  if (i < 1 || 2 * i > n) fail(errc::index_out_of_range, "mu_i family needs 1 <= i <= n/2");
  return SymmetricSequence{{{i, 1}}, n - 2 * i};
}

namespace {

EmptinessStatus status_of(const SymmetricSequence& seq, i64 g_tilde, BundleClass bc) {
  if (seq.middle_rank > 0) return EmptinessStatus::nonempty;  // degree-zero factor present
  if (g_tilde == 1 && seq.is_pure_pair()) {
    if (bc == BundleClass::unspecified) return EmptinessStatus::unknown;
    const bool even = (seq.total_rank() + seq.half[0].degree + 2) % 2 == 0;
    const bool matches = (bc == BundleClass::plus) ? even : !even;
    return matches ? EmptinessStatus::nonempty : EmptinessStatus::empty;
  }
  return EmptinessStatus::unknown;
}

ConnectivityResult no_stratum_result() {
  ConnectivityResult r;
  r.min_codim = 0;
  r.connectivity = -2;
  r.status = ConnStatus::no_stratum;
  r.gap_certificate = true;
  return r;
}

}  // namespace

std::vector<SymmetricStratum> enumerate_symmetric(i64 n, i64 g_tilde, i64 bound,
                                                  BundleClass bundle_class) {
  if (n < 2) fail(errc::invalid_rank, "symmetric enumeration requires rank >= 2");
  if (g_tilde < 1) fail(errc::unsupported_genus, "double-cover genus must be >= 1");
  if (bound < 1) fail(errc::index_out_of_range, "codimension bound must be >= 1");

  std::vector<SymmetricStratum> out;
  std::vector<Block> half;

  auto emit = [&](i64 half_rank) {
    SymmetricSequence seq{half, n - 2 * half_rank};
    const AdmissibleSequence full = seq.full();
    CodimensionReport report = codimension(full, g_tilde);
    if (report.c >= bound) return;
    const EmptinessStatus status = status_of(seq, g_tilde, bundle_class);
    out.push_back({std::move(seq), report, status});
  };

  // Half blocks: positive degrees with strictly decreasing slopes.  The
  // mirrored pair of block i alone contributes 2 n_i k_i to c1 and every
  // other pairwise term is positive, so the running sum of 2 n_i k_i already
  // bounds the degrees.
  auto rec = [&](auto&& self, i64 used_rank, i64 partial) -> void {
    emit(used_rank);
    for (i64 nb = 1; 2 * (used_rank + nb) <= n; ++nb) {
      const i64 k_hi = (bound - 1 - partial) / (2 * nb);
      for (i64 kb = 1; kb <= k_hi; ++kb) {
        if (!half.empty()) {
          const Block& prev = half.back();
          if (checked_mul(kb, prev.rank) >= checked_mul(prev.degree, nb)) continue;
        }
        half.push_back({nb, kb});
        self(self, used_rank + nb, partial + 2 * nb * kb);
        half.pop_back();
      }
    }
  };
  rec(rec, 0, 0);

  std::sort(out.begin(), out.end(), [](const SymmetricStratum& a, const SymmetricStratum& b) {
    if (a.codim.c != b.codim.c) return a.codim.c < b.codim.c;
    return path_lex_less(a.seq.full(), b.seq.full());
  });
  return out;
}

ConnectivityResult min_codim_orientable_formula(i64 n, i64 k, i64 genus) {
  if (genus < 1) fail(errc::unsupported_genus, "genus must be >= 1");
  if (n < 1) fail(errc::invalid_rank, "rank must be positive");
  if (n == 1) return no_stratum_result();

  ConnectivityResult r;
  r.status = ConnStatus::exact;
  r.gap_certificate = true;  // complex strata have even real codimension
  if (genus == 1) {
    const i64 d = gcd_i64(n, k);
    r.min_codim = 2 * d;
    for (i64 m = n - 1; m >= 1; --m) {
      const AdmissibleSequence mu = canonical_length_two(n, k, m);
      if (codimension(mu, 1).c == d) {
        r.witness = mu;
        break;
      }
    }
  } else {
    const i64 rk = residue(k, n);
    const i64 rmk = residue(-k, n);
    r.min_codim = 2 * std::min(rk, rmk) + 2 * (genus - 1) * (n - 1);
    r.witness = canonical_length_two(n, k, rk <= rmk ? n - 1 : 1);
  }
  r.connectivity = r.min_codim - 2;
  return r;
}

ConnectivityResult min_codim_orientable_bruteforce(i64 n, i64 k, i64 genus) {
  if (genus < 1) fail(errc::unsupported_genus, "genus must be >= 1");
  if (n < 1) fail(errc::invalid_rank, "rank must be positive");
  if (n == 1) return no_stratum_result();

  for (i64 bound = 4;; bound = checked_mul(bound, 2)) {
    const StratumSet set = enumerate_strata(n, k, genus, bound);
    for (const AdmissibleSequence& mu : set.members) {
      if (mu.semi_stable()) continue;
      const i64 c = codimension(mu, genus).c;  // members sorted by c, so this is the minimum
      if (bound > c + 1) {
        ConnectivityResult r;
        r.min_codim = 2 * c;
        r.connectivity = r.min_codim - 2;
        r.witness = mu;
        r.status = ConnStatus::exact;
        r.gap_certificate = true;
        return r;
      }
      break;
    }
  }
}

ConnectivityResult connectivity_nonorientable(const SurfaceBundleSpec& spec) {
  if (spec.kind != SurfaceBundleSpec::Kind::non_orientable)
    fail(errc::incomparable_context, "expected a non-orientable surface spec");
  const i64 n = spec.rank;
  const i64 gt = spec.genus;
  if (n < 2) fail(errc::invalid_rank, "non-orientable connectivity requires rank >= 2");
  if (gt < 1) fail(errc::unsupported_genus, "double-cover genus must be >= 1");

  ConnectivityResult r;

  if (gt == 1) {
    // Klein bottle: closed forms, gap certified over the enumerated window.
    if (n % 2 == 1) {
      r.min_codim = n + 1;
      r.witness = symmetric_mu_family(n, (n - 1) / 2).full();
    } else if (spec.bundle_class == BundleClass::unspecified) {
      fail(errc::ambiguous_bundle, "ambiguous-bundle: even rank over the Klein bottle needs class plus or minus");
    } else if (spec.bundle_class == BundleClass::minus) {
      r.min_codim = n;
      r.witness = SymmetricSequence{{{n / 2, 1}}, 0}.full();
    } else {
      r.min_codim = n + 2;
      r.witness = (n >= 4) ? symmetric_mu_family(n, n / 2 - 1).full()
                           : SymmetricSequence{{{1, 2}}, 0}.full();
    }
    const auto window = enumerate_symmetric(n, 1, r.min_codim + 2, spec.bundle_class);
    i64 min_seen = -1;
    bool at_gap = false;
    for (const SymmetricStratum& s : window) {
      if (s.seq.half.empty() || s.status == EmptinessStatus::empty) continue;
      if (min_seen < 0) min_seen = s.codim.c;
      if (s.codim.c == r.min_codim + 1) at_gap = true;
    }
    if (min_seen != r.min_codim) fail(errc::internal, "Klein-bottle minimum disagrees with enumeration");
    r.gap_certificate = !at_gap;
    r.status = r.gap_certificate ? ConnStatus::exact : ConnStatus::lower_bound_only;
    r.connectivity = r.min_codim - 2;
    return r;
  }

  // genus >= 2: brute-force minimum over non-empty and unknown strata, with
  // the enumeration window grown until it certifies both minimum and gap.
  i64 bound = std::max<i64>(8, 2 * n * gt);
  std::vector<SymmetricStratum> window;
  i64 min_c = -1;
  for (;;) {
    window = enumerate_symmetric(n, gt, bound, spec.bundle_class);
    min_c = -1;
    for (const SymmetricStratum& s : window) {
      if (s.seq.half.empty() || s.status == EmptinessStatus::empty) continue;
      min_c = s.codim.c;
      break;
    }
    if (min_c >= 0 && bound > min_c + 1) break;
    bound = checked_mul(bound, 2);
  }

  r.min_codim = min_c;
  bool at_gap = false;
  for (const SymmetricStratum& s : window) {
    if (s.seq.half.empty() || s.status == EmptinessStatus::empty) continue;
    if (s.codim.c == min_c && !r.witness && s.status == EmptinessStatus::nonempty)
      r.witness = s.seq.full();
    if (s.codim.c == min_c + 1) at_gap = true;
  }

  if (n >= 9) {
    const i64 closed = 2 * n * gt - 3 * gt + 1;
    if (min_c != closed) fail(errc::internal, "closed form disagrees with enumeration");
    r.witness = symmetric_mu_family(n, 1).full();
  }

  r.gap_certificate = !at_gap;
  r.status = (r.witness.has_value() && r.gap_certificate) ? ConnStatus::exact
                                                          : ConnStatus::lower_bound_only;
  r.connectivity = r.min_codim - 2;
  return r;
}

ConnectivityResult connectivity_for(const SurfaceBundleSpec& spec) {
  if (spec.kind == SurfaceBundleSpec::Kind::orientable)
    return min_codim_orientable_formula(spec.rank, spec.chern, spec.genus);
  return connectivity_nonorientable(spec);
}

}  // namespace hnstrata
