#include "hnstrata/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

namespace hnstrata {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

struct WorkMeter {
  i64 used = 0;
  i64 cap = oracle_work_cap();
  void tick(i64 amount = 1) {
    used += amount;
    if (used > cap) fail(errc::work_limit, "HNSTRATA_MAX_WORK exceeded");
  }
};

std::string fmt_blocks(const AdmissibleSequence& mu) {
  std::string s = "[";
  for (std::size_t i = 0; i < mu.blocks().size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(mu.blocks()[i].rank) + "," + std::to_string(mu.blocks()[i].degree) + "]";
  }
  return s + "]";
}

// --- oracle-local primitives (independent of the optimized modules) ---

i64 naive_c1(const std::vector<Block>& bs) {
  i64 total = 0;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (i > j) total = checked_add(total, checked_sub(checked_mul(bs[i].rank, bs[j].degree),
                                                        checked_mul(bs[j].rank, bs[i].degree)));
  return total;
}

i64 naive_c(const std::vector<Block>& bs, i64 genus) {
  i64 c = naive_c1(bs);
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (i > j)
        c = checked_add(c, checked_mul(genus - 1, checked_mul(bs[i].rank, bs[j].rank)));
  return c;
}

Rational naive_critical(const std::vector<Block>& bs) {
  Rational sum(0);
  for (const Block& b : bs) sum = sum + Rational(b.degree, b.rank) * Rational(b.degree);
  return sum;
}

bool naive_admissible(const std::vector<Block>& bs) {
  if (bs.empty()) return false;
  for (const Block& b : bs)
    if (b.rank <= 0) return false;
  for (std::size_t i = 1; i < bs.size(); ++i)
    if (!(Rational(bs[i - 1].degree, bs[i - 1].rank) > Rational(bs[i].degree, bs[i].rank)))
      return false;
  return true;
}

// Heights of the path of mu at every integer x, derived from the block data.
std::vector<Rational> naive_heights(const std::vector<Block>& bs) {
  std::vector<Rational> h{Rational(0)};
  i64 y = 0;
  for (const Block& b : bs) {
    for (i64 j = 1; j <= b.rank; ++j)
      h.push_back(Rational(y) + Rational(checked_mul(b.degree, j), b.rank));
    y = checked_add(y, b.degree);
  }
  return h;
}

bool naive_dominates(const std::vector<Rational>& upper, const std::vector<Rational>& lower) {
  for (std::size_t x = 0; x < upper.size(); ++x)
    if (upper[x] < lower[x]) return false;
  return true;
}

std::vector<Block> naive_mu_m(i64 n, i64 k, i64 m) {
  const i64 l = floor_div(checked_mul(k, m), n) + 1;  // smallest integer above km/n
  return {{m, l}, {n - m, checked_sub(k, l)}};
}

// All admissible block lists of total rank n and degree tuples bounded by
// |k_i| <= k_bound.
void each_bounded_sequence(i64 n, i64 k_bound, WorkMeter& meter,
                           const std::function<void(const std::vector<Block>&)>& visit) {
  std::vector<Block> cur;
  auto rec = [&](auto&& self, i64 remaining) -> void {
    if (remaining == 0) {
      if (naive_admissible(cur)) visit(cur);
      return;
    }
    for (i64 nb = 1; nb <= remaining; ++nb) {
      for (i64 kb = -k_bound; kb <= k_bound; ++kb) {
        meter.tick();
        if (!cur.empty() &&
            !(Rational(cur.back().degree, cur.back().rank) > Rational(kb, nb)))
          continue;
        cur.push_back({nb, kb});
        self(self, remaining - nb);
        cur.pop_back();
      }
    }
  };
  rec(rec, n);
}

}  // namespace

i64 oracle_work_cap() {
  const char* env = std::getenv("HNSTRATA_MAX_WORK");
  if (!env || !*env) return std::numeric_limits<i64>::max();
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || v <= 0) fail(errc::parse_error, "HNSTRATA_MAX_WORK must be a positive integer");
  return static_cast<i64>(v);
}

namespace {

void check_desk_scale(i64 n, i64 k, i64 bound) {
  if (n < 1 || bound < 1)
    fail(errc::index_out_of_range, "oracle box enumeration needs n >= 1, D >= 1");
  if (n > 6 || k > 6 || k < -6 || bound > 20)
    fail(errc::work_limit, "desk-scale limit exceeded (n <= 6, |k| <= 6, D <= 20)");
}

// One descent over the degree box for a fixed (n, k, D), producing the
// members for each requested genus at once.  The running c1 and rank-pair
// sums are carried along so the final filter is a single comparison; no
// other bound prunes the search.
void box_core(i64 n, i64 k, i64 bound, const std::vector<i64>& genera, WorkMeter& meter,
              std::vector<std::vector<AdmissibleSequence>>& out) {
  const i64 lo = k - bound - n * bound;
  const i64 hi = k + bound + n * bound;
  Block blocks[8];  // r <= n <= 6 at desk scale

  auto rec = [&](auto&& self, int depth, i64 rank_left, i64 deg_sum, i64 rank_sum, i64 c1,
                 i64 nn) -> void {
    for (i64 nb = 1; nb <= rank_left; ++nb) {
      if (nb == rank_left) {
        meter.tick();
        const i64 kb = k - deg_sum;
        if (kb < lo || kb > hi) continue;
        if (depth > 0 && kb * blocks[depth - 1].rank >= blocks[depth - 1].degree * nb) continue;
        const i64 c1_full = c1 + nb * deg_sum - rank_sum * kb;
        const i64 nn_full = nn + nb * rank_sum;
        blocks[depth] = {nb, kb};
        bool wanted = false;
        for (i64 g : genera) wanted = wanted || (c1_full + (g - 1) * nn_full < bound);
        if (!wanted) continue;
        const std::vector<Block> bs(blocks, blocks + depth + 1);
        if (!naive_admissible(bs)) continue;
        for (std::size_t gi = 0; gi < genera.size(); ++gi)
          if (c1_full + (genera[gi] - 1) * nn_full < bound)
            out[gi].push_back(AdmissibleSequence::make(bs));
        continue;
      }
      i64 k_top = hi;
      if (depth > 0)
        k_top = std::min(k_top, floor_div(blocks[depth - 1].degree * nb - 1, blocks[depth - 1].rank));
      for (i64 kb = lo; kb <= k_top; ++kb) {
        meter.tick();
        blocks[depth] = {nb, kb};
        self(self, depth + 1, rank_left - nb, deg_sum + kb, rank_sum + nb,
             c1 + nb * deg_sum - rank_sum * kb, nn + nb * rank_sum);
      }
    }
  };
  rec(rec, 0, n, 0, 0, 0, 0);
}

void sort_members(std::vector<AdmissibleSequence>& members, i64 genus) {
  std::sort(members.begin(), members.end(),
            [genus](const AdmissibleSequence& a, const AdmissibleSequence& b) {
              const i64 ca = naive_c(a.blocks(), genus);
              const i64 cb = naive_c(b.blocks(), genus);
              if (ca != cb) return ca < cb;
              return path_lex_less(a, b);
            });
}

}  // namespace

StratumSet oracle_enumerate_box(i64 n, i64 k, i64 genus, i64 bound) {
  if (genus < 1) fail(errc::index_out_of_range, "oracle box enumeration needs g >= 1");
  check_desk_scale(n, k, bound);
  WorkMeter meter;
  std::vector<std::vector<AdmissibleSequence>> out(1);
  box_core(n, k, bound, {genus}, meter, out);
  sort_members(out[0], genus);
  return StratumSet{{n, k, genus}, bound, std::move(out[0])};
}

std::vector<AdmissibleSequence> oracle_minimal_covers(const AdmissibleSequence& mu) {
  const i64 n = mu.total_rank();
  const i64 k = mu.total_degree();
  if (n == 1) return {};

  const std::vector<Rational> base = naive_heights(mu.blocks());
  // A minimal cover never climbs more than one above the path's maximum
  // height: a path with a vertex higher than that still dominates the same
  // path with the vertex pulled down, so it cannot be minimal.
  i64 peak = 0;
  {
    i64 y = 0;
    peak = 0;
    for (const Block& b : mu.blocks()) {
      y = checked_add(y, b.degree);
      peak = std::max(peak, y);
    }
  }
  const Rational cap(peak + 2);

  // Enumerate every convex path R with base <= R <= cap at all integers.
  WorkMeter meter;
  std::vector<std::vector<Block>> band;
  std::vector<LatticePoint> stack{{0, 0}};
  auto segment_ok = [&](i64 x, i64 y, i64 x2, i64 y2) {
    for (i64 xx = x + 1; xx < x2; ++xx) {
      const Rational v(checked_add(checked_mul(y, x2 - xx), checked_mul(y2, xx - x)), x2 - x);
      if (v < base[static_cast<std::size_t>(xx)] || v > cap) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, i64 x, i64 y, bool has_prev, i64 pdx, i64 pdy) -> void {
    for (i64 x2 = x + 1; x2 <= n; ++x2) {
      const Rational floor_here = base[static_cast<std::size_t>(x2)];
      // least integer >= base[x2]
      const i64 ylo = floor_here.is_integer() ? floor_here.num() : floor_here.floor() + 1;
      const i64 yhi = peak + 2;
      for (i64 y2 = (x2 == n ? k : ylo); y2 <= (x2 == n ? k : yhi); ++y2) {
        if (x2 == n && (Rational(y2) < floor_here)) break;
        meter.tick();
        const i64 dx = x2 - x, dy = y2 - y;
        if (has_prev && checked_mul(dy, pdx) >= checked_mul(pdy, dx)) continue;
        if (x2 < n && checked_mul(k - y2, dx) >= checked_mul(dy, n - x2)) continue;
        if (!segment_ok(x, y, x2, y2)) continue;
        stack.push_back({x2, y2});
        if (x2 == n) {
          std::vector<Block> bs;
          for (std::size_t i = 1; i < stack.size(); ++i)
            bs.push_back({stack[i].x - stack[i - 1].x, stack[i].y - stack[i - 1].y});
          band.push_back(std::move(bs));
        } else {
          self(self, x2, y2, true, dx, dy);
        }
        stack.pop_back();
      }
    }
  };
  rec(rec, 0, 0, false, 0, 0);

  // Strictly-above candidates and their heights.
  std::vector<std::vector<Block>> above;
  std::vector<std::vector<Rational>> heights;
  for (auto& bs : band) {
    const auto h = naive_heights(bs);
    if (h == base) continue;
    above.push_back(std::move(bs));
    heights.push_back(h);
  }

  std::vector<AdmissibleSequence> covers;
  for (std::size_t i = 0; i < above.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < above.size() && minimal; ++j)
      if (j != i && naive_dominates(heights[i], heights[j])) minimal = false;
    if (minimal) covers.push_back(AdmissibleSequence::make(above[i]));
  }
  std::sort(covers.begin(), covers.end(), path_lex_less);
  return covers;
}

VerifyReport verify_cyclic(i64 n, i64 k) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "cyclic";
  if (n < 2) fail(errc::index_out_of_range, "verify_cyclic requires n >= 2");

  std::vector<i64> values;
  bool proof_form = true;
  bool statement_form = true;
  for (i64 m = 1; m <= n - 1; ++m) {
    const std::vector<Block> mu = naive_mu_m(n, k, m);
    if (!naive_admissible(mu)) {
      report.pass = false;
      report.counterexamples.push_back("mu_" + std::to_string(m) + " not admissible");
      continue;
    }
    const i64 c1 = naive_c1(mu);
    values.push_back(c1);
    if (c1 != residue(-k * m, n)) proof_form = false;
    if (c1 != residue(k * m, n)) statement_form = false;
    ++report.checked;
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const i64 d = gcd_i64(n, k);
  std::vector<i64> expected;
  for (i64 v = d; v <= n; v += d)
    if (!(v == n && d == 1)) expected.push_back(v);

  if (values != expected) {
    report.pass = false;
    report.counterexamples.push_back("set mismatch at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
  }
  if (!proof_form) {
    report.pass = false;
    report.counterexamples.push_back("c1(mu_m) != [-km]_n at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
  }
  report.notes.emplace_back("matches_residue_minus_km", proof_form ? "true" : "false");
  report.notes.emplace_back("matches_residue_plus_km", statement_form ? "true" : "false");
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_cyclic_sweep(i64 n_max, i64 k_max) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "cyclic";
  WorkMeter meter;
  bool plus_form_everywhere = true;
  for (i64 n = 2; n <= n_max; ++n) {
    for (i64 k = -k_max; k <= k_max; ++k) {
      meter.tick(n);
      VerifyReport one = verify_cyclic(n, k);
      report.checked += one.checked;
      if (!one.pass) {
        report.pass = false;
        report.counterexamples.insert(report.counterexamples.end(), one.counterexamples.begin(),
                                      one.counterexamples.end());
      }
      for (const auto& [key, value] : one.notes)
        if (key == "matches_residue_plus_km" && value == "false") plus_form_everywhere = false;
    }
  }
  report.notes.emplace_back("matches_residue_minus_km", report.pass ? "true" : "false");
  report.notes.emplace_back("residue_plus_km_fails_somewhere", plus_form_everywhere ? "false" : "true");
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_monotone_critical(i64 n, i64 k, i64 genus, i64 bound) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "monotone";

  const StratumSet set = enumerate_strata(n, k, genus, bound);
  const std::size_t m = set.members.size();
  std::vector<std::vector<Rational>> heights(m);
  std::vector<Rational> lvalues(m);
  for (std::size_t i = 0; i < m; ++i) {
    heights[i] = naive_heights(set.members[i].blocks());
    lvalues[i] = naive_critical(set.members[i].blocks());
  }
  WorkMeter meter;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      meter.tick();
      if (!naive_dominates(heights[a], heights[b])) continue;
      ++report.checked;
      if (lvalues[a] < lvalues[b]) {
        report.pass = false;
        report.counterexamples.push_back(
            "l(" + fmt_blocks(set.members[a]) + ")=" + lvalues[a].str() + " < l(" +
            fmt_blocks(set.members[b]) + ")=" + lvalues[b].str() + " despite dominance");
      }
    }
  }
  report.notes.emplace_back("strata", std::to_string(m));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_monotone_sweep(i64 n_max, i64 k_max, i64 bound) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "monotone";
  for (i64 n = 2; n <= n_max; ++n) {
    for (i64 k = -k_max; k <= k_max; ++k) {
      VerifyReport one = verify_monotone_critical(n, k, 1, bound);
      report.checked += one.checked;
      if (!one.pass) {
        report.pass = false;
        report.counterexamples.insert(report.counterexamples.end(), one.counterexamples.begin(),
                                      one.counterexamples.end());
      }
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_reductions(i64 n, i64 k_bound, i64 g_max) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "reductions";
  if (n > 6 || k_bound > 6 || g_max > 3)
    fail(errc::work_limit, "desk-scale limit exceeded (n <= 6, |k_i| <= 6, g <= 3)");

  WorkMeter meter;

  // Collapse: merging blocks 1..r-1 strictly lowers c for every r > 2.
  for (i64 rank = 3; rank <= n; ++rank) {
    each_bounded_sequence(rank, k_bound, meter, [&](const std::vector<Block>& bs) {
      if (bs.size() <= 2) return;
      std::vector<Block> merged(2);
      merged[0] = {0, 0};
      for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        merged[0].rank += bs[i].rank;
        merged[0].degree += bs[i].degree;
      }
      merged[1] = bs.back();
      for (i64 g = 1; g <= g_max; ++g) {
        ++report.checked;
        if (!(naive_c(bs, g) > naive_c(merged, g))) {
          report.pass = false;
          report.counterexamples.push_back("collapse failed at g=" + std::to_string(g) + " for " +
                                           fmt_blocks(AdmissibleSequence::make(bs)));
        }
      }
    });
  }

  // Ceiling: among length-2 splits at fixed m, mu_m is the unique minimizer,
  // and every degree below its first block fails admissibility.
  for (i64 rank = 2; rank <= n; ++rank) {
    for (i64 k = -k_bound; k <= k_bound; ++k) {
      for (i64 m = 1; m <= rank - 1; ++m) {
        const std::vector<Block> mu_m = naive_mu_m(rank, k, m);
        const i64 l_m = mu_m[0].degree;
        for (i64 l = l_m - rank; l <= l_m + rank; ++l) {
          meter.tick();
          const std::vector<Block> split{{m, l}, {rank - m, k - l}};
          if (l < l_m) {
            ++report.checked;
            if (naive_admissible(split)) {
              report.pass = false;
              report.counterexamples.push_back("split below mu_m admissible at m=" +
                                               std::to_string(m) + " l=" + std::to_string(l));
            }
            continue;
          }
          if (!naive_admissible(split)) {
            report.pass = false;
            report.counterexamples.push_back("split at or above mu_m not admissible at m=" +
                                             std::to_string(m) + " l=" + std::to_string(l));
            continue;
          }
          for (i64 g = 1; g <= g_max; ++g) {
            ++report.checked;
            const i64 c_split = naive_c(split, g);
            const i64 c_min = naive_c(mu_m, g);
            const bool ok = (l == l_m) ? (c_split == c_min) : (c_split > c_min);
            if (!ok) {
              report.pass = false;
              report.counterexamples.push_back(
                  "ceiling minimality failed at n=" + std::to_string(rank) +
                  " k=" + std::to_string(k) + " m=" + std::to_string(m) + " l=" + std::to_string(l) +
                  " g=" + std::to_string(g));
            }
          }
        }
      }
    }
  }

  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_enumeration(i64 n_max, i64 k_max, i64 g_max, i64 bound_max) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "enumeration";
  if (g_max < 1) fail(errc::index_out_of_range, "verify_enumeration needs g_max >= 1");
  check_desk_scale(n_max, k_max, bound_max);

  std::vector<i64> genera;
  for (i64 g = 1; g <= g_max; ++g) genera.push_back(g);

  WorkMeter meter;
  for (i64 n = 1; n <= n_max; ++n) {
    for (i64 k = -k_max; k <= k_max; ++k) {
      for (i64 bound = 1; bound <= bound_max; ++bound) {
        std::vector<std::vector<AdmissibleSequence>> naive(genera.size());
        box_core(n, k, bound, genera, meter, naive);
        for (std::size_t gi = 0; gi < genera.size(); ++gi) {
          const i64 g = genera[gi];
          sort_members(naive[gi], g);
          const StratumSet fast = enumerate_strata(n, k, g, bound);
          ++report.checked;
          if (fast.members != naive[gi]) {
            report.pass = false;
            report.counterexamples.push_back(
                "enumeration mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " g=" + std::to_string(g) + " D=" + std::to_string(bound) + " (" +
                std::to_string(fast.members.size()) + " vs " + std::to_string(naive[gi].size()) +
                " members)");
          }
        }
      }
    }
  }
  report.notes.emplace_back("box_iterations", std::to_string(meter.used));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_covers(i64 n_max, i64 k_max, i64 bound) {
  const auto start = clock_type::now();
  VerifyReport report;
  report.suite = "covers";
  WorkMeter meter;
  for (i64 n = 1; n <= n_max; ++n) {
    for (i64 k = -k_max; k <= k_max; ++k) {
      const StratumSet family = enumerate_strata(n, k, 1, bound);
      for (const AdmissibleSequence& mu : family.members) {
        meter.tick();
        ++report.checked;
        const auto fast = minimal_covers(mu);
        const auto naive = oracle_minimal_covers(mu);
        if (fast != naive) {
          report.pass = false;
          report.counterexamples.push_back("cover mismatch for " + fmt_blocks(mu) + " (" +
                                           std::to_string(fast.size()) + " vs " +
                                           std::to_string(naive.size()) + ")");
        }
      }
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace hnstrata
