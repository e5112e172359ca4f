// Acceptance suite: end-to-end checks of the library's quantitative claims,
// one pass/fail line per criterion, each with its runtime budget.  Exit code
// is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hnstrata/connectivity.hpp"
#include "hnstrata/oracle.hpp"
#include "hnstrata/poset.hpp"

using namespace hnstrata;

namespace {

AdmissibleSequence seq(std::vector<Block> blocks) { return AdmissibleSequence::make(std::move(blocks)); }

struct Criterion {
  std::string name;
  double budget_ms;  // 0 = no budget
  std::function<bool(std::string&)> run;
};

std::string note_value(const VerifyReport& report, const std::string& key) {
  for (const auto& [k, v] : report.notes)
    if (k == key) return v;
  return "";
}

bool c01_cyclic_residue_sets(std::string& detail) {
  const VerifyReport report = verify_cyclic_sweep(12, 12);
  detail = "checked " + std::to_string(report.checked) +
           " values; c1(mu_m) = [-km]_n everywhere; [km]_n fails somewhere: " +
           note_value(report, "residue_plus_km_fails_somewhere");
  return report.pass && note_value(report, "residue_plus_km_fails_somewhere") == "true";
}

bool c02_orientable_formula_vs_bruteforce(std::string& detail) {
  i64 cases = 0;
  for (i64 n = 2; n <= 8; ++n)
    for (i64 k = -8; k <= 8; ++k)
      for (i64 g = 1; g <= 3; ++g) {
        const ConnectivityResult fast = min_codim_orientable_formula(n, k, g);
        const ConnectivityResult slow = min_codim_orientable_bruteforce(n, k, g);
        ++cases;
        if (fast.min_codim != slow.min_codim || fast.connectivity != slow.connectivity) {
          detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " g=" + std::to_string(g) + ": formula " + std::to_string(fast.min_codim) +
                   " vs brute force " + std::to_string(slow.min_codim);
          return false;
        }
        if (2 * codimension(*fast.witness, g).c != fast.min_codim ||
            2 * codimension(*slow.witness, g).c != slow.min_codim) {
          detail = "witness does not realize the minimum at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " g=" + std::to_string(g);
          return false;
        }
      }
  detail = std::to_string(cases) + " (n,k,g) cases agree, witnesses realize the minimum";
  return true;
}

bool c03_rank6_chern2_example(std::string& detail) {
  const AdmissibleSequence high = seq({{1, 1}, {5, 1}});
  const AdmissibleSequence low = seq({{2, 1}, {4, 1}});
  for (i64 g : {2, 3}) {
    if (codimension(high, g).c != 4 + 5 * (g - 1)) {
      detail = "c((1,1),(5,1)) wrong at g=" + std::to_string(g);
      return false;
    }
    if (codimension(low, g).c != 2 + 8 * (g - 1)) {
      detail = "c((2,1),(4,1)) wrong at g=" + std::to_string(g);
      return false;
    }
  }
  if (!dominates(high, low)) {
    detail = "((1,1),(5,1)) should dominate ((2,1),(4,1))";
    return false;
  }
  if (!(codimension(high, 2).c < codimension(low, 2).c)) {
    detail = "expected the dominance-higher stratum to have the smaller codimension here";
    return false;
  }
  const ConnectivityResult global = min_codim_orientable_bruteforce(6, 2, 2);
  if (global.min_codim != 14 || !(global.witness == seq({{5, 2}, {1, 0}}))) {
    detail = "global minimum at (6,2,g=2) should be complex 7 with witness ((5,2),(1,0))";
    return false;
  }
  detail =
      "c=9 vs c=10 at g=2 with the higher stratum cheaper; global minimum is 7 at [[5,2],[1,0]], "
      "so [[1,1],[5,1]] (c=9) is not the minimal-codimension stratum";
  return true;
}

bool c04_nonorientable_closed_form(std::string& detail) {
  i64 cases = 0;
  for (i64 n = 9; n <= 14; ++n)
    for (i64 gt = 2; gt <= 3; ++gt) {
      SurfaceBundleSpec spec;
      spec.kind = SurfaceBundleSpec::Kind::non_orientable;
      spec.genus = gt;
      spec.rank = n;
      const ConnectivityResult r = connectivity_nonorientable(spec);
      const i64 d = 2 * n * gt - 3 * gt + 1;
      if (r.min_codim != d || r.connectivity != d - 2 || r.status != ConnStatus::exact ||
          !r.gap_certificate || !(r.witness == symmetric_mu_family(n, 1).full())) {
        detail = "closed form failed at n=" + std::to_string(n) + " gt=" + std::to_string(gt);
        return false;
      }
      // independent re-check straight off the enumeration
      i64 min_nonempty = -1;
      bool gap_hit = false;
      for (const SymmetricStratum& s : enumerate_symmetric(n, gt, d + 2)) {
        if (s.seq.half.empty()) continue;  // central stratum
        if (s.status == EmptinessStatus::nonempty && min_nonempty < 0) min_nonempty = s.codim.c;
        if (s.status != EmptinessStatus::empty && s.codim.c == d + 1) gap_hit = true;
      }
      if (min_nonempty != d || gap_hit) {
        detail = "enumeration disagrees at n=" + std::to_string(n) + " gt=" + std::to_string(gt);
        return false;
      }
      ++cases;
    }
  detail = std::to_string(cases) + " (n,gt) cases: minimum = 2n*gt-3gt+1, witness mu_1, gap certified";
  return true;
}

bool c05_klein_bottle(std::string& detail) {
  i64 cases = 0;
  for (i64 n = 3; n <= 11; n += 2) {
    SurfaceBundleSpec spec;
    spec.kind = SurfaceBundleSpec::Kind::non_orientable;
    spec.genus = 1;
    spec.rank = n;
    const ConnectivityResult r = connectivity_nonorientable(spec);
    if (r.connectivity != n - 1 || r.status != ConnStatus::exact) {
      detail = "odd rank " + std::to_string(n) + " should be exactly (n-1)-connected";
      return false;
    }
    ++cases;
  }
  for (i64 n = 2; n <= 12; n += 2) {
    SurfaceBundleSpec spec;
    spec.kind = SurfaceBundleSpec::Kind::non_orientable;
    spec.genus = 1;
    spec.rank = n;
    spec.bundle_class = BundleClass::minus;
    const ConnectivityResult minus = connectivity_nonorientable(spec);
    spec.bundle_class = BundleClass::plus;
    const ConnectivityResult plus = connectivity_nonorientable(spec);
    if (minus.connectivity != n - 2 || minus.status != ConnStatus::exact) {
      detail = "class minus at rank " + std::to_string(n) + " should be (n-2)-connected";
      return false;
    }
    if (plus.connectivity != n || plus.status != ConnStatus::exact) {
      detail = "class plus at rank " + std::to_string(n) + " should be n-connected";
      return false;
    }
    // parity rule for pure pairs, both classes
    for (BundleClass bc : {BundleClass::minus, BundleClass::plus}) {
      for (const SymmetricStratum& s : enumerate_symmetric(n, 1, 3 * n + 1, bc)) {
        if (!s.seq.is_pure_pair()) continue;
        const bool even = (n + s.seq.half[0].degree + 2) % 2 == 0;
        const bool expect_nonempty = (bc == BundleClass::plus) ? even : !even;
        if (s.status != (expect_nonempty ? EmptinessStatus::nonempty : EmptinessStatus::empty)) {
          detail = "pure-pair parity rule violated at rank " + std::to_string(n);
          return false;
        }
        ++cases;
      }
    }
  }
  detail = "odd ranks 3..11, even ranks 2..12 for both classes; pure-pair parity checked (" +
           std::to_string(cases) + " parity cases)";
  return true;
}

bool c06_rank5_lower_bound_only(std::string& detail) {
  for (i64 gt : {2, 4}) {
    SurfaceBundleSpec spec;
    spec.kind = SurfaceBundleSpec::Kind::non_orientable;
    spec.genus = gt;
    spec.rank = 5;
    const ConnectivityResult r = connectivity_nonorientable(spec);
    if (r.status != ConnStatus::lower_bound_only || r.gap_certificate) {
      detail = "rank 5, gt=" + std::to_string(gt) + " should be lower_bound_only";
      return false;
    }
  }
  detail = "rank 5 at double-cover genus 2 and 4 reports lower_bound_only";
  return true;
}

bool c07_linear_extensions(std::string& detail) {
  i64 sets = 0;
  for (i64 n = 1; n <= 5; ++n)
    for (i64 k = -5; k <= 5; ++k)
      for (i64 g = 1; g <= 3; ++g)
        for (i64 bound = 1; bound <= 15; ++bound) {
          const StratumSet set = enumerate_strata(n, k, g, bound);
          const LinearExtension ext = linear_extension(set);
          if (!(ext.order.front() == seq({{n, k}}))) {
            detail = "order must start at the semi-stable type (n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + ")";
            return false;
          }
          if (!validate_extension(ext)) {
            detail = "extension failed validation at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " g=" + std::to_string(g) +
                     " D=" + std::to_string(bound);
            return false;
          }
          ++sets;
        }
  detail = std::to_string(sets) + " stratum sets linearized and validated";
  return true;
}

bool c08_minimal_covers(std::string& detail) {
  const VerifyReport report = verify_covers(5, 5, 20);
  detail = std::to_string(report.checked) + " base sequences, optimized covers = naive covers";
  if (!report.pass && !report.counterexamples.empty()) detail = report.counterexamples.front();
  return report.pass;
}

bool c09_critical_value_monotonicity(std::string& detail) {
  const VerifyReport report = verify_monotone_sweep(6, 6, 20);
  detail = std::to_string(report.checked) + " comparable pairs, l respects dominance";
  if (!report.pass && !report.counterexamples.empty()) detail = report.counterexamples.front();
  return report.pass;
}

bool c10_enumeration_completeness(std::string& detail) {
  const VerifyReport report = verify_enumeration(5, 5, 3, 15);
  detail = std::to_string(report.checked) + " (n,k,g,D) windows, box oracle = pruned enumeration";
  if (!report.pass && !report.counterexamples.empty()) detail = report.counterexamples.front();
  return report.pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"01 cyclic-residue-sets (n<=12, |k|<=12)", 1000, c01_cyclic_residue_sets},
      {"02 orientable-formula-vs-bruteforce (n<=8, |k|<=8, g<=3)", 30000,
       c02_orientable_formula_vs_bruteforce},
      {"03 rank6-chern2-example", 0, c03_rank6_chern2_example},
      {"04 nonorientable-closed-form (n=9..14, gt=2..3)", 60000, c04_nonorientable_closed_form},
      {"05 klein-bottle-cases", 0, c05_klein_bottle},
      {"06 rank5-lower-bound-only (gt=2,4)", 0, c06_rank5_lower_bound_only},
      {"07 linear-extension-validity (n<=5, |k|<=5, g<=3, D<=15)", 30000, c07_linear_extensions},
      {"08 minimal-covers-vs-oracle (n<=5, |k|<=5)", 60000, c08_minimal_covers},
      {"09 critical-value-monotonicity (n<=6, c<20)", 60000, c09_critical_value_monotonicity},
      {"10 enumeration-completeness (n<=5, |k|<=5, g<=3, D<=15)", 0, c10_enumeration_completeness},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.budget_ms > 0 && ms > criterion.budget_ms) {
      ok = false;
      detail += " [over budget " + std::to_string(criterion.budget_ms) + " ms]";
    }
    std::printf("[%s] %s — %s (%.0f ms)\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                detail.c_str(), ms);
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
