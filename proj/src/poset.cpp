#include "hnstrata/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

namespace hnstrata {

namespace {

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }  // b > 0

void require_same_context(i64 n1, i64 k1, i64 n2, i64 k2) {
  if (n1 != n2 || k1 != k2)
    fail(errc::incomparable_context, "sequences have different (rank, degree) context");
}

}  // namespace

bool dominates(const AdmissibleSequence& lhs, const AdmissibleSequence& rhs) {
  require_same_context(lhs.total_rank(), lhs.total_degree(), rhs.total_rank(), rhs.total_degree());
  const auto a = slope_vector(lhs);
  const auto b = slope_vector(rhs);
  Rational sum_a(0), sum_b(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a = sum_a + a[i];
    sum_b = sum_b + b[i];
    if (sum_a < sum_b) return false;
  }
  return true;
}

bool path_lies_above(const ConvexPath& upper, const ConvexPath& lower) {
  require_same_context(upper.span_rank(), upper.span_degree(), lower.span_rank(),
                       lower.span_degree());
  // The difference is piecewise linear with breakpoints at the union of the
  // two vertex sets, so checking there is exhaustive.
  std::vector<i64> xs;
  for (const auto& v : upper.vertices()) xs.push_back(v.x);
  for (const auto& v : lower.vertices()) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (i64 x : xs)
    if (upper.height(x) < lower.height(x)) return false;
  return true;
}

StratumSet enumerate_strata(i64 n, i64 k, i64 genus, i64 bound) {
  if (n < 1) fail(errc::invalid_rank, "total rank must be positive");
  if (genus < 1) fail(errc::unsupported_genus, "enumeration requires genus >= 1");
  if (bound < 1) fail(errc::index_out_of_range, "codimension bound must be >= 1");

  std::vector<AdmissibleSequence> members;
  std::vector<Block> stack;

  // Depth-first over blocks.  The partial codimension only grows as blocks
  // are appended (every pairwise term is positive), so branches with
  // partial >= bound are dead.  Degree windows:
  //   first block:  k*n_1/n < k_1   and   k_1*n - k*n_1 <= bound - 1
  //   later blocks: slope strictly below the previous one, and
  //                 k_i > -bound (k >= 0) or k_i > k - bound (k < 0),
  //                 tightened by the running-codimension constraint.
  auto rec = [&](auto&& self, i64 used_rank, i64 used_degree, i64 partial) -> void {
    const i64 remaining = n - used_rank;
    const bool first = stack.empty();
    for (i64 nb = 1; nb <= remaining; ++nb) {
      const bool last = (nb == remaining);
      if (first && last) {
        stack.push_back({n, k});
        members.push_back(AdmissibleSequence::make(stack));
        stack.pop_back();
        continue;
      }
      auto delta_for = [&](i64 kb) {
        // contribution of the new block against all previous ones
        return checked_add(
            checked_sub(checked_mul(nb, used_degree), checked_mul(used_rank, kb)),
            checked_mul(checked_mul(genus - 1, nb), used_rank));
      };
      if (last) {
        const i64 kb = checked_sub(k, used_degree);
        const Block& prev = stack.back();
        if (checked_mul(kb, prev.rank) >= checked_mul(prev.degree, nb)) continue;
        const i64 delta = delta_for(kb);
        if (checked_add(partial, delta) > bound - 1) continue;
        stack.push_back({nb, kb});
        members.push_back(AdmissibleSequence::make(stack));
        stack.pop_back();
        continue;
      }
      i64 lo, hi;
      if (first) {
        lo = checked_add(floor_div(checked_mul(k, nb), n), 1);
        hi = floor_div(checked_add(checked_mul(k, nb), bound - 1), n);
      } else {
        const Block& prev = stack.back();
        hi = floor_div(checked_sub(checked_mul(prev.degree, nb), 1), prev.rank);
        lo = (k >= 0) ? checked_sub(1, bound) : checked_add(checked_sub(k, bound), 1);
        const i64 numer =
            checked_sub(checked_add(checked_mul(nb, used_degree),
                                    checked_mul(checked_mul(genus - 1, nb), used_rank)),
                        bound - 1 - partial);
        lo = std::max(lo, ceil_div(numer, used_rank));
      }
      for (i64 kb = lo; kb <= hi; ++kb) {
        const i64 delta = first ? 0 : delta_for(kb);
        stack.push_back({nb, kb});
        self(self, used_rank + nb, used_degree + kb, partial + delta);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0, 0, 0);

  std::vector<std::pair<i64, std::size_t>> keys(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    keys[i] = {codimension(members[i], genus).c, i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return path_lex_less(members[a.second], members[b.second]);
  });
  std::vector<AdmissibleSequence> sorted;
  sorted.reserve(members.size());
  for (const auto& [c, i] : keys) sorted.push_back(std::move(members[i]));
  return StratumSet{{n, k, genus}, bound, std::move(sorted)};
}

CoverSearchBounds cover_search_bounds(const AdmissibleSequence& mu) {
  const Rational zero(0);
  Rational s1 = std::max(mu.slope(0), zero);
  Rational sr = std::min(mu.slope(mu.length() - 1), zero);
  const Rational span = (s1 - sr) * Rational(mu.total_rank());
  const i64 h2 = checked_add(span.floor(), std::max<i64>(mu.total_degree(), 0));
  return CoverSearchBounds{s1, sr, h2};
}

namespace {

// Upper concave hull of a point set that starts at the unique leftmost point
// and ends at the unique rightmost one; vertices come out with strictly
// decreasing slopes.
std::vector<LatticePoint> upper_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  // keep only the highest point per x
  std::vector<LatticePoint> uniq;
  for (const auto& p : pts) {
    if (!uniq.empty() && uniq.back().x == p.x)
      uniq.back() = p;
    else
      uniq.push_back(p);
  }
  std::vector<LatticePoint> hull;
  for (const auto& p : uniq) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const i64 cross = checked_sub(checked_mul(b.x - a.x, p.y - a.y),
                                    checked_mul(b.y - a.y, p.x - a.x));
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

// Visits every convex lattice path R from (0,0) to (n,k) satisfying
// low[x] <= scale*R(x) <= up[x] at each integer x.  The bounding envelopes
// are linear between consecutive integers, so integer-point checks decide
// the pointwise comparison.  Returns false when the visitor aborted.
bool visit_paths_between(const std::vector<i64>& low, const std::vector<i64>& up, i64 scale,
                         i64 n, i64 k,
                         const std::function<bool(const std::vector<LatticePoint>&)>& visit) {
  std::vector<LatticePoint> stack{{0, 0}};
  auto rec = [&](auto&& self, i64 x, i64 y, bool has_prev, i64 pdx, i64 pdy) -> bool {
    for (i64 x2 = x + 1; x2 <= n; ++x2) {
      i64 ylo = ceil_div(low[static_cast<std::size_t>(x2)], scale);
      i64 yhi = floor_div(up[static_cast<std::size_t>(x2)], scale);
      if (x2 == n) {
        ylo = std::max(ylo, k);
        yhi = std::min(yhi, k);
      }
      for (i64 y2 = ylo; y2 <= yhi; ++y2) {
        const i64 dx = x2 - x, dy = y2 - y;
        if (has_prev && checked_mul(dy, pdx) >= checked_mul(pdy, dx)) continue;  // slopes must strictly decrease
        if (x2 < n && checked_mul(k - y2, dx) >= checked_mul(dy, n - x2)) continue;  // tail must stay convex
        bool ok = true;
        for (i64 xx = x + 1; xx < x2 && ok; ++xx) {
          const i64 v = checked_mul(scale, checked_add(checked_mul(y, x2 - xx), checked_mul(y2, xx - x)));
          if (v < checked_mul(low[static_cast<std::size_t>(xx)], dx) ||
              v > checked_mul(up[static_cast<std::size_t>(xx)], dx))
            ok = false;
        }
        if (!ok) continue;
        stack.push_back({x2, y2});
        bool keep_going = (x2 == n) ? visit(stack) : self(self, x2, y2, true, dx, dy);
        stack.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  };
  return rec(rec, 0, 0, false, 0, 0);
}

std::vector<i64> scaled_path_heights(const ConvexPath& path, i64 scale) {
  const i64 n = path.span_rank();
  std::vector<i64> h(static_cast<std::size_t>(n) + 1);
  for (i64 x = 0; x <= n; ++x) {
    const Rational v = path.height(x) * Rational(scale);
    h[static_cast<std::size_t>(x)] = v.num();  // integral since den | scale
  }
  return h;
}

}  // namespace

std::vector<AdmissibleSequence> minimal_covers(const AdmissibleSequence& mu) {
  const i64 n = mu.total_rank();
  const i64 k = mu.total_degree();
  if (n == 1) return {};

  const ConvexPath base = to_path(mu);
  const i64 scale = height_scale(n);
  const std::vector<i64> low = scaled_heights(mu);

  // Raise one lattice point minimally above the path and take the least
  // concave majorant.  Any path strictly above P passes weakly above one of
  // these, so the covers are exactly the certified candidates below.
  std::vector<std::vector<LatticePoint>> candidates;
  for (i64 x0 = 1; x0 < n; ++x0) {
    const i64 y0 = floor_div(low[static_cast<std::size_t>(x0)], scale) + 1;
    std::vector<LatticePoint> pts = base.vertices();
    pts.push_back({x0, y0});
    candidates.push_back(upper_hull(std::move(pts)));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a < b; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<AdmissibleSequence> covers;
  for (const auto& cand : candidates) {
    const ConvexPath q = ConvexPath::from_vertices(cand);
    const std::vector<i64> up = scaled_path_heights(q, scale);
    bool strictly_between = false;
    visit_paths_between(low, up, scale, n, k, [&](const std::vector<LatticePoint>& r) {
      if (r != base.vertices() && r != cand) {
        strictly_between = true;
        return false;
      }
      return true;
    });
    if (!strictly_between) covers.push_back(from_path(q));
  }
  std::sort(covers.begin(), covers.end(), path_lex_less);
  return covers;
}

std::optional<i64> LinearExtension::level_of(const AdmissibleSequence& mu) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == mu) return levels[i];
  return std::nullopt;
}

LinearExtension linear_extension(const StratumSet& set) {
  if (set.members.empty()) fail(errc::index_out_of_range, "linear_extension needs a nonempty set");
  const std::size_t m = set.members.size();
  for (const AdmissibleSequence& mu : set.members)
    if (mu.total_rank() != set.context.rank || mu.total_degree() != set.context.degree)
      fail(errc::incomparable_context, "stratum set member outside its (rank, degree) context");

  std::vector<std::vector<i64>> heights(m);
  std::vector<i64> codim(m);
  std::vector<ConvexPath> paths;
  paths.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    heights[i] = scaled_heights(set.members[i]);
    codim[i] = codimension(set.members[i], set.context.genus).c;
    paths.push_back(to_path(set.members[i]));
  }
  auto strictly_below = [&](std::size_t a, std::size_t b) {  // member a < member b
    bool all_le = true, some_lt = false;
    for (std::size_t x = 0; x < heights[a].size() && all_le; ++x) {
      if (heights[a][x] > heights[b][x]) all_le = false;
      if (heights[a][x] < heights[b][x]) some_lt = true;
    }
    return all_le && some_lt;
  };

  std::vector<std::vector<std::size_t>> successors(m);
  std::vector<std::size_t> indeg(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && strictly_below(a, b)) {
        successors[a].push_back(b);
        ++indeg[b];
      }

  LinearExtension ext{set.context, set.bound, {}, {}};
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) current.push_back(i);

  i64 level = 0;
  while (!current.empty()) {
    std::sort(current.begin(), current.end(), [&](std::size_t a, std::size_t b) {
      if (codim[a] != codim[b]) return codim[a] < codim[b];
      return paths[a].vertices() < paths[b].vertices();
    });
    std::vector<std::size_t> next;
    for (std::size_t idx : current) {
      ext.order.push_back(set.members[idx]);
      ext.levels.push_back(level);
      for (std::size_t s : successors[idx])
        if (--indeg[s] == 0) next.push_back(s);
    }
    current = std::move(next);
    ++level;
  }
  if (ext.order.size() != m) fail(errc::internal, "layering did not exhaust the poset");
  return ext;
}

bool validate_extension(const LinearExtension& ext) {
  const std::size_t m = ext.order.size();
  for (const AdmissibleSequence& mu : ext.order)
    if (mu.total_rank() != ext.context.rank || mu.total_degree() != ext.context.degree)
      fail(errc::incomparable_context, "extension member outside its (rank, degree) context");
  std::vector<std::vector<i64>> heights(m);
  for (std::size_t i = 0; i < m; ++i) heights[i] = scaled_heights(ext.order[i]);
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      // a violation is an earlier element lying strictly above a later one
      bool ge = true, gt = false;
      for (std::size_t x = 0; x < heights[p].size() && ge; ++x) {
        if (heights[p][x] < heights[q][x]) ge = false;
        if (heights[p][x] > heights[q][x]) gt = true;
      }
      if (ge && gt) return false;
    }
  }
  return true;
}

}  // namespace hnstrata
