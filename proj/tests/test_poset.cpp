#include <doctest.h>

#include <algorithm>
#include <set>

#include "hnstrata/poset.hpp"

using namespace hnstrata;

namespace {

AdmissibleSequence seq(std::vector<Block> blocks) { return AdmissibleSequence::make(std::move(blocks)); }

// Right endpoint of the rightmost segment of P with slope >= k/n.
LatticePoint h_point(const ConvexPath& p) {
  const i64 n = p.span_rank();
  const i64 k = p.span_degree();
  const auto& v = p.vertices();
  LatticePoint h = v[1];
  for (std::size_t i = 1; i < v.size(); ++i) {
    const i64 dx = v[i].x - v[i - 1].x;
    const i64 dy = v[i].y - v[i - 1].y;
    if (dy * n >= k * dx) h = v[i];
  }
  return h;
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("dominates examples") {
  const auto upper = seq({{1, 1}, {5, 1}});
  const auto lower = seq({{2, 1}, {4, 1}});
  CHECK(dominates(upper, lower));
  CHECK_FALSE(dominates(lower, upper));

  const auto mu = seq({{3, 2}, {3, 0}});
  CHECK(dominates(mu, mu));

  const auto line = seq({{6, 2}});
  CHECK_FALSE(dominates(line, upper));
  CHECK(dominates(upper, line));

  CHECK_THROWS_AS(dominates(seq({{2, 1}}), seq({{3, 1}})), error);
  try {
    dominates(seq({{2, 1}}), seq({{2, 0}}));
  } catch (const error& e) {
    CHECK(e.code() == errc::incomparable_context);
  }
}

TEST_CASE("prefix-sum and path formulations agree") {
  for (i64 k : {-2, 0, 3}) {
    const auto set = enumerate_strata(5, k, 1, 12);
    for (const auto& a : set.members)
      for (const auto& b : set.members)
        CHECK(dominates(a, b) == path_lies_above(to_path(a), to_path(b)));
  }
}

TEST_CASE("dominance is a partial order") {
  for (const auto& set : {enumerate_strata(4, 1, 2, 14), enumerate_strata(5, -1, 1, 10)}) {
    const auto& m = set.members;
    for (const auto& a : m) CHECK(dominates(a, a));
    for (const auto& a : m)
      for (const auto& b : m)
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
    for (const auto& a : m)
      for (const auto& b : m) {
        if (!dominates(a, b)) continue;
        for (const auto& c : m)
          if (dominates(b, c)) CHECK(dominates(a, c));
      }
  }
}

TEST_CASE("enumerate_strata examples") {
  const auto small = enumerate_strata(2, 0, 1, 3);
  CHECK(small.members == std::vector<AdmissibleSequence>{seq({{2, 0}}), seq({{1, 1}, {1, -1}})});
  CHECK(small.context == StratumContext{2, 0, 1});
  CHECK(small.bound == 3);

  const auto only_central = enumerate_strata(2, 0, 1, 1);
  CHECK(only_central.members == std::vector<AdmissibleSequence>{seq({{2, 0}})});

  const auto six = enumerate_strata(6, 2, 2, 8);
  const auto witness = seq({{5, 2}, {1, 0}});
  CHECK(std::count(six.members.begin(), six.members.end(), witness) == 1);
  for (const auto& mu : six.members)
    if (!mu.semi_stable()) CHECK(codimension(mu, 2).c >= 7);

  CHECK_THROWS_AS(enumerate_strata(0, 0, 1, 5), error);
  CHECK_THROWS_AS(enumerate_strata(2, 0, 0, 5), error);
  CHECK_THROWS_AS(enumerate_strata(2, 0, 1, 0), error);
}

TEST_CASE("enumerate_strata output is deterministic and well-formed") {
  const auto set = enumerate_strata(5, -1, 2, 14);
  CHECK(!set.members.empty());
  CHECK(set.members.front() == seq({{5, -1}}));
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    const auto& mu = set.members[i];
    CHECK(mu.total_rank() == 5);
    CHECK(mu.total_degree() == -1);
    CHECK(codimension(mu, 2).c < 14);
    if (i > 0) {
      const i64 prev = codimension(set.members[i - 1], 2).c;
      const i64 cur = codimension(mu, 2).c;
      CHECK(prev <= cur);
      if (prev == cur) CHECK(path_lex_less(set.members[i - 1], mu));
    }
  }
  // deduplicated
  for (std::size_t i = 0; i < set.members.size(); ++i)
    for (std::size_t j = i + 1; j < set.members.size(); ++j)
      CHECK_FALSE(set.members[i] == set.members[j]);
}

TEST_CASE("rank one is degenerate but supported") {
  const auto set = enumerate_strata(1, 7, 2, 5);
  CHECK(set.members == std::vector<AdmissibleSequence>{seq({{1, 7}})});
  CHECK(minimal_covers(seq({{1, 7}})).empty());
  const auto ext = linear_extension(set);
  CHECK(ext.order.size() == 1);
  CHECK(validate_extension(ext));
}

TEST_CASE("cover_search_bounds fields") {
  const auto b1 = cover_search_bounds(seq({{1, 1}, {5, 1}}));
  CHECK(b1.s1 == Rational(1));
  CHECK(b1.sr == Rational(0));
  CHECK(b1.h2_bound == 8);  // 6*(1-0) + max(2,0)

  const auto b2 = cover_search_bounds(seq({{2, 0}}));
  CHECK(b2.s1 == Rational(0));
  CHECK(b2.sr == Rational(0));
  CHECK(b2.h2_bound == 0);

  const auto b3 = cover_search_bounds(seq({{1, 2}, {2, -3}}));
  CHECK(b3.s1 == Rational(2));
  CHECK(b3.sr == Rational(-3, 2));
  CHECK(b3.h2_bound == 10);  // floor(3*(2+3/2)) + 0
  CHECK(b3.h2_bound >= 0);
}

TEST_CASE("minimal_covers examples") {
  CHECK(minimal_covers(seq({{2, 0}})) == std::vector<AdmissibleSequence>{seq({{1, 1}, {1, -1}})});
  CHECK(minimal_covers(seq({{3, 0}})) ==
        std::vector<AdmissibleSequence>{seq({{1, 1}, {2, -1}}), seq({{2, 1}, {1, -1}})});
  // the three-step refinement dominates both covers, hence is not one
  const auto fine = seq({{1, 1}, {1, 0}, {1, -1}});
  for (const auto& cover : minimal_covers(seq({{3, 0}}))) {
    CHECK(dominates(fine, cover));
    CHECK_FALSE(fine == cover);
  }
}

TEST_CASE("covers strictly dominate and form an antichain") {
  for (i64 k : {-1, 0, 2}) {
    for (const auto& mu : enumerate_strata(4, k, 1, 8).members) {
      const auto covers = minimal_covers(mu);
      for (const auto& cover : covers) {
        CHECK(dominates(cover, mu));
        CHECK_FALSE(cover == mu);
      }
      for (std::size_t i = 0; i < covers.size(); ++i)
        for (std::size_t j = 0; j < covers.size(); ++j)
          if (i != j) CHECK_FALSE(dominates(covers[i], covers[j]));
    }
  }
}

TEST_CASE("covers respect the finite search region") {
  for (i64 k : {-2, 0, 1, 3}) {
    for (const auto& mu : enumerate_strata(5, k, 1, 9).members) {
      const auto bounds = cover_search_bounds(mu);
      for (const auto& cover : minimal_covers(mu)) {
        const auto path = to_path(cover);
        const i64 h2 = h_point(path).y;
        const bool in_region = h2 <= bounds.h2_bound;
        const bool exceptional = cover.length() <= 2;
        CHECK((in_region || exceptional));
      }
    }
  }
}

TEST_CASE("linear_extension examples") {
  const auto chain = linear_extension(enumerate_strata(2, 0, 1, 5));
  CHECK(chain.order == std::vector<AdmissibleSequence>{seq({{2, 0}}), seq({{1, 1}, {1, -1}}),
                                                       seq({{1, 2}, {1, -2}})});
  CHECK(chain.levels == std::vector<i64>{0, 1, 2});
  CHECK(chain.level_of(seq({{1, 1}, {1, -1}})) == 1);
  CHECK_FALSE(chain.level_of(seq({{1, 3}, {1, -3}})).has_value());

  for (i64 k : {0, 1, -2}) {
    const auto ext = linear_extension(enumerate_strata(4, k, 2, 12));
    CHECK(ext.order.front() == seq({{4, k}}));
    CHECK(ext.levels.front() == 0);
    CHECK(validate_extension(ext));
  }
}

TEST_CASE("every prefix of the order is a down-set") {
  const auto set = enumerate_strata(3, 0, 2, 12);
  const auto ext = linear_extension(set);
  CHECK(validate_extension(ext));
  for (std::size_t cut = 0; cut < ext.order.size(); ++cut) {
    // nothing after the cut sits below anything inside it
    for (std::size_t p = 0; p <= cut; ++p)
      for (std::size_t q = cut + 1; q < ext.order.size(); ++q)
        CHECK_FALSE(dominates(ext.order[p], ext.order[q]));
  }
}

TEST_CASE("linear_extension is a permutation with monotone levels") {
  const auto set = enumerate_strata(4, 1, 2, 14);
  const auto ext = linear_extension(set);
  CHECK(validate_extension(ext));
  CHECK(ext.order.size() == set.members.size());
  for (const auto& mu : set.members)
    CHECK(std::count(ext.order.begin(), ext.order.end(), mu) == 1);
  for (std::size_t i = 1; i < ext.levels.size(); ++i) CHECK(ext.levels[i - 1] <= ext.levels[i]);
}

TEST_CASE("validate_extension rejects a reversed chain") {
  const auto lo = seq({{2, 0}});
  const auto hi = seq({{1, 1}, {1, -1}});
  LinearExtension bad{{2, 0, 1}, 5, {hi, lo}, {0, 1}};
  CHECK_FALSE(validate_extension(bad));
  LinearExtension good{{2, 0, 1}, 5, {lo, hi}, {0, 1}};
  CHECK(validate_extension(good));
}

TEST_CASE("linear_extension requires a nonempty set") {
  StratumSet empty{{2, 0, 1}, 3, {}};
  CHECK_THROWS_AS(linear_extension(empty), error);
}

}  // TEST_SUITE
