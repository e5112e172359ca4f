#include "hnstrata/sequence.hpp"

#include <algorithm>
#include <string>

namespace hnstrata {

AdmissibleSequence AdmissibleSequence::make(std::vector<Block> blocks) {
  if (blocks.empty()) fail(errc::invalid_rank, "admissible sequence must have at least one block");
  i64 n = 0, k = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].rank <= 0)
      fail(errc::invalid_rank, "non-positive rank at block " + std::to_string(i + 1));
    n = checked_add(n, blocks[i].rank);
    k = checked_add(k, blocks[i].degree);
  }
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    // k_{i-1}/n_{i-1} > k_i/n_i, cross-multiplied (ranks positive).
    i64 lhs = checked_mul(blocks[i - 1].degree, blocks[i].rank);
    i64 rhs = checked_mul(blocks[i].degree, blocks[i - 1].rank);
    if (lhs <= rhs) fail(errc::slope_order, "slope-order violation at block " + std::to_string(i + 1));
  }
  return AdmissibleSequence(std::move(blocks), n, k);
}

ConvexPath ConvexPath::from_vertices(std::vector<LatticePoint> vertices) {
  if (vertices.size() < 2) fail(errc::convexity, "path needs at least two vertices");
  if (vertices.front() != LatticePoint{0, 0}) fail(errc::convexity, "path must start at (0,0)");
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].x <= vertices[i - 1].x)
      fail(errc::convexity, "x-coordinates must strictly increase at vertex " + std::to_string(i + 1));
  }
  for (std::size_t i = 2; i < vertices.size(); ++i) {
    i64 dx1 = vertices[i - 1].x - vertices[i - 2].x;
    i64 dy1 = vertices[i - 1].y - vertices[i - 2].y;
    i64 dx2 = vertices[i].x - vertices[i - 1].x;
    i64 dy2 = vertices[i].y - vertices[i - 1].y;
    if (checked_mul(dy1, dx2) <= checked_mul(dy2, dx1))
      fail(errc::convexity, "convexity violation at vertex " + std::to_string(i + 1));
  }
  return ConvexPath(std::move(vertices));
}

Rational ConvexPath::height(i64 x) const {
  if (x < 0 || x > span_rank()) fail(errc::index_out_of_range, "height query outside [0, n]");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (x <= vertices_[i].x) {
      const auto& a = vertices_[i - 1];
      const auto& b = vertices_[i];
      // Linear interpolation: a.y + (x - a.x)(b.y - a.y)/(b.x - a.x).
      return Rational(checked_add(checked_mul(a.y, b.x - a.x), checked_mul(x - a.x, b.y - a.y)),
                      b.x - a.x);
    }
  }
  return Rational(vertices_.back().y);
}

ConvexPath to_path(const AdmissibleSequence& mu) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(mu.length() + 1);
  vertices.push_back({0, 0});
  i64 x = 0, y = 0;
  for (const Block& b : mu.blocks()) {
    x = checked_add(x, b.rank);
    y = checked_add(y, b.degree);
    vertices.push_back({x, y});
  }
  return ConvexPath::from_vertices(std::move(vertices));
}

AdmissibleSequence from_path(const ConvexPath& path) {
  std::vector<Block> blocks;
  const auto& v = path.vertices();
  blocks.reserve(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i)
    blocks.push_back({v[i].x - v[i - 1].x, v[i].y - v[i - 1].y});
  return AdmissibleSequence::make(std::move(blocks));
}

std::vector<Rational> slope_vector(const AdmissibleSequence& mu) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(mu.total_rank()));
  for (const Block& b : mu.blocks())
    for (i64 j = 0; j < b.rank; ++j) out.push_back(Rational(b.degree, b.rank));
  return out;
}

CodimensionReport codimension(const AdmissibleSequence& mu, i64 genus) {
  if (genus < 1) fail(errc::unsupported_genus, "codimension requires genus >= 1");
  const auto& bs = mu.blocks();
  i64 c1 = 0, pairs = 0;
  for (std::size_t i = 1; i < bs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      c1 = checked_add(c1, checked_sub(checked_mul(bs[i].rank, bs[j].degree),
                                       checked_mul(bs[j].rank, bs[i].degree)));
      pairs = checked_add(pairs, checked_mul(bs[i].rank, bs[j].rank));
    }
  }
  CodimensionReport report;
  report.c1 = c1;
  report.c2 = checked_mul(genus - 1, pairs);
  report.c = checked_add(report.c1, report.c2);
  report.critical_value = critical_value(mu);
  return report;
}

Rational critical_value(const AdmissibleSequence& mu) {
  Rational total(0);
  for (const Block& b : mu.blocks())
    total = total + Rational(checked_mul(b.degree, b.degree), b.rank);
  return total;
}

AdmissibleSequence canonical_length_two(i64 n, i64 k, i64 m) {
  if (n < 2) fail(errc::index_out_of_range, "canonical_length_two requires n >= 2");
  if (m < 1 || m > n - 1) fail(errc::index_out_of_range, "m must satisfy 1 <= m <= n-1");
  i64 l = ceil_strict(Rational(checked_mul(k, m), n));
  return AdmissibleSequence::make({{m, l}, {n - m, checked_sub(k, l)}});
}

AdmissibleSequence collapse_head(const AdmissibleSequence& mu) {
  if (mu.length() < 2) fail(errc::index_out_of_range, "collapse_head requires length >= 2");
  const auto& bs = mu.blocks();
  i64 n_head = 0, k_head = 0;
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    n_head = checked_add(n_head, bs[i].rank);
    k_head = checked_add(k_head, bs[i].degree);
  }
  return AdmissibleSequence::make({{n_head, k_head}, bs.back()});
}

bool path_lex_less(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  return to_path(a).vertices() < to_path(b).vertices();
}

i64 height_scale(i64 n) {
  i64 scale = 1;
  for (i64 d = 2; d <= n; ++d) scale = checked_mul(scale, d / gcd_i64(scale, d));
  return scale;
}

std::vector<i64> scaled_heights(const AdmissibleSequence& mu) {
  const i64 n = mu.total_rank();
  const i64 scale = height_scale(n);
  std::vector<i64> h(static_cast<std::size_t>(n) + 1, 0);
  i64 x = 0, y = 0;
  for (const Block& b : mu.blocks()) {
    const i64 step = checked_mul(b.degree, scale / b.rank);
    for (i64 j = 1; j <= b.rank; ++j)
      h[static_cast<std::size_t>(x + j)] = checked_add(checked_mul(y, scale), checked_mul(j, step));
    x += b.rank;
    y = checked_add(y, b.degree);
  }
  return h;
}

}  // namespace hnstrata
