#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "knotcx/seifert.hpp"

namespace knotcx::testing {

using Entry = SeifertMatrix::Entry;

inline SeifertMatrix block_sum(const std::vector<SeifertMatrix>& blocks) {
  std::size_t m = 0;
  for (const auto& b : blocks) m += b.size();
  std::vector<Entry> out(m * m, 0);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[(at + i) * m + at + j] = b(i, j);
    at += b.size();
  }
  return SeifertMatrix(SurfaceKind::knot, m, std::move(out));
}

/// P^T A P for a random unimodular P (product of elementary row operations).
inline SeifertMatrix random_congruence(const SeifertMatrix& a, std::mt19937_64& rng, int steps = 6) {
  const std::size_t m = a.size();
  if (m < 2) return a;
  std::vector<Entry> p(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) p[i * m + i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    const int c = coef(rng);
    if (i == j || c == 0) continue;
    for (std::size_t k = 0; k < m; ++k) p[i * m + k] += c * p[j * m + k];
  }
  std::vector<Entry> ap(m * m, 0), out(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) ap[i * m + j] += a(i, k) * p[k * m + j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) out[i * m + j] += p[k * m + i] * ap[k * m + j];
  return SeifertMatrix(a.kind(), m, std::move(out));
}

/// A random knot Seifert matrix of size <= max_size, built as a congruence
/// of a block sum of torus knots, their mirrors and genus-one pieces.
/// torus_terms records (n, +-1) for every torus summand, which lets tests
/// predict the signature away from Alexander roots.
struct RandomKnot {
  SeifertMatrix a;
  std::vector<std::pair<long, int>> torus_terms;
  bool only_torus = true;
};

inline RandomKnot random_knot(std::mt19937_64& rng, std::size_t max_size = 12, bool congruence = true) {
  RandomKnot out;
  std::vector<SeifertMatrix> blocks;
  std::size_t m = 0;
  std::uniform_int_distribution<int> kind(0, 3), small(-2, 2);
  const std::size_t target = 2 * std::uniform_int_distribution<std::size_t>(1, max_size / 2)(rng);
  while (m < target) {
    const std::size_t room = (target - m) / 2;
    const long n = std::uniform_int_distribution<long>(1, static_cast<long>(room))(rng);
    switch (kind(rng)) {
      case 0:
        blocks.push_back(torus_knot_seifert(n));
        out.torus_terms.emplace_back(n, 1);
        break;
      case 1:
        blocks.push_back(mirror(torus_knot_seifert(n)));
        out.torus_terms.emplace_back(n, -1);
        break;
      case 2:
        blocks.push_back(jn_seifert(n));
        out.only_torus = false;
        break;
      default: {
        const Entry b = small(rng);
        blocks.push_back(SeifertMatrix::from_rows(SurfaceKind::knot, {{small(rng), b}, {b - 1, small(rng)}}));
        out.only_torus = false;
        break;
      }
    }
    m += blocks.back().size();
  }
  out.a = block_sum(blocks);
  if (congruence) out.a = random_congruence(out.a, rng);
  return out;
}

}  // namespace knotcx::testing
