#pragma once

// Finite relations, poset checks, Hasse covers, and the poset-induced
// BCK-algebra x*y = 0 if x <= y, x otherwise.

#include "dtriple/algebra.hpp"
#include "dtriple/classify.hpp"
#include "dtriple/nabla.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtriple {

/// Square boolean matrix over points 0..size-1; holds(i, j) reads "i <= j".
class Relation {
 public:
  explicit Relation(std::size_t size, std::vector<std::string> labels = {})
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != size_) throw std::invalid_argument("label count does not match size");
  }

  std::size_t size() const noexcept { return size_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

  bool holds(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v = true) {
    auto& w = bits_[i * words_ + j / 64];
    const auto mask = std::uint64_t{1} << (j % 64);
    w = v ? (w | mask) : (w & ~mask);
  }

  /// Row i as packed 64-bit words.
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const noexcept { return words_; }

  static Relation identity(std::size_t size) {
    Relation r(size);
    for (std::size_t i = 0; i < size; ++i) r.set(i, i);
    return r;
  }

  static Relation chain(std::size_t size) {
    Relation r(size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) r.set(i, j);
    return r;
  }

  friend bool operator==(const Relation& a, const Relation& b) { return a.size_ == b.size_ && a.bits_ == b.bits_; }

 private:
  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

struct PosetReport {
  FlagResult<std::size_t> reflexive;
  FlagResult<std::size_t> antisymmetric;
  FlagResult<std::size_t> transitive;
  bool is_poset() const { return reflexive.holds && antisymmetric.holds && transitive.holds; }
};

/// Reflexive closure of the strict order: t_i <= t_j iff i == j or t_i < t_j.
inline Relation order_relation(const NormalizerAlgebra& na) {
  std::vector<std::string> labels;
  labels.reserve(na.size());
  for (const auto& t : na.triples()) labels.push_back(NormalizerAlgebra::describe(t));
  Relation r(na.size(), std::move(labels));
  for (std::size_t i = 0; i < na.size(); ++i)
    for (std::size_t j = 0; j < na.size(); ++j)
      if (i == j || na.strict_less(i, j)) r.set(i, j);
  return r;
}

/// The strict relation itself, without the reflexive closure.
inline Relation strict_relation(const NormalizerAlgebra& na) {
  Relation r(na.size());
  for (std::size_t i = 0; i < na.size(); ++i)
    for (std::size_t j = 0; j < na.size(); ++j)
      if (na.strict_less(i, j)) r.set(i, j);
  return r;
}

inline FlagResult<std::size_t> check_transitive(const Relation& rel) {
  const auto m = rel.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!rel.holds(i, j)) continue;
      // Some k with j <= k but not i <= k?
      const auto* ri = rel.row(i);
      const auto* rj = rel.row(j);
      for (std::size_t w = 0; w < rel.words(); ++w)
        if (auto miss = rj[w] & ~ri[w]; miss != 0)
          return {false, {i, j, w * 64 + static_cast<std::size_t>(std::countr_zero(miss))}};
    }
  return {true, {}};
}

inline PosetReport check_poset(const Relation& rel) {
  PosetReport rep;
  const auto m = rel.size();
  for (std::size_t i = 0; i < m && rep.reflexive.holds; ++i)
    if (!rel.holds(i, i)) rep.reflexive = {false, {i}};
  for (std::size_t i = 0; i < m && rep.antisymmetric.holds; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && rel.holds(i, j) && rel.holds(j, i)) {
        rep.antisymmetric = {false, {i, j}};
        break;
      }
  rep.transitive = check_transitive(rel);
  return rep;
}

using Edge = std::pair<std::size_t, std::size_t>;

/// Transitive reduction of a poset, edges in lexicographic order.
inline std::vector<Edge> hasse_cover(const Relation& rel) {
  if (!check_poset(rel).is_poset()) throw std::invalid_argument("hasse_cover: relation is not a partial order");
  const auto m = rel.size();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      if (u == v || !rel.holds(u, v)) continue;
      bool covered = true;
      for (std::size_t w = 0; w < m && covered; ++w)
        if (w != u && w != v && rel.holds(u, w) && rel.holds(w, v)) covered = false;
      if (covered) edges.emplace_back(u, v);
    }
  return edges;
}

/// Reflexive-transitive closure of an edge list over `size` points.
inline Relation reflexive_transitive_closure(std::size_t size, const std::vector<Edge>& edges) {
  Relation r = Relation::identity(size);
  for (auto [u, v] : edges) r.set(u, v);
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (r.holds(i, k))
        for (std::size_t j = 0; j < size; ++j)
          if (r.holds(k, j)) r.set(i, j);
  return r;
}

/// Point order used by induce_bck: `zero` first, then the rest ascending.
inline std::vector<std::size_t> induced_point_order(std::size_t size, std::size_t zero) {
  std::vector<std::size_t> pts{zero};
  for (std::size_t i = 0; i < size; ++i)
    if (i != zero) pts.push_back(i);
  return pts;
}

/// x*y = 0 if x <= y, x otherwise. Point `zero` becomes element 0 and must be
/// the least element; the remaining points keep their relative order.
inline FiniteAlgebra induce_bck(const Relation& rel, std::size_t zero = 0) {
  const auto m = rel.size();
  if (m == 0) throw std::invalid_argument("induce_bck: empty relation");
  if (zero >= m) throw std::out_of_range("induce_bck: zero point outside relation");
  if (!check_poset(rel).is_poset()) throw std::invalid_argument("induce_bck: relation is not a partial order");
  for (std::size_t j = 0; j < m; ++j)
    if (!rel.holds(zero, j))
      throw std::invalid_argument("induce_bck: point " + rel.label(zero) + " is not below " + rel.label(j));
  const auto pts = induced_point_order(m, zero);
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      table[x * m + y] = rel.holds(pts[x], pts[y]) ? 0 : static_cast<Element>(x);
  return FiniteAlgebra(m, std::move(table));
}

}  // namespace dtriple
