#pragma once

// Exhaustive generation of the finite d-algebras of a given order.
//
// Fixed cells: the diagonal (x*x = 0) and row 0 (0*x = 0). The remaining cells
// are filled in row-major order with values ascending, so tables come out in
// lexicographic order. Pruning as soon as a constraint's cells are assigned:
//   - x*0 != 0 for x != 0 (else 0*x = x*0 = 0 with x != 0 violates (III))
//   - for x != y, both nonzero: not (x*y = 0 and y*x = 0)
//   - optionally d-transitivity on every triple whose three cells are assigned.
// Edge, d* and BCK filters are applied to completed tables.

#include "dtriple/algebra.hpp"
#include "dtriple/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dtriple {

inline constexpr std::size_t kMinEnumOrder = 2;
inline constexpr std::size_t kMaxEnumOrder = 5;

struct EnumSpec {
  std::size_t n = 3;
  std::vector<Flag> filters;  // subset of {d_star, edge, d_transitive, bck}
  bool iso_reduce = false;
  unsigned threads = 1;  // >1 partitions the search; output order is unchanged

  bool wants(Flag f) const { return std::find(filters.begin(), filters.end(), f) != filters.end(); }

  void validate() const {
    if (n < kMinEnumOrder || n > kMaxEnumOrder)
      throw std::invalid_argument("enumeration supports orders " + std::to_string(kMinEnumOrder) + ".." +
                                  std::to_string(kMaxEnumOrder) + ", got " + std::to_string(n));
    for (Flag f : filters)
      if (f != Flag::d_star && f != Flag::edge && f != Flag::d_transitive && f != Flag::bck)
        throw std::invalid_argument("unsupported enumeration filter '" + std::string(flag_name(f)) + "'");
  }
};

/// (n-1)^(n-1) * (n^2-1)^((n-1)(n-2)/2): column 0 below the diagonal takes any
/// nonzero value, and each unordered pair {x,y} of distinct nonzero elements
/// takes any of the n^2 value pairs except (0,0).
inline std::uint64_t count_closed_form(std::size_t n) {
  if (n < 2) throw std::invalid_argument("count_closed_form needs n >= 2");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) r *= n - 1;
  const std::uint64_t pair_choices = n * n - 1;
  for (std::size_t i = 0; i < (n - 1) * (n - 2) / 2; ++i) r *= pair_choices;
  return r;
}

/// Image of `alg` under the relabeling x -> perm[x] (perm[0] must be 0).
inline FiniteAlgebra relabel(const FiniteAlgebra& alg, const std::vector<Element>& perm) {
  const auto n = alg.size();
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[perm[x] * n + perm[y]] = perm[alg.at(x, y)];
  return FiniteAlgebra(n, std::move(t));
}

/// Lexicographically least table over all relabelings fixing 0.
inline FiniteAlgebra canonical_form(const FiniteAlgebra& alg) {
  const auto n = alg.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  FiniteAlgebra best = alg;
  if (n <= 2) return best;
  do {
    auto cand = relabel(alg, perm);
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

namespace detail {

class DAlgebraSearch {
 public:
  explicit DAlgebraSearch(const EnumSpec& spec) : spec_(spec), n_(spec.n), table_(n_ * n_, 0), pos_(n_ * n_, -1) {
    for (Element x = 1; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (x != y) {
          pos_[x * n_ + y] = static_cast<int>(cells_.size());
          cells_.push_back({x, y});
        }
    prune_transitive_ = spec_.wants(Flag::d_transitive);
  }

  std::size_t cell_count() const noexcept { return cells_.size(); }

  /// Visits every accepted table whose first `prefix.size()` free cells equal `prefix`.
  void run(const std::vector<Element>& prefix, const std::function<void(const FiniteAlgebra&)>& emit) {
    emit_ = &emit;
    std::fill(table_.begin(), table_.end(), 0);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const auto [x, y] = cells_[k];
      table_[x * n_ + y] = prefix[k];
      if (!consistent(k)) return;
    }
    extend(prefix.size());
  }

 private:
  struct Cell {
    Element x, y;
  };

  Element& at(Element x, Element y) { return table_[x * n_ + y]; }

  bool assigned(Element x, Element y, std::size_t k) const {
    const int p = pos_[x * n_ + y];
    return p < 0 || static_cast<std::size_t>(p) <= k;
  }

  // Constraints whose cells are all assigned once cell k is set.
  bool consistent(std::size_t k) {
    const auto [x, y] = cells_[k];
    const Element v = at(x, y);
    if (y == 0 && v == 0) return false;
    if (y != 0 && v == 0 && assigned(y, x, k) && at(y, x) == 0) return false;
    if (prune_transitive_ && !transitive_around(x, y, k)) return false;
    return true;
  }

  // Every triple (p,q,r) that uses cell (x,y) in one of its three positions.
  bool transitive_around(Element x, Element y, std::size_t k) {
    auto bad = [&](Element p, Element q, Element r) {
      return assigned(p, q, k) && assigned(q, r, k) && assigned(p, r, k) && at(p, q) == 0 && at(q, r) == 0 &&
             at(p, r) != 0;
    };
    for (Element r = 0; r < n_; ++r)
      if (bad(x, y, r)) return false;
    for (Element p = 0; p < n_; ++p)
      if (bad(p, x, y)) return false;
    for (Element q = 0; q < n_; ++q)
      if (bad(x, q, y)) return false;
    return true;
  }

  void extend(std::size_t k) {
    if (k == cells_.size()) {
      accept();
      return;
    }
    const auto [x, y] = cells_[k];
    for (Element v = 0; v < n_; ++v) {
      at(x, y) = v;
      if (consistent(k)) extend(k + 1);
    }
    at(x, y) = 0;
  }

  void accept() {
    FiniteAlgebra alg(n_, table_);
    if (spec_.wants(Flag::edge) && !is_edge(alg).holds) return;
    if (spec_.wants(Flag::d_transitive) && !is_d_transitive(alg).holds) return;
    if (spec_.wants(Flag::d_star) || spec_.wants(Flag::bck)) {
      auto rep = check_axioms(alg);
      if (spec_.wants(Flag::d_star) && !rep.holds(Flag::d_star)) return;
      if (spec_.wants(Flag::bck) && !rep.holds(Flag::bck)) return;
    }
    if (spec_.iso_reduce && canonical_form(alg) != alg) return;
    (*emit_)(alg);
  }

  const EnumSpec& spec_;
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<int> pos_;
  std::vector<Cell> cells_;
  bool prune_transitive_ = false;
  const std::function<void(const FiniteAlgebra&)>* emit_ = nullptr;
};

}  // namespace detail

/// Streams accepted algebras in lexicographic table order (single-threaded).
inline void for_each_d_algebra(const EnumSpec& spec, const std::function<void(const FiniteAlgebra&)>& visit) {
  spec.validate();
  detail::DAlgebraSearch search(spec);
  search.run({}, visit);
}

/// Collects the stream. With spec.threads > 1 the values of the first two free
/// cells are split across workers and the per-branch results are concatenated in
/// branch order, which reproduces the sequential order exactly.
inline std::vector<FiniteAlgebra> enumerate_d_algebras(const EnumSpec& spec) {
  spec.validate();
  std::vector<FiniteAlgebra> out;
  if (spec.threads <= 1) {
    for_each_d_algebra(spec, [&](const FiniteAlgebra& a) { out.push_back(a); });
    return out;
  }
  // Branch on the first (up to) two free cells.
  const std::size_t depth = std::min<std::size_t>(2, detail::DAlgebraSearch(spec).cell_count());
  std::vector<std::vector<Element>> prefixes{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<Element>> next;
    for (const auto& p : prefixes)
      for (Element v = 0; v < spec.n; ++v) {
        next.push_back(p);
        next.back().push_back(v);
      }
    prefixes = std::move(next);
  }
  std::vector<std::vector<FiniteAlgebra>> parts(prefixes.size());
  {
    std::vector<std::jthread> workers;
    const unsigned nw = std::min<unsigned>(spec.threads, static_cast<unsigned>(prefixes.size()));
    for (unsigned w = 0; w < nw; ++w)
      workers.emplace_back([&, w] {
        detail::DAlgebraSearch search(spec);
        for (std::size_t i = w; i < prefixes.size(); i += nw)
          search.run(prefixes[i], [&](const FiniteAlgebra& a) { parts[i].push_back(a); });
      });
  }
  for (auto& p : parts)
    for (auto& a : p) out.push_back(std::move(a));
  return out;
}

inline std::uint64_t count_d_algebras(const EnumSpec& spec) {
  std::uint64_t count = 0;
  for_each_d_algebra(spec, [&](const FiniteAlgebra&) { ++count; });
  return count;
}

}  // namespace dtriple
