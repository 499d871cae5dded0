#pragma once

// Carriers with a binary operation and designated constant 0.
//
// Two concrete carriers exist: FiniteAlgebra, a Cayley table over
// {0, ..., n-1} with constant index 0, and GridAlgebra, the rational rule
// x*y = x(x-y) restricted to a finite sample of quantifier values. Both model
// the `Magma` concept below, which is all the classification code needs.

#include "dtriple/rational.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtriple {

/// Index of a finite carrier element.
using Element = std::uint32_t;

/// A binary operation with a designated constant 0.
template <class A>
concept ZeroOperation = requires(const A& a, const typename A::value_type& x) {
  typename A::value_type;
  { a.zero() } -> std::convertible_to<typename A::value_type>;
  { a.op(x, x) } -> std::convertible_to<typename A::value_type>;
};

/// ZeroOperation with a finite quantifier domain.
template <class A>
concept Magma = ZeroOperation<A> && requires(const A& a) {
  { a.elements() };
};

class FiniteAlgebra {
 public:
  using value_type = Element;

  /// Builds the algebra from a row-major n*n table. Entries must lie in [0, n).
  FiniteAlgebra(std::size_t n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
    if (n_ == 0) throw std::invalid_argument("carrier must be non-empty");
    if (table_.size() != n_ * n_) throw std::invalid_argument("table size does not match n*n");
    for (Element v : table_)
      if (v >= n_) throw std::out_of_range("table entry " + std::to_string(v) + " outside carrier");
    elements_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) elements_[i] = static_cast<Element>(i);
  }

  static FiniteAlgebra from_rows(const std::vector<std::vector<Element>>& rows) {
    std::vector<Element> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw std::invalid_argument("table is not square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return FiniteAlgebra(rows.size(), std::move(flat));
  }

  std::size_t size() const noexcept { return n_; }
  Element zero() const noexcept { return 0; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> row(Element x) const { return std::span(table_).subspan(index(x, 0), n_); }

  /// x*y. Throws std::out_of_range for indices outside the carrier.
  Element op(Element x, Element y) const {
    if (x >= n_ || y >= n_)
      throw std::out_of_range("element index outside carrier of size " + std::to_string(n_));
    return table_[x * n_ + y];
  }

  /// Unchecked x*y for hot loops.
  Element at(Element x, Element y) const noexcept { return table_[x * n_ + y]; }

  bool leq(Element x, Element y) const { return op(x, y) == 0; }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }
  /// Lexicographic order on (n, row-major table).
  friend auto operator<=>(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.table_.begin(), a.table_.end(), b.table_.begin(),
                                                  b.table_.end());
  }

 private:
  std::size_t index(Element x, Element y) const {
    if (x >= n_ || y >= n_) throw std::out_of_range("element index outside carrier");
    return x * n_ + y;
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> elements_;
};

/// The rule x*y = x(x-y) over the rationals. Exact.
struct FormulaAlgebra {
  using value_type = Rational;
  static Rational zero() { return Rational(0); }
  static Rational op(const Rational& x, const Rational& y) { return Rational(x * (x - y)); }
  static bool leq(const Rational& x, const Rational& y) { return op(x, y) == 0; }
};

/// Finite list of distinct rationals containing 0, used as quantifier domain.
class SampleGrid {
 public:
  explicit SampleGrid(std::vector<Rational> values) : values_(std::move(values)) {
    for (auto& v : values_) v.canonicalize();
    bool has_zero = false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      has_zero = has_zero || values_[i] == 0;
      for (std::size_t j = 0; j < i; ++j)
        if (values_[i] == values_[j]) throw std::invalid_argument("duplicate grid value " + to_string(values_[i]));
    }
    if (!has_zero) throw std::invalid_argument("sample grid must contain 0");
  }

  /// Parses a comma-separated list such as "0,1,-2,5/2".
  static SampleGrid parse(std::string_view text) {
    std::vector<Rational> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      vals.push_back(parse_rational(text.substr(start, end - start)));
      start = end + 1;
    }
    return SampleGrid(std::move(vals));
  }

  std::span<const Rational> values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// FormulaAlgebra with quantifiers ranging over a SampleGrid. Products may
/// leave the grid; they are still evaluated exactly.
class GridAlgebra {
 public:
  using value_type = Rational;
  explicit GridAlgebra(SampleGrid grid) : grid_(std::move(grid)) {}
  std::span<const Rational> elements() const noexcept { return grid_.values(); }
  Rational zero() const { return FormulaAlgebra::zero(); }
  Rational op(const Rational& x, const Rational& y) const { return FormulaAlgebra::op(x, y); }
  const SampleGrid& grid() const noexcept { return grid_; }

 private:
  SampleGrid grid_;
};

/// x <= y iff x*y = 0.
template <ZeroOperation A>
bool leq(const A& alg, const typename A::value_type& x, const typename A::value_type& y) {
  return alg.op(x, y) == alg.zero();
}

/// {0, ..., n-1} with x*y = 0 if x <= y and 1 otherwise.
inline FiniteAlgebra truncated_order_algebra(std::size_t n) {
  if (n < 2) throw std::invalid_argument("truncated order algebra needs n >= 2");
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = x <= y ? 0 : 1;
  return FiniteAlgebra(n, std::move(t));
}

/// The 5-element d-algebra used throughout the worked examples.
inline FiniteAlgebra table1_algebra() {
  return FiniteAlgebra::from_rows({{0, 0, 0, 0, 0},
                                   {1, 0, 2, 0, 4},
                                   {2, 2, 0, 3, 0},
                                   {3, 3, 3, 0, 3},
                                   {4, 4, 4, 1, 0}});
}

/// {0, 1} with 1*0 = 1 and every other product 0.
inline FiniteAlgebra bck_chain2() { return FiniteAlgebra::from_rows({{0, 0}, {1, 0}}); }

}  // namespace dtriple
