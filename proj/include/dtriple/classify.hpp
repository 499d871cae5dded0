#pragma once

// Axiom and class predicates decided by exhaustive quantification.
//
//   (I)    x*x = 0                 (VI)   (x*(x*y))*y = 0
//   (II)   0*x = 0                 (VII)  (x*y)*(z*y) <= x*z
//   (III)  x*y = 0 = y*x => x = y  (VIII) x*(x*y) <= y
//   (IV)   (x*y)*x = 0             (IX)   x*0 = x
//   (V)    ((x*y)*(x*z))*(z*y) = 0 (X)    x*y <= x
//
// Quantifiers run over elements() in order, innermost variable fastest, so the
// first failing tuple is the lexicographically least witness.

#include "dtriple/algebra.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace dtriple {

enum class Flag : std::size_t {
  I, II, III, IV, V, VI, VII, VIII, IX, X,
  d_algebra, d_star, edge, d_transitive, bck,
};

inline constexpr std::size_t kFlagCount = 15;

inline constexpr std::array<std::string_view, kFlagCount> kFlagNames = {
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X",
    "d_algebra", "d_star", "edge", "d_transitive", "bck"};

inline constexpr std::string_view flag_name(Flag f) { return kFlagNames[static_cast<std::size_t>(f)]; }

inline std::optional<Flag> parse_flag(std::string_view name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

template <class V>
struct FlagResult {
  bool holds = true;
  std::vector<V> witness;  // empty iff holds
};

template <class V>
struct AxiomReport {
  std::array<FlagResult<V>, kFlagCount> flags;
  // Set for grid-sampled infinite carriers: a passing flag only means "no
  // counterexample in the grid".
  bool refutation_only = false;

  const FlagResult<V>& operator[](Flag f) const { return flags[static_cast<std::size_t>(f)]; }
  FlagResult<V>& operator[](Flag f) { return flags[static_cast<std::size_t>(f)]; }
  bool holds(Flag f) const { return (*this)[f].holds; }
};

namespace detail {

template <class V>
FlagResult<V> from_witness(std::optional<std::vector<V>> w) {
  if (w) return {false, std::move(*w)};
  return {true, {}};
}

template <class Range, class Pred>
auto first_failure1(const Range& xs, Pred&& ok) -> std::optional<std::vector<std::decay_t<decltype(*xs.begin())>>> {
  for (const auto& x : xs)
    if (!ok(x)) return std::vector{x};
  return std::nullopt;
}

template <class Range, class Pred>
auto first_failure2(const Range& xs, Pred&& ok) -> std::optional<std::vector<std::decay_t<decltype(*xs.begin())>>> {
  for (const auto& x : xs)
    for (const auto& y : xs)
      if (!ok(x, y)) return std::vector{x, y};
  return std::nullopt;
}

template <class Range, class Pred>
auto first_failure3(const Range& xs, Pred&& ok) -> std::optional<std::vector<std::decay_t<decltype(*xs.begin())>>> {
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& z : xs)
        if (!ok(x, y, z)) return std::vector{x, y, z};
  return std::nullopt;
}

// Class flag = conjunction of constituents; carries the first failing
// constituent's witness.
template <class V>
FlagResult<V> conjunction(std::initializer_list<const FlagResult<V>*> parts) {
  for (const auto* p : parts)
    if (!p->holds) return *p;
  return {true, {}};
}

}  // namespace detail

/// Edge check: x*X = {x, 0} for every x. Witness is [x, v] for the first
/// value v outside {x, 0}, or [x] when the row never takes the value x.
template <Magma A>
FlagResult<typename A::value_type> is_edge(const A& alg) {
  using V = typename A::value_type;
  const V zero = alg.zero();
  for (const auto& x : alg.elements()) {
    bool hits_x = false;
    for (const auto& a : alg.elements()) {
      V v = alg.op(x, a);
      if (v == x) {
        hits_x = true;
      } else if (v != zero) {
        return {false, {x, v}};
      }
    }
    // The row takes 0 as well: x*X = {x, 0} needs both values (x = 0 collapses them).
    bool hits_zero = x == zero;
    for (const auto& a : alg.elements()) hits_zero = hits_zero || alg.op(x, a) == zero;
    if (!hits_x || !hits_zero) return {false, {x}};
  }
  return {true, {}};
}

/// x*z = 0 and z*y = 0 imply x*y = 0. Witness is (x, z, y).
template <Magma A>
FlagResult<typename A::value_type> is_d_transitive(const A& alg) {
  const auto zero = alg.zero();
  return detail::from_witness(detail::first_failure3(alg.elements(), [&](const auto& x, const auto& z, const auto& y) {
    return !(alg.op(x, z) == zero && alg.op(z, y) == zero) || alg.op(x, y) == zero;
  }));
}

template <Magma A>
AxiomReport<typename A::value_type> check_axioms(const A& alg) {
  using V = typename A::value_type;
  const V zero = alg.zero();
  const auto& xs = alg.elements();
  auto op = [&](const V& x, const V& y) { return alg.op(x, y); };
  auto is0 = [&](const V& v) { return v == zero; };

  AxiomReport<V> r;
  using detail::first_failure1, detail::first_failure2, detail::first_failure3, detail::from_witness;
  r[Flag::I] = from_witness(first_failure1(xs, [&](const V& x) { return is0(op(x, x)); }));
  r[Flag::II] = from_witness(first_failure1(xs, [&](const V& x) { return is0(op(zero, x)); }));
  r[Flag::III] = from_witness(first_failure2(xs, [&](const V& x, const V& y) {
    return !(is0(op(x, y)) && is0(op(y, x))) || x == y;
  }));
  r[Flag::IV] = from_witness(first_failure2(xs, [&](const V& x, const V& y) { return is0(op(op(x, y), x)); }));
  r[Flag::V] = from_witness(first_failure3(xs, [&](const V& x, const V& y, const V& z) {
    return is0(op(op(op(x, y), op(x, z)), op(z, y)));
  }));
  r[Flag::VI] = from_witness(first_failure2(xs, [&](const V& x, const V& y) { return is0(op(op(x, op(x, y)), y)); }));
  r[Flag::VII] = from_witness(first_failure3(xs, [&](const V& x, const V& y, const V& z) {
    return is0(op(op(op(x, y), op(z, y)), op(x, z)));
  }));
  r[Flag::VIII] = from_witness(first_failure2(xs, [&](const V& x, const V& y) { return is0(op(op(x, op(x, y)), y)); }));
  r[Flag::IX] = from_witness(first_failure1(xs, [&](const V& x) { return op(x, zero) == x; }));
  r[Flag::X] = from_witness(first_failure2(xs, [&](const V& x, const V& y) { return is0(op(op(x, y), x)); }));

  r[Flag::d_algebra] = detail::conjunction<V>({&r[Flag::I], &r[Flag::II], &r[Flag::III]});
  r[Flag::d_star] = detail::conjunction<V>({&r[Flag::d_algebra], &r[Flag::IV]});
  r[Flag::edge] = is_edge(alg);
  r[Flag::d_transitive] = is_d_transitive(alg);
  r[Flag::bck] = detail::conjunction<V>({&r[Flag::d_algebra], &r[Flag::V], &r[Flag::VI]});
  return r;
}

/// Same flags for x*y = x(x-y), quantified over the grid only.
inline AxiomReport<Rational> check_formula_axioms(const SampleGrid& grid) {
  auto r = check_axioms(GridAlgebra(grid));
  r.refutation_only = true;
  return r;
}

}  // namespace dtriple
