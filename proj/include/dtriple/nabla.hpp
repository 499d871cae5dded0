#pragma once

// The normalizer triple construction over a base algebra (A; *, 0):
//
//   A^nabla = { (a,b,c) : a*b = 0 = b*c }
//   (a,b,c) star (d,e,f) = (a*f, b*e, c*d), defined only when the result is
//                          again in A^nabla
//   epsilon(x) = (x,x,x),  constant epsilon(0)
//   diameter d(a,b,c) = c*a
//   t1 < t2  iff  t1 != t2 and t1 star t2 = epsilon(0)

#include "dtriple/algebra.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtriple {

template <class V>
struct Triple {
  V a{}, b{}, c{};
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple& l, const Triple& r) {
    if (auto o = cmp(l.a, r.a); o != 0) return o;
    if (auto o = cmp(l.b, r.b); o != 0) return o;
    return cmp(l.c, r.c);
  }

 private:
  static std::strong_ordering cmp(const V& x, const V& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

using FiniteTriple = Triple<Element>;
using RationalTriple = Triple<Rational>;

template <class V>
Triple<V> epsilon(const V& x) {
  return {x, x, x};
}

/// Result of a star product. When undefined, `failed_equation` is 1 for
/// (a*f)*(b*e) = 0 and 2 for (b*e)*(c*d) = 0, and `value` is the nonzero left side.
template <class V>
struct StarOutcome {
  bool defined = false;
  Triple<V> result{};  // componentwise (a*f, b*e, c*d), filled in either case
  int failed_equation = 0;
  V value{};

  friend bool operator==(const StarOutcome&, const StarOutcome&) = default;
};

template <ZeroOperation A>
bool in_nabla(const A& alg, const Triple<typename A::value_type>& t) {
  return alg.op(t.a, t.b) == alg.zero() && alg.op(t.b, t.c) == alg.zero();
}

/// Star product evaluated directly on any carrier. Membership of the operands
/// is not checked here.
template <ZeroOperation A>
StarOutcome<typename A::value_type> star_product(const A& alg, const Triple<typename A::value_type>& l,
                                                 const Triple<typename A::value_type>& r) {
  using V = typename A::value_type;
  StarOutcome<V> out;
  out.result = {alg.op(l.a, r.c), alg.op(l.b, r.b), alg.op(l.c, r.a)};
  const V zero = alg.zero();
  if (V v = alg.op(out.result.a, out.result.b); v != zero) {
    out.failed_equation = 1;
    out.value = v;
  } else if (V w = alg.op(out.result.b, out.result.c); w != zero) {
    out.failed_equation = 2;
    out.value = w;
  } else {
    out.defined = true;
  }
  return out;
}

template <ZeroOperation A>
typename A::value_type diameter_of(const A& alg, const Triple<typename A::value_type>& t) {
  return alg.op(t.c, t.a);
}

/// A^nabla of a finite algebra with its partial operation.
class NormalizerAlgebra {
 public:
  explicit NormalizerAlgebra(FiniteAlgebra base) : base_(std::move(base)) {
    const auto n = base_.size();
    index_.assign(n * n * n, -1);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (base_.at(a, b) != 0) continue;
        for (Element c = 0; c < n; ++c) {
          if (base_.at(b, c) != 0) continue;
          index_[key(a, b, c)] = static_cast<std::int32_t>(triples_.size());
          triples_.push_back({a, b, c});
        }
      }
  }

  const FiniteAlgebra& base() const noexcept { return base_; }
  /// Members in lexicographic order.
  const std::vector<FiniteTriple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }

  bool contains(const FiniteTriple& t) const { return lookup(t).has_value(); }

  std::optional<std::size_t> lookup(const FiniteTriple& t) const {
    const auto n = base_.size();
    if (t.a >= n || t.b >= n || t.c >= n) return std::nullopt;
    auto i = index_[key(t.a, t.b, t.c)];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }

  std::size_t index_of(const FiniteTriple& t) const {
    auto i = lookup(t);
    if (!i) throw std::invalid_argument("triple " + describe(t) + " is not in the normalizer");
    return *i;
  }

  StarOutcome<Element> star(const FiniteTriple& l, const FiniteTriple& r) const {
    index_of(l);
    index_of(r);
    return star_product(base_, l, r);
  }
  StarOutcome<Element> star(std::size_t i, std::size_t j) const { return star_product(base_, triples_[i], triples_[j]); }

  Element diameter(const FiniteTriple& t) const {
    index_of(t);
    return diameter_of(base_, t);
  }
  Element diameter(std::size_t i) const { return diameter_of(base_, triples_[i]); }

  bool strict_less(const FiniteTriple& l, const FiniteTriple& r) const {
    index_of(l);
    index_of(r);
    return strict_less(*lookup(l), *lookup(r));
  }
  bool strict_less(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    auto s = star(i, j);
    return s.defined && s.result == FiniteTriple{0, 0, 0};
  }

  static std::string describe(const FiniteTriple& t) {
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
  }

 private:
  std::size_t key(Element a, Element b, Element c) const {
    const auto n = base_.size();
    return (static_cast<std::size_t>(a) * n + b) * n + c;
  }

  FiniteAlgebra base_;
  std::vector<FiniteTriple> triples_;
  std::vector<std::int32_t> index_;
};

inline NormalizerAlgebra build_normalizer(const FiniteAlgebra& alg) { return NormalizerAlgebra(alg); }

/// Membership in the rational normalizer by its defining equations:
/// a(a-b) = 0 and b(b-c) = 0.
inline bool rational_nabla_membership(const Rational& a, const Rational& b, const Rational& c) {
  return in_nabla(FormulaAlgebra{}, RationalTriple{a, b, c});
}

/// Membership in the closed-form family { (x,x,x), (0,x,x), (0,0,x) }.
inline bool rational_nabla_closed_form(const Rational& a, const Rational& b, const Rational& c) {
  const bool eps = a == b && b == c;
  const bool zxx = a == 0 && b == c;
  const bool zzx = a == 0 && b == 0;
  return eps || zxx || zzx;
}

}  // namespace dtriple
