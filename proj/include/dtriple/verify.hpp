#pragma once

// Statement registry and harness.
//
// Each statement is a (hypothesis, conclusion) pair over one finite algebra
// and its normalizer. A universe is a stream of algebras; a statement holds on
// the universe when its conclusion holds on every algebra satisfying its
// hypothesis. The first failing algebra in stream order, together with the
// lexicographically least failing tuple, is kept as the counterexample.
//
// Statements tagged `erratum` are expected to fail; `informational` ones have
// no expected outcome. Only `proved` statements gate exit codes.

#include "dtriple/algebra.hpp"
#include "dtriple/classify.hpp"
#include "dtriple/enumerate.hpp"
#include "dtriple/nabla.hpp"
#include "dtriple/order.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtriple {

using Witness = std::vector<Element>;

/// Everything a statement may look at for one algebra. Derived data is built
/// on first use.
class StatementContext {
 public:
  explicit StatementContext(const FiniteAlgebra& alg) : alg_(alg), report_(check_axioms(alg)), na_(alg) {}

  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  const AxiomReport<Element>& report() const noexcept { return report_; }
  const NormalizerAlgebra& normalizer() const noexcept { return na_; }
  bool holds(Flag f) const { return report_.holds(f); }

  const Relation& order() {
    if (!order_) order_ = order_relation(na_);
    return *order_;
  }
  const PosetReport& poset() {
    if (!poset_) poset_ = check_poset(order());
    return *poset_;
  }

  /// t*t defined for every member.
  bool all_self_stars_defined() const {
    for (std::size_t i = 0; i < na_.size(); ++i)
      if (!na_.star(i, i).defined) return false;
    return true;
  }
  bool all_diameters_zero() const {
    for (std::size_t i = 0; i < na_.size(); ++i)
      if (na_.diameter(i) != 0) return false;
    return true;
  }
  bool all_members_diagonal() const {
    for (const auto& t : na_.triples())
      if (t != epsilon(t.a)) return false;
    return true;
  }

 private:
  const FiniteAlgebra& alg_;
  AxiomReport<Element> report_;
  NormalizerAlgebra na_;
  std::optional<Relation> order_;
  std::optional<PosetReport> poset_;
};

enum class StatementStatus { proved, erratum, informational };

inline std::string_view status_name(StatementStatus s) {
  switch (s) {
    case StatementStatus::proved: return "proved";
    case StatementStatus::erratum: return "erratum";
    case StatementStatus::informational: return "informational";
  }
  return "?";
}

struct Statement {
  std::string id;
  StatementStatus status;
  std::string hypothesis;  // human-readable
  std::string conclusion;  // human-readable
  std::function<bool(StatementContext&)> applies;
  // nullopt when the conclusion holds; otherwise the failing tuple (possibly empty).
  std::function<std::optional<Witness>(StatementContext&)> refute;
};

namespace detail {

inline void append(Witness& w, const FiniteTriple& t) { w.insert(w.end(), {t.a, t.b, t.c}); }

inline Witness flatten(std::initializer_list<FiniteTriple> ts) {
  Witness w;
  for (const auto& t : ts) append(w, t);
  return w;
}

inline std::optional<Witness> from_flag(const FlagResult<Element>& f) {
  if (f.holds) return std::nullopt;
  return f.witness;
}

// Translate a poset witness (point indices) into flattened triples.
inline std::optional<Witness> poset_witness(StatementContext& ctx) {
  const auto& rep = ctx.poset();
  const FlagResult<std::size_t>* bad = nullptr;
  for (const auto* f : {&rep.reflexive, &rep.antisymmetric, &rep.transitive})
    if (!f->holds) {
      bad = f;
      break;
    }
  if (!bad) return std::nullopt;
  Witness w;
  for (auto i : bad->witness) append(w, ctx.normalizer().triples()[i]);
  return w;
}

inline std::optional<Witness> induced_bck_witness(StatementContext& ctx) {
  if (auto w = poset_witness(ctx)) return w;
  auto induced = induce_bck(ctx.order(), 0);
  auto rep = check_axioms(induced);
  if (rep.holds(Flag::bck)) return std::nullopt;
  return rep[Flag::bck].witness;  // indices into the induced carrier
}

inline bool is_d(StatementContext& c) { return c.holds(Flag::d_algebra); }
inline bool is_d_trans(StatementContext& c) { return is_d(c) && c.holds(Flag::d_transitive); }
inline bool is_d_edge(StatementContext& c) { return is_d(c) && c.holds(Flag::edge); }
inline bool is_bck(StatementContext& c) { return c.holds(Flag::bck); }

// Hypothesis shared by the reflexivity statements: every member has diameter 0,
// and so does its reversal whenever the reversal is a member.
inline bool reversible_zero_diameters(StatementContext& c) {
  if (!is_d(c)) return false;
  const auto& na = c.normalizer();
  for (const auto& t : na.triples()) {
    if (na.diameter(t) != 0) return false;
    FiniteTriple rev{t.c, t.b, t.a};
    if (na.contains(rev) && na.diameter(rev) != 0) return false;
  }
  return true;
}

inline std::vector<Statement> build_registry() {
  using C = StatementContext;
  constexpr auto P = StatementStatus::proved;
  std::vector<Statement> s;

  s.push_back({"L1.3", P, "edge d-algebra", "x*0 = x for all x", [](C& c) { return is_d_edge(c); },
               [](C& c) { return from_flag(c.report()[Flag::IX]); }});

  // Fails from order 4 on (e.g. rows 0000/1001/2200/3030, witness (1,3,2));
  // it does hold once d-transitivity is added, see T1.6.
  s.push_back({"P1.4", StatementStatus::erratum, "edge d-algebra", "axiom (V) holds", [](C& c) { return is_d_edge(c); },
               [](C& c) { return from_flag(c.report()[Flag::V]); }});

  s.push_back({"T1.6", P, "d-transitive edge d-algebra", "the algebra is a BCK-algebra",
               [](C& c) { return is_d_trans(c) && c.holds(Flag::edge); },
               [](C& c) { return from_flag(c.report()[Flag::bck]); }});

  s.push_back({"R-bck-derived", P, "BCK-algebra", "(VII), (VIII), (IX), (X) hold", [](C& c) { return is_bck(c); },
               [](C& c) -> std::optional<Witness> {
                 for (Flag f : {Flag::VII, Flag::VIII, Flag::IX, Flag::X})
                   if (auto w = from_flag(c.report()[f])) return w;
                 return std::nullopt;
               }});

  s.push_back({"R-note-x0", P, "d-algebra", "x*0 = 0 implies x = 0, for each x", [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& a = c.algebra();
                 for (Element x = 0; x < a.size(); ++x)
                   if (a.at(x, 0) == 0 && x != 0) return Witness{x};
                 return std::nullopt;
               }});

  s.push_back({"P-S", P, "d-algebra (resp. d*-algebra)",
               "S = {eps(x)} is closed under star with eps(x)*eps(y) = eps(x*y) and is a d-algebra (resp. d*-algebra)",
               [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& a = c.algebra();
                 const auto& na = c.normalizer();
                 const auto n = a.size();
                 // Build S's table through star and check it is a copy of A.
                 std::vector<Element> table(n * n);
                 for (Element x = 0; x < n; ++x)
                   for (Element y = 0; y < n; ++y) {
                     auto out = na.star(epsilon(x), epsilon(y));
                     if (!out.defined || out.result != epsilon(a.at(x, y))) return Witness{x, y};
                     table[x * n + y] = out.result.a;
                   }
                 auto rep = check_axioms(FiniteAlgebra(n, std::move(table)));
                 if (!rep.holds(Flag::d_algebra)) return rep[Flag::d_algebra].witness;
                 if (c.holds(Flag::d_star) && !rep.holds(Flag::d_star)) return rep[Flag::d_star].witness;
                 return std::nullopt;
               }});

  s.push_back({"R-eps-star", P, "d-algebra",
               "eps(x) is a member, eps(x)*eps(x) = eps(0), and eps(0)*t = eps(0) for every member t",
               [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 const FiniteTriple e0{0, 0, 0};
                 for (Element x = 0; x < c.algebra().size(); ++x) {
                   if (!na.contains(epsilon(x))) return flatten({epsilon(x)});
                   auto o = na.star(epsilon(x), epsilon(x));
                   if (!o.defined || o.result != e0) return flatten({epsilon(x)});
                 }
                 for (const auto& t : na.triples()) {
                   auto o = na.star(e0, t);
                   if (!o.defined || o.result != e0) return flatten({t});
                 }
                 return std::nullopt;
               }});

  s.push_back({"R-edge-unit", P, "edge d-algebra", "t*eps(0) = t for every member t",
               [](C& c) { return is_d_edge(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (const auto& t : na.triples()) {
                   auto o = na.star(t, FiniteTriple{0, 0, 0});
                   if (!o.defined || o.result != t) return flatten({t});
                 }
                 return std::nullopt;
               }});

  s.push_back({"R-nabla-not-I", P, "d-algebra of order >= 2",
               "some member t has t*t defined and different from eps(0), so (I) fails on the normalizer",
               [](C& c) { return is_d(c) && c.algebra().size() >= 2; },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i) {
                   auto o = na.star(i, i);
                   if (o.defined && o.result != FiniteTriple{0, 0, 0}) return std::nullopt;
                 }
                 return Witness{};
               }});

  s.push_back({"T2.2", P, "BCK-algebra", "star is defined on every pair of members", [](C& c) { return is_bck(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i)
                   for (std::size_t j = 0; j < na.size(); ++j)
                     if (!na.star(i, j).defined) return flatten({na.triples()[i], na.triples()[j]});
                 return std::nullopt;
               }});

  s.push_back({"P2.3", P, "d-transitive d-algebra", "t*t is defined and equals (0, 0, c*a) for every member (a,b,c)",
               [](C& c) { return is_d_trans(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i) {
                   const auto& t = na.triples()[i];
                   auto o = na.star(i, i);
                   if (!o.defined || o.result != FiniteTriple{0, 0, c.algebra().at(t.c, t.a)}) return flatten({t});
                 }
                 return std::nullopt;
               }});

  s.push_back({"P2.3-conv-edge", P, "edge d-algebra with t*t defined for every member", "d-transitive",
               [](C& c) { return is_d_edge(c) && c.all_self_stars_defined(); },
               [](C& c) { return from_flag(c.report()[Flag::d_transitive]); }});

  s.push_back({"P2.3-conv-bck", P, "BCK-algebra with t*t defined for every member", "d-transitive",
               [](C& c) { return is_bck(c) && c.all_self_stars_defined(); },
               [](C& c) { return from_flag(c.report()[Flag::d_transitive]); }});

  s.push_back({"P2.4", P, "d-algebra", "t1*t2 = eps(0) = t2*t1 implies t1 = t2", [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 const FiniteTriple e0{0, 0, 0};
                 for (std::size_t i = 0; i < na.size(); ++i)
                   for (std::size_t j = 0; j < na.size(); ++j) {
                     if (i == j) continue;
                     auto l = na.star(i, j);
                     if (!l.defined || l.result != e0) continue;
                     auto r = na.star(j, i);
                     if (r.defined && r.result == e0) return flatten({na.triples()[i], na.triples()[j]});
                   }
                 return std::nullopt;
               }});

  s.push_back({"T2.5", P, "edge d-algebra", "when (a,b,c)*(d,e,f) is defined it equals eps(0) iff c*d = 0",
               [](C& c) { return is_d_edge(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 const FiniteTriple e0{0, 0, 0};
                 for (std::size_t i = 0; i < na.size(); ++i)
                   for (std::size_t j = 0; j < na.size(); ++j) {
                     auto o = na.star(i, j);
                     if (!o.defined) continue;
                     const auto& l = na.triples()[i];
                     const auto& r = na.triples()[j];
                     if ((o.result == e0) != (c.algebra().at(l.c, r.a) == 0)) return flatten({l, r});
                   }
                 return std::nullopt;
               }});

  s.push_back({"R-eps0-least", P, "axiom (II)", "eps(0) < t for every member t != eps(0)",
               [](C& c) { return c.holds(Flag::II); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t j = 1; j < na.size(); ++j)
                   if (!na.strict_less(0, j)) return flatten({na.triples()[j]});
                 return std::nullopt;
               }});

  s.push_back({"R-diam-eps", P, "axiom (I)", "d(eps(x)) = 0", [](C& c) { return c.holds(Flag::I); },
               [](C& c) -> std::optional<Witness> {
                 for (Element x = 0; x < c.algebra().size(); ++x)
                   if (c.normalizer().diameter(epsilon(x)) != 0) return flatten({epsilon(x)});
                 return std::nullopt;
               }});

  s.push_back({"R-diam-xyx", P, "d-algebra", "d(x,y,x) = 0 for members (x,y,x)", [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (const auto& t : na.triples())
                   if (t.a == t.c && na.diameter(t) != 0) return flatten({t});
                 return std::nullopt;
               }});

  s.push_back({"R-diam-xy0", P, "d-algebra", "d(x,y,0) = 0 for members (x,y,0)", [](C& c) { return is_d(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (const auto& t : na.triples())
                   if (t.c == 0 && na.diameter(t) != 0) return flatten({t});
                 return std::nullopt;
               }});

  s.push_back({"R-diam-bck", StatementStatus::erratum, "BCK-algebra", "d(0,y,z) = 0 for members (0,y,z)",
               [](C& c) { return is_bck(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (const auto& t : na.triples())
                   if (t.a == 0 && na.diameter(t) != 0) return flatten({t});
                 return std::nullopt;
               }});

  s.push_back({"P2.6", P, "d-transitive d-algebra", "d(a,b,c) = 0 iff (a,b,c) = eps(a)",
               [](C& c) { return is_d_trans(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (const auto& t : na.triples())
                   if ((na.diameter(t) == 0) != (t == epsilon(t.a))) return flatten({t});
                 return std::nullopt;
               }});

  s.push_back({"P2.7", StatementStatus::informational,
               "d-algebra where d(a,b,c) = 0 and d(c,b,a) = 0 (when (c,b,a) is a member) for every member",
               "t*t = eps(0) for every member t", [](C& c) { return reversible_zero_diameters(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i) {
                   auto o = na.star(i, i);
                   if (!o.defined || o.result != FiniteTriple{0, 0, 0}) return flatten({na.triples()[i]});
                 }
                 return std::nullopt;
               }});

  s.push_back({"P2.7-strict", StatementStatus::erratum,
               "d-algebra where d(a,b,c) = 0 and d(c,b,a) = 0 (when (c,b,a) is a member) for every member",
               "the strict relation < is reflexive", [](C& c) { return reversible_zero_diameters(c); },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i)
                   if (!na.strict_less(i, i)) return flatten({na.triples()[i]});
                 return std::nullopt;
               }});

  s.push_back({"R-lt-irreflexive", P, "any algebra", "t < t fails for every member t", [](C&) { return true; },
               [](C& c) -> std::optional<Witness> {
                 const auto& na = c.normalizer();
                 for (std::size_t i = 0; i < na.size(); ++i)
                   if (na.strict_less(i, i)) return flatten({na.triples()[i]});
                 return std::nullopt;
               }});

  s.push_back({"P2.8", P, "d-transitive d-algebra", "the strict relation < is transitive",
               [](C& c) { return is_d_trans(c); },
               [](C& c) -> std::optional<Witness> {
                 auto w = check_transitive(strict_relation(c.normalizer()));
                 if (w.holds) return std::nullopt;
                 Witness out;
                 for (auto i : w.witness) append(out, c.normalizer().triples()[i]);
                 return out;
               }});

  s.push_back({"T2.9", P, "d-transitive d-algebra with d(t) = 0 for every member",
               "the reflexive closure of < is a partial order",
               [](C& c) { return is_d_trans(c) && c.all_diameters_zero(); },
               [](C& c) { return poset_witness(c); }});

  s.push_back({"C2.10", P, "d-transitive d-algebra whose members are all of the form eps(a)",
               "the reflexive closure of < is a partial order",
               [](C& c) { return is_d_trans(c) && c.all_members_diagonal(); },
               [](C& c) { return poset_witness(c); }});

  s.push_back({"C2.11", P, "d-transitive d-algebra with d(t) = 0 for every member",
               "the poset induces a BCK-algebra", [](C& c) { return is_d_trans(c) && c.all_diameters_zero(); },
               [](C& c) { return induced_bck_witness(c); }});

  s.push_back({"C2.12", P, "d-transitive d-algebra whose members are all of the form eps(a)",
               "the poset induces a BCK-algebra", [](C& c) { return is_d_trans(c) && c.all_members_diagonal(); },
               [](C& c) { return induced_bck_witness(c); }});

  s.push_back({"R-closing-1.7", P, "d-transitive d-algebra",
               "the reflexive closure of < is a partial order and induces a BCK-algebra",
               [](C& c) { return is_d_trans(c); }, [](C& c) { return induced_bck_witness(c); }});

  std::sort(s.begin(), s.end(), [](const Statement& a, const Statement& b) { return a.id < b.id; });
  return s;
}

}  // namespace detail

/// All registered statements, sorted by id.
inline const std::vector<Statement>& statement_registry() {
  static const std::vector<Statement> registry = detail::build_registry();
  return registry;
}

inline const Statement& find_statement(std::string_view id) {
  for (const auto& s : statement_registry())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown statement id '" + std::string(id) + "'");
}

/// A stream of algebras with a stable description.
class Universe {
 public:
  static Universe single(FiniteAlgebra alg, std::string name) {
    Universe u;
    u.description_ = std::move(name);
    u.algebras_.push_back(std::move(alg));
    return u;
  }
  static Universe list(std::vector<FiniteAlgebra> algs, std::string name) {
    Universe u;
    u.description_ = std::move(name);
    u.algebras_ = std::move(algs);
    return u;
  }
  static Universe enumerated(const EnumSpec& spec) {
    Universe u;
    u.description_ = "d-algebras of order " + std::to_string(spec.n);
    for (Flag f : spec.filters) u.description_ += " +" + std::string(flag_name(f));
    if (spec.iso_reduce) u.description_ += " up to isomorphism";
    u.spec_ = spec;
    return u;
  }

  const std::string& description() const noexcept { return description_; }

  void for_each(const std::function<void(const FiniteAlgebra&)>& fn) const {
    if (spec_) {
      for_each_d_algebra(*spec_, fn);
    } else {
      for (const auto& a : algebras_) fn(a);
    }
  }

 private:
  std::string description_;
  std::vector<FiniteAlgebra> algebras_;
  std::optional<EnumSpec> spec_;
};

struct Counterexample {
  FiniteAlgebra algebra;
  Witness witness;
};

struct Verdict {
  std::string id;
  StatementStatus status = StatementStatus::proved;
  std::string universe;
  bool holds = true;
  std::optional<Counterexample> counterexample;  // first failing algebra in stream order
  std::uint64_t universe_size = 0;               // algebras streamed
  std::uint64_t checked_count = 0;               // algebras satisfying the hypothesis
  std::uint64_t counterexample_count = 0;        // algebras where the conclusion failed
};

/// Verifies the listed statements (all when empty) in one pass over the universe.
inline std::vector<Verdict> verify_statements(const std::vector<std::string>& ids, const Universe& universe) {
  std::vector<const Statement*> stmts;
  if (ids.empty()) {
    for (const auto& s : statement_registry()) stmts.push_back(&s);
  } else {
    for (const auto& id : ids) stmts.push_back(&find_statement(id));
  }
  std::vector<Verdict> out(stmts.size());
  for (std::size_t k = 0; k < stmts.size(); ++k) {
    out[k].id = stmts[k]->id;
    out[k].status = stmts[k]->status;
    out[k].universe = universe.description();
  }
  universe.for_each([&](const FiniteAlgebra& alg) {
    StatementContext ctx(alg);
    for (std::size_t k = 0; k < stmts.size(); ++k) {
      auto& v = out[k];
      ++v.universe_size;
      if (!stmts[k]->applies(ctx)) continue;
      ++v.checked_count;
      if (auto w = stmts[k]->refute(ctx)) {
        ++v.counterexample_count;
        if (v.holds) {
          v.holds = false;
          v.counterexample = Counterexample{alg, std::move(*w)};
        }
      }
    }
  });
  return out;
}

inline Verdict verify_statement(const std::string& id, const Universe& universe) {
  return verify_statements({id}, universe).front();
}

inline std::vector<Verdict> verify_all(const Universe& universe) { return verify_statements({}, universe); }

/// True when no proved statement failed.
inline bool proved_statements_hold(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status != StatementStatus::proved || v.holds; });
}

}  // namespace dtriple
