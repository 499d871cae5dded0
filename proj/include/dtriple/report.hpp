#pragma once

// JSON and plain-text renderings. Key order is fixed and nothing depends on
// time or environment, so identical inputs give byte-identical output.

#include "dtriple/classify.hpp"
#include "dtriple/nabla.hpp"
#include "dtriple/order.hpp"
#include "dtriple/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace dtriple {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json value_json(Element v) { return v; }
inline Json value_json(const Rational& v) { return to_string(v); }

template <class V>
Json witness_json(const std::vector<V>& w, bool holds) {
  if (holds) return nullptr;
  Json arr = Json::array();
  for (const auto& v : w) arr.push_back(value_json(v));
  return arr;
}

template <class V>
Json flag_json(const FlagResult<V>& f) {
  Json j;
  j["holds"] = f.holds;
  j["witness"] = witness_json(f.witness, f.holds);
  return j;
}

template <class V>
std::string tuple_text(const std::vector<V>& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_same_v<V, Rational>) {
      out << to_string(w[i]);
    } else {
      out << w[i];
    }
  }
  out << ')';
  return out.str();
}

inline Json triple_json(const FiniteTriple& t) { return Json::array({t.a, t.b, t.c}); }

}  // namespace detail

/// Flag name -> {holds, witness}.
template <class V>
Json to_json(const AxiomReport<V>& r) {
  Json j = Json::object();
  for (std::size_t i = 0; i < kFlagCount; ++i) j[std::string(kFlagNames[i])] = detail::flag_json(r.flags[i]);
  return j;
}

inline Json formula_report_json(const SampleGrid& grid, const AxiomReport<Rational>& r) {
  Json j;
  j["refutation_only"] = true;
  Json g = Json::array();
  for (const auto& v : grid.values()) g.push_back(to_string(v));
  j["grid"] = g;
  j["flags"] = to_json(r);
  return j;
}

template <class V>
std::string to_text(const AxiomReport<V>& r) {
  std::ostringstream out;
  if (r.refutation_only) out << "# refutation-only: passing flags mean no counterexample in the grid\n";
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const auto& f = r.flags[i];
    out << kFlagNames[i] << ": " << (f.holds ? "holds" : "fails");
    if (!f.holds) out << " witness " << detail::tuple_text(f.witness);
    out << '\n';
  }
  return out.str();
}

inline Json star_entry_json(const StarOutcome<Element>& o) {
  if (o.defined) return detail::triple_json(o.result);
  Json j;
  j["equation"] = o.failed_equation;
  j["value"] = o.value;
  return j;
}

inline Json to_json(const NormalizerAlgebra& na) {
  Json j;
  j["count"] = na.size();
  Json members = Json::array();
  for (const auto& t : na.triples()) members.push_back(detail::triple_json(t));
  j["members"] = members;
  Json star = Json::array();
  for (std::size_t i = 0; i < na.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < na.size(); ++k) row.push_back(star_entry_json(na.star(i, k)));
    star.push_back(row);
  }
  j["star"] = star;
  Json diam = Json::array();
  for (std::size_t i = 0; i < na.size(); ++i) diam.push_back(na.diameter(i));
  j["diameters"] = diam;
  return j;
}

/// Members are numbered in lexicographic order; star entries print the index
/// of the result, or `-` when undefined.
inline std::string to_text(const NormalizerAlgebra& na) {
  std::ostringstream out;
  out << "members: " << na.size() << '\n';
  for (std::size_t i = 0; i < na.size(); ++i)
    out << "  [" << i << "] " << NormalizerAlgebra::describe(na.triples()[i]) << "  d=" << na.diameter(i) << '\n';
  out << "star:\n";
  for (std::size_t i = 0; i < na.size(); ++i) {
    out << "  [" << i << "]";
    for (std::size_t k = 0; k < na.size(); ++k) {
      auto o = na.star(i, k);
      out << ' ';
      if (o.defined) {
        out << *na.lookup(o.result);
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const PosetReport& p) {
  Json j;
  j["reflexive"] = detail::flag_json(p.reflexive);
  j["antisymmetric"] = detail::flag_json(p.antisymmetric);
  j["transitive"] = detail::flag_json(p.transitive);
  j["is_poset"] = p.is_poset();
  return j;
}

inline std::string matrix_row(const Relation& rel, std::size_t i) {
  std::string s;
  for (std::size_t k = 0; k < rel.size(); ++k) s += rel.holds(i, k) ? '1' : '0';
  return s;
}

inline Json order_json(const Relation& rel) {
  Json j;
  Json pts = Json::array();
  for (std::size_t i = 0; i < rel.size(); ++i) pts.push_back(rel.label(i));
  j["points"] = pts;
  Json m = Json::array();
  for (std::size_t i = 0; i < rel.size(); ++i) m.push_back(matrix_row(rel, i));
  j["matrix"] = m;
  auto rep = check_poset(rel);
  j["poset"] = to_json(rep);
  if (rep.is_poset()) {
    Json edges = Json::array();
    for (auto [u, v] : hasse_cover(rel)) edges.push_back(Json::array({u, v}));
    j["hasse"] = edges;
  } else {
    j["hasse"] = nullptr;
  }
  return j;
}

inline std::string order_text(const Relation& rel) {
  std::ostringstream out;
  out << "points: " << rel.size() << '\n';
  for (std::size_t i = 0; i < rel.size(); ++i) out << "  [" << i << "] " << rel.label(i) << "  " << matrix_row(rel, i) << '\n';
  auto rep = check_poset(rel);
  auto flag = [&](const char* name, const FlagResult<std::size_t>& f) {
    out << name << ": " << (f.holds ? "holds" : "fails");
    if (!f.holds) out << " witness " << detail::tuple_text(f.witness);
    out << '\n';
  };
  flag("reflexive", rep.reflexive);
  flag("antisymmetric", rep.antisymmetric);
  flag("transitive", rep.transitive);
  out << "poset: " << (rep.is_poset() ? "yes" : "no") << '\n';
  if (rep.is_poset()) {
    out << "hasse:";
    for (auto [u, v] : hasse_cover(rel)) out << ' ' << u << "->" << v;
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["id"] = v.id;
  j["status"] = status_name(v.status);
  j["universe"] = v.universe;
  j["holds"] = v.holds;
  j["universe_size"] = v.universe_size;
  j["checked_count"] = v.checked_count;
  j["counterexample_count"] = v.counterexample_count;
  if (v.counterexample) {
    Json c;
    const auto& a = v.counterexample->algebra;
    Json rows = Json::array();
    for (Element x = 0; x < a.size(); ++x) {
      auto r = a.row(x);
      rows.push_back(Json(std::vector<Element>(r.begin(), r.end())));
    }
    c["table"] = rows;
    c["witness"] = v.counterexample->witness;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline Json to_json(const std::vector<Verdict>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

inline std::string to_text(const Verdict& v) {
  std::ostringstream out;
  out << v.id << " [" << status_name(v.status) << "] " << (v.holds ? "holds" : "FAILS") << " on " << v.universe
      << " (checked " << v.checked_count << "/" << v.universe_size << ", counterexamples " << v.counterexample_count
      << ")\n";
  if (v.counterexample) {
    const auto& a = v.counterexample->algebra;
    out << "  witness " << detail::tuple_text(v.counterexample->witness) << " in table";
    for (Element x = 0; x < a.size(); ++x) out << (x ? " / " : " ") << detail::tuple_text(std::vector<Element>(a.row(x).begin(), a.row(x).end()));
    out << '\n';
  }
  return out.str();
}

}  // namespace dtriple
