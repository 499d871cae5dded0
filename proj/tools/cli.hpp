#pragma once

// Command-line front end. `run` is separate from main() so tests can drive it
// with in-memory streams.
//
// Exit codes: 0 success, 1 failed proved statement / failed --assert /
// non-poset input to `induce`, 2 usage or parse error.

#include "dtriple/dtriple.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace dtriple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FiniteAlgebra load_table(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return parse_table(in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return parse_table(file);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

inline std::vector<Flag> parse_flags(const std::vector<std::string>& names) {
  std::vector<Flag> out;
  for (const auto& n : names) {
    auto f = parse_flag(n);
    if (!f) throw UsageError("unknown flag '" + n + "'");
    out.push_back(*f);
  }
  return out;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite d-algebras, their normalizer triple construction, and a statement harness", "dtriple"};
  app.require_subcommand(1);

  bool json = false;

  // check
  auto* check = app.add_subcommand("check", "Classify a table (or the rational formula algebra on a grid)");
  std::string check_path;
  std::string grid_text;
  std::vector<std::string> asserts;
  check->add_option("table", check_path, ".tbl file, or - for stdin");
  check->add_option("--formula-grid", grid_text, "check x*y = x(x-y) over a comma-separated rational grid");
  check->add_option("--assert", asserts, "exit 1 unless this flag holds (repeatable)");
  check->add_flag("--json", json, "JSON output");

  // nabla
  auto* nabla = app.add_subcommand("nabla", "Normalizer members, star table and diameters");
  std::string nabla_path;
  nabla->add_option("table", nabla_path, ".tbl file, or - for stdin")->required();
  nabla->add_flag("--json", json, "JSON output");

  // order
  auto* order = app.add_subcommand("order", "Order relation on the normalizer, poset verdict, Hasse edges");
  std::string order_path;
  order->add_option("table", order_path, ".tbl file, or - for stdin")->required();
  order->add_flag("--json", json, "JSON output");

  // induce
  auto* induce = app.add_subcommand("induce", "Emit the BCK-algebra induced by the normalizer order as .tbl");
  std::string induce_path;
  induce->add_option("table", induce_path, ".tbl file, or - for stdin")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate d-algebras of a given order");
  std::size_t order_n = 0;
  std::vector<std::string> filters;
  bool iso = false;
  bool count_only = false;
  std::string emit_dir;
  unsigned threads = 1;
  enumerate->add_option("--order", order_n, "carrier size (2..5)")->required();
  enumerate->add_option("--filter", filters, "d_star, edge, d_transitive or bck (repeatable)");
  enumerate->add_flag("--iso", iso, "one representative per isomorphism class");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--emit", emit_dir, "write each table to DIR/order<N>_<id>.tbl");
  enumerate->add_option("--threads", threads, "worker threads");
  enumerate->add_flag("--json", json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "Check registered statements over a table or an enumerated universe");
  std::vector<std::string> statement_ids;
  std::string verify_path;
  std::size_t verify_n = 0;
  std::vector<std::string> verify_filters;
  bool verify_iso = false;
  verify->add_option("--statement", statement_ids, "statement id (repeatable; default all)");
  auto* table_opt = verify->add_option("--table", verify_path, ".tbl file, or - for stdin");
  auto* order_opt = verify->add_option("--order", verify_n, "enumerate all d-algebras of this order");
  table_opt->excludes(order_opt);
  verify->add_option("--filter", verify_filters, "restrict the enumerated universe (repeatable)")->needs(order_opt);
  verify->add_flag("--iso", verify_iso, "isomorphism-reduced universe")->needs(order_opt);
  verify->add_flag("--json", json, "JSON output");

  auto* statements = app.add_subcommand("statements", "List registered statements");
  statements->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dtriple: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      if (!grid_text.empty()) {
        if (!check_path.empty()) throw UsageError("give either a table or --formula-grid, not both");
        SampleGrid grid = [&] {
          try {
            return SampleGrid::parse(grid_text);
          } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad grid: ") + e.what());
          }
        }();
        auto rep = check_formula_axioms(grid);
        out << (json ? formula_report_json(grid, rep).dump(2) + "\n" : to_text(rep));
        for (auto f : parse_flags(asserts))
          if (!rep.holds(f)) return kExitFailed;
        return kExitOk;
      }
      if (check_path.empty()) throw UsageError("check needs a table path or --formula-grid");
      auto asserted = parse_flags(asserts);
      auto alg = load_table(check_path, in);
      auto rep = check_axioms(alg);
      out << (json ? to_json(rep).dump(2) + "\n" : to_text(rep));
      for (auto f : asserted)
        if (!rep.holds(f)) {
          err << "dtriple: assertion failed: " << flag_name(f) << '\n';
          return kExitFailed;
        }
      return kExitOk;
    }

    if (nabla->parsed()) {
      auto na = build_normalizer(load_table(nabla_path, in));
      out << (json ? to_json(na).dump(2) + "\n" : to_text(na));
      return kExitOk;
    }

    if (order->parsed()) {
      auto na = build_normalizer(load_table(order_path, in));
      auto rel = order_relation(na);
      out << (json ? order_json(rel).dump(2) + "\n" : order_text(rel));
      return kExitOk;
    }

    if (induce->parsed()) {
      auto na = build_normalizer(load_table(induce_path, in));
      auto rel = order_relation(na);
      if (!check_poset(rel).is_poset() || na.size() == 0 || !na.contains({0, 0, 0})) {
        err << "dtriple: normalizer order is not a partial order with least element (0,0,0)\n";
        return kExitFailed;
      }
      auto induced = induce_bck(rel, *na.lookup({0, 0, 0}));
      std::vector<std::string> comments{"induced BCK-algebra on " + std::to_string(na.size()) + " normalizer members"};
      const auto pts = induced_point_order(rel.size(), *na.lookup({0, 0, 0}));
      for (std::size_t k = 0; k < pts.size(); ++k)
        comments.push_back("element " + std::to_string(k) + " = " + rel.label(pts[k]));
      out << emit_table(induced, comments);
      return kExitOk;
    }

    if (enumerate->parsed()) {
      EnumSpec spec;
      spec.n = order_n;
      spec.filters = parse_flags(filters);
      spec.iso_reduce = iso;
      spec.threads = threads;
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (count_only && emit_dir.empty()) {
        auto count = count_d_algebras(spec);
        if (json) {
          Json j;
          j["order"] = spec.n;
          j["count"] = count;
          out << j.dump(2) << '\n';
        } else {
          out << count << '\n';
        }
        return kExitOk;
      }
      auto algs = enumerate_d_algebras(spec);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (std::size_t id = 0; id < algs.size(); ++id) {
          auto path = std::filesystem::path(emit_dir) /
                      ("order" + std::to_string(spec.n) + "_" + std::to_string(id) + ".tbl");
          std::ofstream f(path);
          if (!f) throw UsageError("cannot write '" + path.string() + "'");
          f << emit_table(algs[id], {"id: " + std::to_string(id)});
        }
      }
      if (count_only) {
        out << algs.size() << '\n';
      } else if (json) {
        Json arr = Json::array();
        for (const auto& a : algs) {
          Json rows = Json::array();
          for (Element x = 0; x < a.size(); ++x) rows.push_back(Json(std::vector<Element>(a.row(x).begin(), a.row(x).end())));
          arr.push_back(rows);
        }
        Json j;
        j["order"] = spec.n;
        j["count"] = algs.size();
        j["algebras"] = arr;
        out << j.dump(2) << '\n';
      } else if (emit_dir.empty()) {
        for (std::size_t id = 0; id < algs.size(); ++id) out << emit_table(algs[id], {"id: " + std::to_string(id)});
      } else {
        out << algs.size() << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      for (const auto& id : statement_ids) {
        try {
          find_statement(id);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      std::optional<Universe> universe;
      if (!verify_path.empty()) {
        universe = Universe::single(load_table(verify_path, in),
                                    "table " + std::filesystem::path(verify_path).filename().string());
      } else if (*order_opt) {
        EnumSpec spec;
        spec.n = verify_n;
        spec.filters = parse_flags(verify_filters);
        spec.iso_reduce = verify_iso;
        try {
          spec.validate();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        universe = Universe::enumerated(spec);
      } else {
        throw UsageError("verify needs --table FILE or --order N");
      }
      auto verdicts = verify_statements(statement_ids, *universe);
      if (json) {
        out << to_json(verdicts).dump(2) << '\n';
      } else {
        for (const auto& v : verdicts) out << to_text(v);
      }
      return proved_statements_hold(verdicts) ? kExitOk : kExitFailed;
    }

    if (statements->parsed()) {
      Json arr = Json::array();
      for (const auto& s : statement_registry()) {
        if (json) {
          Json j;
          j["id"] = s.id;
          j["status"] = status_name(s.status);
          j["hypothesis"] = s.hypothesis;
          j["conclusion"] = s.conclusion;
          arr.push_back(j);
        } else {
          out << s.id << " [" << status_name(s.status) << "]\n  if:   " << s.hypothesis << "\n  then: " << s.conclusion
              << '\n';
        }
      }
      if (json) out << arr.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "dtriple: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dtriple: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace dtriple::cli
