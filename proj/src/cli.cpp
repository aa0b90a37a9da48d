#include "mfl/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mfl/degree_two.hpp"
#include "mfl/parallel.hpp"
#include "mfl/report.hpp"
#include "mfl/suites.hpp"

namespace mfl {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  int ell = -1;
  std::string w;
  std::string format = "text";
  std::string mode;
  std::string which;
  std::string suite;
  int jobs = 1;
  int la_cap = 0;
  bool all_pairs = false;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void check_n(int n, int lo, int hi, const std::string& what) {
  require(n >= lo && n <= hi,
          what + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
}

void check_ell(int n, int ell) {
  require(ell >= 0 && ell <= n - 1, "--ell must lie in 0.." + std::to_string(n - 1));
}

Permutation parse_w(const Options& o) {
  Permutation w = Permutation::identity(1);
  try {
    w = Permutation::parse(o.w);
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed permutation '" + o.w + "': " + e.what());
  }
  require(w.size() == o.n, "permutation '" + o.w + "' has length " + std::to_string(w.size()) + ", expected " +
                               std::to_string(o.n));
  return w;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tags_string(const std::vector<WitnessTag>& tags) {
  std::string s;
  for (auto t : tags) s += (s.empty() ? "" : ",") + to_string(t);
  return s;
}

PairMode pair_mode(const Options& o) { return o.all_pairs ? PairMode::all_pairs : PairMode::spanning; }

void print_outcome_text(std::ostream& out, const ClassificationOutcome& c) {
  if (!c.surviving_binomials.empty()) {
    out << "generators:\n";
    for (const auto& r : c.surviving_binomials) out << "  " << r.to_string() << '\n';
    // Same generators after P_J -> sgn(J) P_J.
    out << "unsigned variables:\n";
    for (const auto& r : c.surviving_binomials) out << "  " << sign_free_string(r) << '\n';
  }
  if (!c.surviving_monomials.empty()) {
    out << "monomials:\n";
    for (const auto& m : c.surviving_monomials) out << "  " << m.to_string() << '\n';
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  const std::string mode = o.mode.empty() ? "both" : o.mode;
  const bool oracle = mode != "combinatorial", comb = mode != "oracle";
  check_n(o.n, 3, oracle ? kOracleBound : kCombinatorialBound, "classify");
  check_ell(o.n, o.ell);
  const Permutation w = parse_w(o);

  std::optional<ClassificationOutcome> outcome;
  std::optional<ClassificationRecord> record;
  if (oracle) outcome = classify(o.n, o.ell, w, pair_mode(o));
  if (comb) record = classify_combinatorial(o.n, o.ell, w);
  bool agree = true;
  if (outcome && record) {
    const auto cls = record->combinatorial_class;
    const Verdict v = outcome->verdict;
    agree = (v == Verdict::zero) == (cls == CombinatorialClass::Z) &&
            (v == Verdict::binomial) == (cls == CombinatorialClass::T) &&
            (v != Verdict::nonbinomial) == record->in_P;
  }

  if (o.format == "json") {
    Json j = outcome ? outcome_json(o.n, o.ell, w, *outcome)
                     : Json{{"schema", kSchema}, {"n", o.n}, {"ell", o.ell}, {"w", w.to_string()}};
    if (record) {
      j["class"] = to_string(record->combinatorial_class);
      Json tags = Json::array();
      for (auto t : record->witness_tags) tags.push_back(to_string(t));
      j["witness_tags"] = tags;
      j["in_P"] = record->in_P;
    }
    if (outcome && record) j["consistent"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << "n=" << o.n << " ell=" << o.ell << " w=" << w.to_string() << '\n';
    if (outcome) out << "verdict: " << to_string(outcome->verdict) << '\n';
    if (record) {
      out << "class: " << to_string(record->combinatorial_class);
      if (!record->witness_tags.empty()) out << " [" << tags_string(record->witness_tags) << "]";
      out << "\nin P: " << yes_no(record->in_P) << '\n';
    }
    if (outcome) print_outcome_text(out, *outcome);
    if (!agree) out << "MISMATCH between the oracle and the combinatorial classes\n";
  }
  return agree ? kExitOk : kExitMismatch;
}

int cmd_ideal(const Options& o, std::ostream& out) {
  check_n(o.n, 2, kOracleBound, "ideal");
  check_ell(o.n, o.ell);
  if (!o.w.empty()) {
    check_n(o.n, 3, kOracleBound, "ideal --w");
    const Permutation w = parse_w(o);
    const auto c = classify(o.n, o.ell, w, pair_mode(o));
    if (o.format == "json") {
      out << outcome_json(o.n, o.ell, w, c).dump(2) << '\n';
    } else {
      out << "n=" << o.n << " ell=" << o.ell << " w=" << w.to_string() << "\nverdict: " << to_string(c.verdict)
          << '\n';
      print_outcome_text(out, c);
    }
    return kExitOk;
  }
  const auto rs = relation_set(o.n, o.ell, pair_mode(o));
  if (o.format == "json") {
    Json gens = Json::array();
    for (const auto& r : rs->relations()) gens.push_back(relation_json(r));
    out << Json{{"schema", kSchema},
                {"n", o.n},
                {"ell", o.ell},
                {"mode", o.all_pairs ? "all_pairs" : "spanning"},
                {"fibers", rs->fibers().size()},
                {"generators", gens}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& r : rs->relations()) out << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_zn(const Options& o, std::ostream& out) {
  check_n(o.n, 1, kCombinatorialBound, "zn");
  std::vector<std::string> ws;
  for (const auto& w : z_family(o.n)) ws.push_back(w.to_string());
  std::sort(ws.begin(), ws.end());
  if (o.format == "json") {
    out << Json{{"schema", kSchema}, {"n", o.n}, {"count", z_count(o.n)}, {"permutations", ws}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,w\n";
    for (const auto& w : ws) out << o.n << ',' << w << '\n';
  } else {
    out << "|Z_" << o.n << "| = " << z_count(o.n) << '\n';
    for (const auto& w : ws) out << w << '\n';
  }
  return kExitOk;
}

void print_golden_text(std::ostream& out, const GoldenDiff& d) {
  for (const auto& x : d.diffs) out << "DIFF " << x << '\n';
  for (const auto& x : d.notes) out << "NOTE " << x << '\n';
  out << (d.ok() ? "reference data: match\n" : "reference data: MISMATCH\n");
}

int cmd_tables(const Options& o, std::ostream& out) {
  GoldenDiff diff;
  if (o.which == "table1") {
    diff = diff_table1();
    if (o.format == "json") {
      Json j = table1_json();
      j["reference"] = diff.to_json();
      out << j.dump(2) << '\n';
      return diff.ok() ? kExitOk : kExitMismatch;
    }
    if (o.format == "csv") out << "n,ell,w,verdict,generators\n";
    for (int ell = 0; ell < 3; ++ell)
      for (const auto& w : all_permutations(3)) {
        const auto c = classify(3, ell, w);
        if (c.verdict == Verdict::zero) continue;
        std::string gens;
        for (const auto& g : table1_cell(ell, w)) gens += (gens.empty() ? "" : (o.format == "csv" ? ";" : ", ")) + g;
        if (o.format == "csv") out << "3," << ell << ',' << w.to_string() << ',' << to_string(c.verdict) << ',' << gens << '\n';
        else out << "ell=" << ell << " w=" << w.to_string() << "  <" << gens << ">\n";
      }
    for (int ell = 0; ell < 4; ++ell) {
      std::string ws;
      for (const auto& [w, tags] : build_T(4, ell)) ws += (ws.empty() ? "" : (o.format == "csv" ? ";" : " ")) + w.to_string();
      if (o.format == "csv") out << "4," << ell << ',' << ws << ",binomial,\n";
      else out << "n=4 ell=" << ell << " binomial: " << ws << '\n';
    }
    if (o.format == "text") print_golden_text(out, diff);
    return diff.ok() ? kExitOk : kExitMismatch;
  }

  if (o.which == "table2") {
    const int n_max = o.n_max ? o.n_max : 6;
    const std::string mode = o.mode.empty() ? "oracle" : o.mode;
    require(mode == "oracle" || mode == "combinatorial", "tables table2 takes --mode oracle or combinatorial");
    const int n_min = o.n_min ? o.n_min : 3;
    check_n(n_max, 3, mode == "oracle" ? kOracleBound : kCombinatorialBound, "table2 --n-max");
    check_n(n_min, 3, n_max, "table2 --n-min");
    const auto rows = count_table(n_min, n_max, mode == "oracle" ? CountMode::oracle : CountMode::combinatorial, o.jobs);
    diff = diff_table2(rows);
    if (o.format == "json")
      out << Json{{"schema", kSchema}, {"mode", mode}, {"counts", counts_json(rows)}, {"reference", diff.to_json()}}.dump(2)
          << '\n';
    else if (o.format == "csv") out << counts_csv(rows);
    else {
      out << counts_grid(rows);
      print_golden_text(out, diff);
    }
    return diff.ok() ? kExitOk : kExitMismatch;
  }

  const int n_max = o.n_max ? o.n_max : 4;
  check_n(n_max, 3, 15, "zn --n-max");
  diff = diff_zn(n_max);
  if (o.format == "json") {
    Json levels = Json::array();
    for (int n = 3; n <= n_max; ++n) {
      Json lv{{"n", n}, {"count", z_count(n)}};
      if (n <= kCombinatorialBound) {
        std::vector<std::string> ws;
        for (const auto& w : z_family(n)) ws.push_back(w.to_string());
        std::sort(ws.begin(), ws.end());
        lv["permutations"] = ws;
      }
      levels.push_back(lv);
    }
    out << Json{{"schema", kSchema}, {"levels", levels}, {"reference", diff.to_json()}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,count\n";
    for (int n = 3; n <= n_max; ++n) out << n << ',' << z_count(n) << '\n';
  } else {
    for (int n = 3; n <= n_max; ++n) {
      out << "|Z_" << n << "| = " << z_count(n);
      if (n <= kCombinatorialBound && z_count(n) <= 20) {
        std::vector<std::string> ws;
        for (const auto& w : z_family(n)) ws.push_back(w.to_string());
        std::sort(ws.begin(), ws.end());
        out << ':';
        for (const auto& w : ws) out << ' ' << w;
      }
      out << '\n';
    }
    print_golden_text(out, diff);
  }
  return diff.ok() ? kExitOk : kExitMismatch;
}

std::string inline_tableau(const Tableau& t) {
  std::string s;
  for (const auto& col : t.displays()) {
    s += s.empty() ? "(" : " | (";
    for (std::size_t i = 0; i < col.size(); ++i) s += (i ? "," : "") + std::to_string(col[i]);
    s += ")";
  }
  return s;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  check_n(o.n, 2, 8, "tableaux");
  check_ell(o.n, o.ell);
  std::optional<Permutation> w;
  if (!o.w.empty()) w = parse_w(o);
  const auto ts = enumerate_ssyt2(o.n, w);
  std::optional<BijectionReport> rep;
  if (w && o.n <= 6) rep = verify_bijection(o.n, o.ell, *w);

  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& t : ts) {
      Json e{{"ssyt", tableau_json(t)}, {"gamma", tableau_json(gamma(t, o.ell))}};
      if (w) e["standard"] = is_standard(t, *w);
      list.push_back(e);
    }
    Json j{{"schema", kSchema}, {"n", o.n}, {"ell", o.ell}, {"count", ts.size()}};
    if (w) j["w"] = w->to_string();
    if (rep) {
      j["row_class_count"] = rep->row_class_count;
      j["standard_count"] = rep->standard_count;
      j["w_in_P"] = rep->w_in_P;
      j["bijection_pass"] = rep->pass;
      j["failures"] = rep->failures;
    }
    j["tableaux"] = list;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& t : ts) out << inline_tableau(t) << "  ->  " << inline_tableau(gamma(t, o.ell)) << '\n';
    out << "count: " << ts.size() << '\n';
    if (rep) {
      out << "row classes: " << rep->row_class_count << "\nstandard for w: " << rep->standard_count << "\nw in P: " << yes_no(rep->w_in_P)
          << "\nbijection: " << (rep->pass ? "pass" : "FAIL") << '\n';
      for (const auto& f : rep->failures) out << f << '\n';
    }
  }
  return rep && !rep->pass ? kExitMismatch : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int cap = o.la_cap ? o.la_cap : default_la_cap();
  require(cap >= 2 && cap <= 8, "--la-cap must lie in 2..8");
  const std::vector<std::string> names = {"coherence", "theoremB", "theoremC", "P", "theoremA", "tableaux"};
  std::vector<std::string> run;
  if (o.suite == "all") run = names;
  else run = {o.suite};

  auto bound = [&](int fallback, int hi, const std::string& what) {
    int n = o.n_max ? o.n_max : fallback;
    if (o.suite == "all") n = std::min(n, fallback);
    check_n(n, 3, hi, what);
    return n;
  };
  std::vector<SuiteResult> results;
  for (const auto& s : run) {
    if (s == "coherence") results.push_back(suite_coherence(bound(7, 9, "coherence")));
    else if (s == "theoremB") results.push_back(suite_zero(bound(6, kOracleBound, s), o.jobs));
    else if (s == "theoremC") results.push_back(suite_binomial(bound(6, kOracleBound, s), o.jobs));
    else if (s == "P") results.push_back(suite_monomial_free(bound(6, kOracleBound, s), o.jobs));
    else if (s == "theoremA") {
      const int n = bound(std::min(4, cap), kOracleBound, s);
      require(n <= cap, "theoremA at n=" + std::to_string(n) + " exceeds the linear-algebra cap " + std::to_string(cap));
      results.push_back(suite_initial(n, cap, o.jobs));
    } else results.push_back(suite_tableaux(bound(5, 6, s), o.jobs));
  }

  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& r : results) a.push_back(r.to_json());
    out << Json{{"schema", kSchema}, {"ok", ok}, {"suites", a}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << r.name << " n<=" << r.n_max << ": " << r.failures.size() << " mismatches (" << r.checked << " checks)\n";
      for (const auto& f : r.failures) out << "  " << f << '\n';
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const int lo = o.n ? o.n : 3;
  const int hi = o.n ? o.n : (o.n_max ? o.n_max : 5);
  check_n(lo, 3, kOracleBound, "sweep");
  check_n(hi, lo, kOracleBound, "sweep");

  struct Row {
    int n, ell;
    Permutation w;
    Verdict v;
    ClassificationRecord rec;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    const auto perms = all_permutations(n);
    for (int ell = 0; ell < n; ++ell) {
      if (o.ell >= 0 && ell != o.ell) continue;
      relation_set(n, ell);
      build_T(n, ell);
      auto part = parallel_map(perms.size(), o.jobs, [&](std::size_t i) {
        return Row{n, ell, perms[i], classify_oracle(n, ell, perms[i]), classify_combinatorial(n, ell, perms[i])};
      });
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  auto consistent = [](const Row& r) {
    const auto c = r.rec.combinatorial_class;
    return (r.v == Verdict::zero) == (c == CombinatorialClass::Z) &&
           (r.v == Verdict::binomial) == (c == CombinatorialClass::T) && (r.v != Verdict::nonbinomial) == r.rec.in_P;
  };
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& r : rows) {
      const bool c = consistent(r);
      ok = ok && c;
      a.push_back({{"n", r.n},
                   {"ell", r.ell},
                   {"w", r.w.to_string()},
                   {"verdict", to_string(r.v)},
                   {"class", to_string(r.rec.combinatorial_class)},
                   {"in_P", r.rec.in_P},
                   {"consistent", c}});
    }
    out << Json{{"schema", kSchema}, {"ok", ok}, {"records", a}}.dump(2) << '\n';
  } else {
    const char sep = o.format == "csv" ? ',' : ' ';
    out << "n" << sep << "ell" << sep << "w" << sep << "verdict" << sep << "class" << sep << "in_P" << sep
        << "consistent\n";
    for (const auto& r : rows) {
      const bool c = consistent(r);
      ok = ok && c;
      out << r.n << sep << r.ell << sep << r.w.to_string() << sep << to_string(r.v) << sep
          << to_string(r.rec.combinatorial_class) << sep << (r.rec.in_P ? 1 : 0) << sep << (c ? 1 : 0) << '\n';
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block diagonal matching fields and Schubert varieties"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "text, json or csv")->check(formats); };
  auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256)); };

  auto* classify_cmd = app.add_subcommand("classify", "classify one (n, ell, w)");
  classify_cmd->add_option("--n", o.n)->required();
  classify_cmd->add_option("--ell", o.ell)->required();
  classify_cmd->add_option("--w", o.w)->required();
  classify_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"oracle", "combinatorial", "both"}));
  classify_cmd->add_flag("--all-pairs", o.all_pairs, "keep every pair in each fiber");
  add_format(classify_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference tables");
  tables_cmd->add_option("which", o.which)->required()->check(CLI::IsMember({"table1", "table2", "zn"}));
  tables_cmd->add_option("--n-min", o.n_min, "first row of table2 (default 3)");
  tables_cmd->add_option("--n-max", o.n_max);
  tables_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"oracle", "combinatorial"}));
  add_format(tables_cmd);
  add_jobs(tables_cmd);

  auto* zn_cmd = app.add_subcommand("zn", "list Z_n");
  zn_cmd->add_option("--n", o.n)->required();
  add_format(zn_cmd);

  auto* ideal_cmd = app.add_subcommand("ideal", "quadratic generators, optionally restricted to w");
  ideal_cmd->add_option("--n", o.n)->required();
  ideal_cmd->add_option("--ell", o.ell)->required();
  ideal_cmd->add_option("--w", o.w);
  ideal_cmd->add_flag("--all-pairs", o.all_pairs, "keep every pair in each fiber");
  add_format(ideal_cmd);

  auto* tab_cmd = app.add_subcommand("tableaux", "two-column tableaux and their gamma images");
  tab_cmd->add_option("--n", o.n)->required();
  tab_cmd->add_option("--ell", o.ell)->required();
  tab_cmd->add_option("--w", o.w);
  add_format(tab_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify_cmd->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"coherence", "theoremB", "theoremC", "P", "theoremA", "tableaux", "all"}));
  verify_cmd->add_option("--n-max", o.n_max);
  verify_cmd->add_option("--la-cap", o.la_cap);
  add_format(verify_cmd);
  add_jobs(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "oracle and combinatorial classes for every (n, ell, w)");
  sweep_cmd->add_option("--n", o.n);
  sweep_cmd->add_option("--n-max", o.n_max);
  sweep_cmd->add_option("--ell", o.ell);
  add_format(sweep_cmd);
  add_jobs(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (tables_cmd->parsed()) return cmd_tables(o, out);
    if (zn_cmd->parsed()) return cmd_zn(o, out);
    if (ideal_cmd->parsed()) return cmd_ideal(o, out);
    if (tab_cmd->parsed()) return cmd_tableaux(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    return cmd_sweep(o, out);
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mfl
