#include "dascent/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dascent/burge.hpp"
#include "dascent/enumerate.hpp"
#include "dascent/fishburn.hpp"
#include "dascent/genfun.hpp"
#include "dascent/hatmap.hpp"
#include "dascent/polynomial.hpp"
#include "dascent/tables.hpp"
#include "dascent/verify.hpp"
#include "dascent/word.hpp"

namespace dascent {
namespace {

using nlohmann::json;

json poly_json(const Poly& p) {
  json arr = json::array();
  for (Entry e = 0; e <= p.degree(); ++e) {
    std::int64_t coef = p[static_cast<std::size_t>(e)];
    if (coef != 0) arr.push_back({{"exp", e}, {"coef", coef}});
  }
  return arr;
}

json series_json(const QxSeries& s) {
  json arr = json::array();
  for (std::size_t n = 0; n <= s.trunc(); ++n)
    arr.push_back({{"x", n}, {"q", poly_json(s.qcoeff(n))}});
  return arr;
}

// The word with the entry at `pivot` bracketed, in the usual serialization.
std::string word_with_marker(const Word& w, Entry pivot) {
  bool digits = true;
  for (Entry v : w)
    if (v > 9) digits = false;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) s += ',';
    std::string token = std::to_string(w[i]);
    if (static_cast<Entry>(i) + 1 == pivot) token = "[" + token + "]";
    s += token;
  }
  if (!digits && w.size() == 1) s += ',';
  return s;
}

void print_hat_trace(const HatResult& r, std::ostream& out) {
  std::vector<std::string> labels;
  std::vector<std::string> rows;
  labels.push_back("alpha");
  rows.push_back(word_to_string(r.original));
  Word cur = r.original;
  std::string applied;
  for (Entry p : r.pivots) {
    applied += ',' + std::to_string(p);
    cur = modify(cur, p);
    labels.push_back("M(alpha" + applied + ")");
    rows.push_back(word_with_marker(cur, p));
  }
  std::size_t width = 0;
  for (const std::string& l : labels) width = std::max(width, l.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << labels[i] << std::string(width - labels[i].size(), ' ') << " = "
        << rows[i] << '\n';
}

std::string join_entries(const std::vector<Entry>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

template <std::size_t N>
std::string witness_tuple(const std::array<Entry, N>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

void print_reports(const std::vector<VerifyReport>& reports,
                   const std::string& format, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const VerifyReport& r : reports)
      arr.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"instances", r.instances},
                     {"seconds", r.seconds},
                     {"counterexample", r.counterexample}});
    out << arr.dump() << '\n';
    return;
  }
  std::size_t name_w = 4;
  for (const VerifyReport& r : reports)
    name_w = std::max(name_w, r.name.size());
  out << std::left << std::setw(static_cast<int>(name_w)) << "name"
      << "  pass  " << std::right << std::setw(10) << "instances"
      << std::setw(9) << "time_s" << '\n';
  for (const VerifyReport& r : reports) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    out << std::left << std::setw(static_cast<int>(name_w)) << r.name
        << "  " << (r.pass ? "PASS" : "FAIL") << "  " << std::right
        << std::setw(10) << r.instances << std::setw(9) << secs.str() << '\n';
  }
  for (const VerifyReport& r : reports)
    if (!r.pass)
      out << r.name << " counterexample: " << r.counterexample << '\n';
}

struct GfRequest {
  std::string kind;
  bool has_d = false, has_n = false, has_trunc = false;
  Entry d = 0, n = 0, trunc = 0;
  std::string format;
};

int run_gf(const GfRequest& g, std::ostream& out) {
  auto need = [&](bool have, const char* flag) {
    if (!have)
      throw std::invalid_argument("gf " + g.kind + " requires " + flag);
  };
  auto reject = [&](bool have, const char* flag) {
    if (have)
      throw std::invalid_argument("gf " + g.kind + " does not take " + flag);
  };
  std::optional<Entry> trunc;
  if (g.has_trunc) trunc = g.trunc;

  Poly poly;
  std::string var = "x";
  bool is_series = false;
  QxSeries series(0);
  if (g.kind == "fib" || g.kind == "fibotorial" || g.kind == "k") {
    need(g.has_d, "--d");
    need(g.has_n, "--n");
    poly = g.kind == "fib"          ? fib_poly(g.d, g.n, trunc)
           : g.kind == "fibotorial" ? fibotorial(g.d, g.n, trunc)
                                    : k_poly(g.d, g.n, trunc);
  } else if (g.kind == "des") {
    need(g.has_d, "--d");
    need(g.has_n, "--n");
    reject(g.has_trunc, "--trunc");
    poly = des_poly(g.d, g.n);
    var = "q";
  } else if (g.kind == "self" || g.kind == "shifted") {
    need(g.has_d, "--d");
    need(g.has_trunc, "--trunc");
    reject(g.has_n, "--n");
    is_series = true;
    series = g.kind == "self" ? self_gf(g.d, g.trunc)
                              : shifted_self(g.d, g.trunc);
  } else {  // limit
    need(g.has_trunc, "--trunc");
    reject(g.has_d, "--d");
    reject(g.has_n, "--n");
    is_series = true;
    series = limit_series(g.trunc);
  }

  if (g.format == "json")
    out << (is_series ? series_json(series) : poly_json(poly)).dump() << '\n';
  else if (is_series)
    out << series.str();
  else
    out << poly.str(var) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"difference ascent sequences: enumeration, bijections, series"};
  app.require_subcommand(1);

  // --- enumerate ---
  auto* enumerate = app.add_subcommand("enumerate", "list a sequence family");
  std::string family;
  Entry en_d = 0, en_n = 0;
  std::string en_method = "blocks";
  enumerate->add_option("family", family, "ascseq | selfmod | modified | rset")
      ->required()
      ->check(CLI::IsMember({"ascseq", "selfmod", "modified", "rset"}));
  enumerate->add_option("--d", en_d, "difference parameter")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--n", en_n, "word length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--method", en_method, "selfmod generator route")
      ->check(CLI::IsMember({"filter", "blocks"}));

  // --- hat ---
  auto* hat_cmd = app.add_subcommand("hat", "apply or invert the hat map");
  Entry hat_d = 0;
  std::string hat_word;
  bool hat_trace = false, hat_invert = false;
  hat_cmd->add_option("--d", hat_d, "difference parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hat_cmd->add_option("--word", hat_word, "input word")->required();
  hat_cmd->add_flag("--trace", hat_trace, "print one line per pivot");
  hat_cmd->add_flag("--invert", hat_invert, "recover the pre-image");

  // --- transpose ---
  auto* transpose_cmd =
      app.add_subcommand("transpose", "transpose a Burge word");
  std::string top_str, bottom_str;
  transpose_cmd->add_option("--top", top_str, "top row")->required();
  transpose_cmd->add_option("--bottom", bottom_str, "bottom row")->required();

  // --- phi ---
  auto* phi_cmd = app.add_subcommand("phi", "map a sequence to a permutation");
  Entry phi_d = 0;
  std::string phi_word;
  phi_cmd->add_option("--d", phi_d, "difference parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  phi_cmd->add_option("--word", phi_word, "input word")->required();

  // --- activity ---
  auto* act_cmd = app.add_subcommand("activity", "classify values of a permutation");
  Entry act_d = 0;
  std::string act_perm;
  act_cmd->add_option("--d", act_d, "difference parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  act_cmd->add_option("--perm", act_perm, "permutation")->required();

  // --- check ---
  auto* check_cmd = app.add_subcommand("check", "test pattern containment");
  std::string pattern, check_perm;
  Entry check_d = 0;
  bool witness = false;
  check_cmd
      ->add_option("--pattern", pattern,
                   "f | f_d | barred | s_d | classical:<perm>")
      ->required();
  check_cmd->add_option("--perm", check_perm, "permutation")->required();
  auto* check_d_opt = check_cmd->add_option("--d", check_d, "difference parameter")
                          ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--witness", witness, "print the first witness tuple");

  // --- gf ---
  auto* gf_cmd = app.add_subcommand("gf", "generating functions");
  GfRequest gf;
  gf_cmd->add_option("kind", gf.kind,
                     "fib | fibotorial | k | self | shifted | limit | des")
      ->required()
      ->check(CLI::IsMember(
          {"fib", "fibotorial", "k", "self", "shifted", "limit", "des"}));
  auto* gf_d = gf_cmd->add_option("--d", gf.d, "difference parameter")
                   ->check(CLI::NonNegativeNumber);
  auto* gf_n = gf_cmd->add_option("--n", gf.n, "index")
                   ->check(CLI::NonNegativeNumber);
  auto* gf_trunc = gf_cmd->add_option("--trunc", gf.trunc, "truncation order")
                       ->check(CLI::NonNegativeNumber);
  gf.format = "text";
  gf_cmd->add_option("--format", gf.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // --- verify ---
  auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive check");
  std::string verify_name;
  Entry vmax_d = 0, vmax_n = 0;
  std::string verify_format = "text";
  verify_cmd->add_option("name", verify_name, "registered check name, or 'all'")
      ->required();
  auto* vd_opt = verify_cmd->add_option("--max-d", vmax_d, "override d bound")
                     ->check(CLI::NonNegativeNumber);
  auto* vn_opt = verify_cmd->add_option("--max-n", vmax_n, "override n bound")
                     ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // --- table ---
  auto* table_cmd = app.add_subcommand("table", "emit a count table as CSV");
  int which = 0;
  Entry tmax_d = 0, tmax_n = 12;
  table_cmd->add_option("which", which, "1 | 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  auto* td_opt = table_cmd->add_option("--max-d", tmax_d, "largest d row")
                     ->check(CLI::NonNegativeNumber);
  auto* tn_opt = table_cmd->add_option("--max-n", tmax_n, "largest n column")
                     ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.push_back("dascent");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*enumerate) {
      bool has_d = enumerate->count("--d") > 0;
      bool has_method = enumerate->count("--method") > 0;
      if (family == "rset") {
        if (has_d) throw std::invalid_argument("enumerate rset takes no --d");
        if (has_method)
          throw std::invalid_argument("enumerate rset takes no --method");
        for_each_r_word(en_n,
                        [&](const Word& w) { out << word_to_string(w) << '\n'; });
        return 0;
      }
      if (!has_d)
        throw std::invalid_argument("enumerate " + family + " requires --d");
      if (has_method && family != "selfmod")
        throw std::invalid_argument("--method applies to selfmod only");
      if (family == "ascseq") {
        for_each_d_ascent_sequence(
            en_d, en_n, [&](const Word& w) { out << word_to_string(w) << '\n'; });
      } else if (family == "selfmod") {
        auto method = en_method == "filter" ? SelfModMethod::filter
                                            : SelfModMethod::blocks;
        for_each_self_modified(
            en_d, en_n, method,
            [&](const Word& w) { out << word_to_string(w) << '\n'; });
      } else {  // modified
        for (const Word& w : modified_sequences(en_d, en_n))
          out << word_to_string(w) << '\n';
      }
      return 0;
    }

    if (*hat_cmd) {
      Word w = parse_word(hat_word);
      if (hat_invert) {
        if (hat_trace)
          throw std::invalid_argument("--trace applies to the forward map only");
        out << word_to_string(unhat(w, hat_d)) << '\n';
        return 0;
      }
      HatResult r = hat(w, hat_d);
      if (hat_trace)
        print_hat_trace(r, out);
      else
        out << word_to_string(r.modified) << '\n';
      return 0;
    }

    if (*transpose_cmd) {
      Biword b{parse_word(top_str), parse_word(bottom_str)};
      Biword t = burge_transpose(b);
      out << word_to_string(t.top) << '\n' << word_to_string(t.bottom) << '\n';
      return 0;
    }

    if (*phi_cmd) {
      out << word_to_string(phi(parse_word(phi_word), phi_d)) << '\n';
      return 0;
    }

    if (*act_cmd) {
      ActivityTable t = d_activity(parse_word(act_perm), act_d);
      out << "active:" << (t.active.empty() ? "" : " " + join_entries(t.active))
          << '\n'
          << "inactive:"
          << (t.inactive.empty() ? "" : " " + join_entries(t.inactive)) << '\n';
      return 0;
    }

    if (*check_cmd) {
      Permutation p = parse_word(check_perm);
      bool has_d = check_d_opt->count() > 0;
      auto need_d = [&] {
        if (!has_d)
          throw std::invalid_argument("pattern " + pattern + " requires --d");
      };
      bool found = false;
      std::string tuple;
      if (pattern == "f") {
        if (auto t = find_f(p)) found = true, tuple = witness_tuple(*t);
      } else if (pattern == "f_d") {
        need_d();
        if (auto t = find_f_d(p, check_d)) found = true, tuple = witness_tuple(*t);
      } else if (pattern == "barred") {
        if (auto t = find_barred_31524(p)) found = true, tuple = witness_tuple(*t);
      } else if (pattern == "s_d") {
        need_d();
        if (auto t = find_s_d(p, check_d)) found = true, tuple = witness_tuple(*t);
      } else if (pattern.rfind("classical:", 0) == 0) {
        Permutation q = parse_word(pattern.substr(10));
        if (auto t = find_classical(p, q)) {
          found = true;
          tuple = "(" + join_entries(*t) + ")";
        }
      } else {
        throw std::invalid_argument("unknown pattern '" + pattern + "'");
      }
      out << (found ? "true" : "false") << '\n';
      if (witness && found) out << "witness: " << tuple << '\n';
      return 0;
    }

    if (*gf_cmd) {
      gf.has_d = gf_d->count() > 0;
      gf.has_n = gf_n->count() > 0;
      gf.has_trunc = gf_trunc->count() > 0;
      return run_gf(gf, out);
    }

    if (*verify_cmd) {
      std::vector<std::string> names;
      if (verify_name == "all")
        names = verify_names();
      else
        names.push_back(verify_name);
      std::vector<VerifyReport> reports;
      bool all_pass = true;
      for (const std::string& name : names) {
        VerifyBounds bounds = verify_default_bounds(name);
        if (vd_opt->count() > 0) bounds.max_d = vmax_d;
        if (vn_opt->count() > 0) bounds.max_n = vmax_n;
        reports.push_back(verify_theorem(name, bounds));
        all_pass = all_pass && reports.back().pass;
      }
      print_reports(reports, verify_format, out);
      return all_pass ? 0 : 1;
    }

    if (*table_cmd) {
      Entry max_d = td_opt->count() > 0 ? tmax_d : (which == 1 ? 6 : 10);
      Entry max_n = tn_opt->count() > 0 ? tmax_n : 12;
      out << table_csv(which, max_d, max_n);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dascent
