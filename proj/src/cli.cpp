#include "hookdiff/cli.hpp"

#include "hookdiff/cores.hpp"
#include "hookdiff/partition.hpp"
#include "hookdiff/qseries.hpp"
#include "hookdiff/verifier.hpp"
#include "hookdiff/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace hookdiff {

namespace {

using nlohmann::json;

struct Options {
  bool as_json = false;
  bool seedless = false;
  bool with_series = false;
  int threads = 1;
  std::string partition = "-";
  int m = 2;
  int alpha = 1;
  int beta = 1;
  int n = 4;
  int qmax = 12;
  std::string id;
  std::vector<std::string> params;
};

Params parse_params(const std::vector<std::string>& raw) {
  Params out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("parameter '" + kv + "' must look like name=value");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

SeriesParams to_series_params(const Params& p) {
  SeriesParams out;
  for (const auto& [k, v] : p) {
    try {
      std::size_t used = 0;
      out[k] = std::stoll(v, &used);
      if (used != v.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("parameter '" + k + "' must be an integer");
    }
  }
  return out;
}

json cells_json(const std::vector<Cell>& cs) {
  json arr = json::array();
  for (const Cell& c : cs) arr.push_back(json::array({c.row, c.col}));
  return arr;
}

std::string cells_text(const std::vector<Cell>& cs) {
  std::string s;
  for (const Cell& c : cs) s += (s.empty() ? "" : " ") + ("(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
  return s.empty() ? "none" : s;
}

json series_json(const QTSeries& s) {
  json arr = json::array();
  for (const auto& t : s.triples()) arr.push_back(json::array({t.q, t.t, t.coeff.str()}));
  return arr;
}

int cmd_stat(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  const StatParams sp(o.alpha, o.beta);
  const auto hs = hook_set(p, sp);
  if (o.as_json) {
    out << json{{"partition", p.to_string()},
                {"alpha", o.alpha},
                {"beta", o.beta},
                {"value", hs.size()},
                {"cells", cells_json(hs)}}
               .dump(2)
        << '\n';
  } else {
    out << "h_{" << o.alpha << "," << o.beta << "}(" << p.to_string() << ") = " << hs.size() << '\n';
    out << "cells: " << cells_text(hs) << '\n';
  }
  return 0;
}

int cmd_core(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  const Partition c = m_core(p, o.m);
  if (o.as_json)
    out << json{{"partition", p.to_string()}, {"m", o.m}, {"core", c.to_string()}}.dump(2) << '\n';
  else
    out << c.to_string() << '\n';
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  const QuotientShift qs = quotient_and_shift(p, o.m);
  const Partition c = m_core(p, o.m);
  if (o.as_json) {
    json quot = json::array();
    for (const auto& q : qs.quotient) quot.push_back(q.to_string());
    out << json{{"partition", p.to_string()}, {"m", o.m}, {"core", c.to_string()}, {"quotient", quot}, {"shift", qs.shift}}
               .dump(2)
        << '\n';
  } else {
    out << "core:     " << c.to_string() << '\n';
    out << "quotient:";
    for (const auto& q : qs.quotient) out << ' ' << '(' << q.to_string() << ')';
    out << "\nshift:   ";
    for (int s : qs.shift) out << ' ' << s;
    out << '\n';
  }
  return 0;
}

int cmd_words(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  const WalkParams w = WalkParams::for_m(o.m);
  const OrderLabel ol = order_and_maxlabel(p, w);
  const DepartureWords dw = departure_words(p, w);
  const int inv = inversion_total(dw);
  const SSequence s = s_of(p, o.m);
  if (o.as_json) {
    out << json{{"partition", p.to_string()},
                {"m", o.m},
                {"order", ol.order},
                {"max_label", ol.max_label},
                {"border_path", border_path(p, w)},
                {"words", dw.words},
                {"inversions", inv},
                {"s", s}}
               .dump(2)
        << '\n';
  } else {
    out << "order " << ol.order << ", max label " << ol.max_label << '\n';
    out << "border path: " << border_path(p, w) << '\n';
    out << "words:";
    for (const auto& word : dw.words) out << ' ' << (word.empty() ? "-" : word);
    out << "\ninversions: " << inv << '\n';
    out << "tail:";
    for (int v : s) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_catalan(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.n > 12) throw DomainError("n must lie in 0..12");
  const Poly c = carlitz_catalan(o.n);
  const QTSeries qt = qt_catalan(o.n);
  if (o.as_json) {
    json coeffs = json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(v.str());
    out << json{{"n", o.n}, {"carlitz", coeffs}, {"count", c.at_one().str()}, {"qt_triples", series_json(qt)}}.dump(2)
        << '\n';
  } else {
    out << "C_" << o.n << "(q) = " << c.to_string("q") << '\n';
    out << "C_" << o.n << "(1) = " << c.at_one() << '\n';
    out << "q,t-form: " << qt.to_string() << '\n';
  }
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  const SeriesParams sp = to_series_params(parse_params(o.params));
  const QTSeries s = rhs_series(o.id, sp, o.qmax);
  if (o.as_json)
    out << json{{"id", o.id}, {"qmax", o.qmax}, {"triples", series_json(s)}}.dump(2) << '\n';
  else
    out << s.to_string() << '\n';
  return 0;
}

void print_report(const VerificationReport& r, const Options& o, std::ostream& out) {
  if (o.as_json) {
    out << report_to_json(r, o.with_series, o.seedless) << '\n';
    return;
  }
  out << r.id << " (qmax " << r.qmax << "): " << status_name(r.status) << '\n';
  if (r.mismatch)
    out << "first mismatch at q^" << r.mismatch->q << " t^" << r.mismatch->t << ": lhs " << r.mismatch->lhs << ", rhs "
        << r.mismatch->rhs << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  if (o.with_series) {
    if (r.lhs) out << "lhs: " << r.lhs->to_string() << '\n';
    if (r.rhs) out << "rhs: " << r.rhs->to_string() << '\n';
  }
  if (!o.seedless) out << "elapsed: " << static_cast<long long>(r.elapsed_ms) << " ms\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport r = verify(o.id, o.qmax, parse_params(o.params), o.threads);
  print_report(r, o, out);
  return r.ok() ? 0 : 1;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const VerificationReport r = conjecture_scan(o.id, parse_params(o.params), o.qmax, o.threads);
  print_report(r, o, out);
  return r.ok() ? 0 : 1;
}

int cmd_list(const Options& o, std::ostream& out) {
  const auto& reg = identity_registry();
  if (o.as_json) {
    json arr = json::array();
    for (const auto& info : reg) {
      json params = json::object();
      for (const auto& [k, v] : info.params) params[k] = v;
      arr.push_back({{"id", info.id},
                     {"kind", info.kind == IdentityKind::theorem ? "theorem" : "conjecture"},
                     {"params", params},
                     {"statement", info.statement}});
    }
    out << arr.dump(2) << '\n';
    return 0;
  }
  for (const auto& info : reg) {
    out << info.id << (info.kind == IdentityKind::conjecture ? " [conjecture]" : "");
    for (const auto& [k, v] : info.params) out << ' ' << k << '=' << v;
    out << "\n    " << info.statement << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hook-difference statistics, cores and quotients, q-series identities"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.as_json, "Emit a JSON document");
  app.add_flag("--seedless", o.seedless, "Deterministic output (no timings)");
  app.add_option("--threads", o.threads, "Shard-count hint for enumeration")->check(CLI::Range(1, 256));

  auto partition_opt = [&](CLI::App* sub) {
    sub->add_option("--partition,-p", o.partition, "Comma separated parts, '-' for empty")->required();
  };
  auto m_opt = [&](CLI::App* sub) { sub->add_option("--m", o.m, "Modulus")->check(CLI::Range(2, 64)); };
  auto params_opt = [&](CLI::App* sub) {
    sub->add_option("--param", o.params, "name=value (repeatable)")->take_all();
  };

  auto* stat = app.add_subcommand("stat", "Hook-difference statistic and its cells");
  partition_opt(stat);
  stat->add_option("--alpha", o.alpha)->check(CLI::NonNegativeNumber);
  stat->add_option("--beta", o.beta)->check(CLI::NonNegativeNumber);

  auto* core = app.add_subcommand("core", "m-core of a partition");
  partition_opt(core);
  m_opt(core);

  auto* quotient = app.add_subcommand("quotient", "m-core, m-quotient and m-shift");
  partition_opt(quotient);
  m_opt(quotient);

  auto* words = app.add_subcommand("words", "Border path, departure words and diagonal tail");
  partition_opt(words);
  m_opt(words);

  auto* catalan = app.add_subcommand("catalan", "Carlitz and q,t-Catalan numbers");
  catalan->add_option("--n", o.n)->required();

  auto* series = app.add_subcommand("series", "Expand a named closed-form series");
  series->add_option("--id", o.id)->required();
  series->add_option("--qmax", o.qmax)->check(CLI::Range(0, 200));
  params_opt(series);

  auto* ver = app.add_subcommand("verify", "Check a registered identity coefficient by coefficient");
  ver->add_option("--id", o.id)->required();
  ver->add_option("--qmax", o.qmax)->check(CLI::Range(0, 60));
  ver->add_flag("--with-series", o.with_series, "Include both sides in the output");
  params_opt(ver);

  auto* conj = app.add_subcommand("conjecture", "Scan a conjecture up to a size bound");
  conj->add_option("--name", o.id)->required()->check(CLI::IsMember({"cj1", "mcore"}));
  conj->add_option("--nmax", o.qmax)->check(CLI::Range(0, 60));
  conj->add_flag("--with-series", o.with_series, "Include both sides in the output");
  params_opt(conj);

  app.add_subcommand("list-identities", "List registered identities and conjectures");

  // Global flags are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*stat) return cmd_stat(o, out);
    if (*core) return cmd_core(o, out);
    if (*quotient) return cmd_quotient(o, out);
    if (*words) return cmd_words(o, out);
    if (*catalan) return cmd_catalan(o, out);
    if (*series) return cmd_series(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*conj) return cmd_conjecture(o, out);
    return cmd_list(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hookdiff
