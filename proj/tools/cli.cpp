#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "farey/csv.hpp"
#include "farey/errors.hpp"
#include "farey/mainterms.hpp"
#include "farey/oracle.hpp"
#include "farey/parallel.hpp"
#include "farey/products.hpp"
#include "farey/sieve.hpp"

namespace farey::cli {
namespace {

struct RunConfig {
  std::string command;
  std::int64_t n_max = 0;
  std::optional<std::int64_t> prime;
  std::optional<std::int64_t> base;
  std::string methods = "inversion";
  std::string kind;
  std::int64_t max_power = 0;
  std::string out_path;
  std::string format = "csv";
  std::int64_t p_max = 0;
  bool integers = false;
  bool psq = false;
  bool properties = false;
  double tau = JumpOptions{}.tau_inf;
  double tau_p = JumpOptions{}.tau_p;
};

std::string describe(const RunConfig& c) {
  std::ostringstream s;
  s << "farey " << FAREY_VERSION << " command=" << c.command;
  if (c.n_max) s << " n_max=" << c.n_max;
  if (c.prime) s << " p=" << *c.prime;
  if (c.base) s << " b=" << *c.base;
  if (c.command == "ordf") s << " method=" << c.methods;
  if (!c.kind.empty()) s << " kind=" << c.kind;
  if (c.max_power) s << " max_power=" << c.max_power;
  if (c.p_max) s << " p_max=" << c.p_max;
  if (c.command == "scan")
    s << " integers=" << c.integers << " psq=" << c.psq << " properties=" << c.properties;
  if (c.command == "jumps") s << " tau=" << format_float(c.tau) << " tau_p=" << format_float(c.tau_p);
  s << " format=" << c.format;
  return s.str();
}

std::int64_t require_n_max(const RunConfig& c) {
  if (c.n_max < 1) throw ConfigError(c.command + " needs --n-max >= 1");
  return c.n_max;
}

std::int64_t require_prime(const RunConfig& c) {
  if (!c.prime) throw ConfigError(c.command + " needs -p/--prime");
  if (!is_prime_number(*c.prime)) throw ConfigError(std::to_string(*c.prime) + " is not prime");
  return *c.prime;
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const Method m = parse_method(item);
    if (std::find(out.begin(), out.end(), m) != out.end()) throw ConfigError("method listed twice: " + item);
    out.push_back(m);
  }
  if (out.empty()) throw ConfigError("--method needs at least one method");
  return out;
}

int cmd_sieve(const RunConfig& c, CsvWriter& w) {
  const auto t = build_tables(require_n_max(c));
  write_sieve_csv(w, t);
  return kOk;
}

int cmd_ordg(const RunConfig& c, CsvWriter& w) {
  const std::int64_t n_max = require_n_max(c);
  w.header({"n", "value"});
  if (c.base) {
    if (*c.base < 2) throw ConfigError("--base must be at least 2");
    const auto values = parallel_map(1, n_max, [b = *c.base](std::int64_t n) { return nu_b_g(b, n); });
    for (std::int64_t n = 1; n <= n_max; ++n) w.row({CsvWriter::cell(n), CsvWriter::cell(values[n - 1])});
    return kOk;
  }
  const auto s = ord_g_series(require_prime(c), 1, n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) w.row({CsvWriter::cell(n), CsvWriter::cell(s.at(n))});
  return kOk;
}

int cmd_ordf(const RunConfig& c, CsvWriter& w, std::ostream& err) {
  const std::int64_t n_max = require_n_max(c);
  const auto methods = parse_methods(c.methods);
  if (c.base) {
    if (*c.base < 2) throw ConfigError("--base must be at least 2");
    if (methods.size() != 1 || methods[0] != Method::inversion)
      throw ConfigError("--base supports only --method inversion");
    const auto t = build_tables(n_max);
    const auto values = parallel_map(1, n_max, [&](std::int64_t n) { return nu_b_f(*c.base, n, t); });
    w.header({"n", "value"});
    for (std::int64_t n = 1; n <= n_max; ++n) w.row({CsvWriter::cell(n), CsvWriter::cell(values[n - 1])});
    return kOk;
  }
  const std::int64_t p = require_prime(c);
  const bool oracle = std::find(methods.begin(), methods.end(), Method::oracle) != methods.end();
  if (oracle && n_max > kOracleCeiling)
    throw ConfigError("--method oracle needs --n-max <= " + std::to_string(kOracleCeiling));
  const auto t = build_tables(n_max);

  std::vector<ValuationSeries> series;
  for (Method m : methods) series.push_back(ord_f_series(p, 1, n_max, t, m));

  if (series.size() == 1) {
    w.header({"n", "value"});
  } else {
    std::vector<std::string> cols{"n"};
    for (Method m : methods) cols.emplace_back(to_string(m));
    w.header(cols);
  }
  std::int64_t mismatches = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::vector<std::string> cells{CsvWriter::cell(n)};
    for (const auto& s : series) cells.push_back(CsvWriter::cell(s.at(n)));
    for (const auto& s : series)
      if (s.at(n) != series.front().at(n)) {
        ++mismatches;
        break;
      }
    w.row(cells);
  }
  if (series.size() > 1) {
    w.comment("mismatches=" + std::to_string(mismatches));
    if (mismatches != 0) {
      err << "ordf: " << mismatches << " rows differ between methods\n";
      return kCrossCheckFailure;
    }
  }
  return kOk;
}

int cmd_table(const RunConfig& c, CsvWriter& w) {
  const std::int64_t p = require_prime(c);
  if (c.max_power < 1) throw ConfigError("table needs --max-power >= 1");
  const double top = std::pow(static_cast<double>(p), static_cast<double>(c.max_power));
  if (top > 1e8) throw ConfigError("p^max-power exceeds the sieve ceiling");
  std::int64_t pr = 1;
  for (std::int64_t r = 0; r < c.max_power; ++r) pr *= p;
  const auto t = build_tables(pr - 1);
  w.header({"r", "N", "ord", "ord_over_N", "ord_over_NlogN"});
  for (const auto& row : power_table(p, c.max_power, t))
    w.row({CsvWriter::cell(row.r), CsvWriter::cell(row.N), CsvWriter::cell(row.ord), format_fixed(row.ord_over_N, 4),
           format_fixed(row.ord_over_NlogN, 4)});
  return kOk;
}

int cmd_remainder(const RunConfig& c, CsvWriter& w) {
  const std::int64_t n_max = require_n_max(c);
  if (c.kind.empty()) throw ConfigError("remainder needs --kind");
  const SplitKind kind = parse_split_kind(c.kind);
  std::optional<std::int64_t> p;
  if (is_padic(kind)) p = require_prime(c);
  const auto t = build_tables(n_max);
  const auto s = split_series(kind, p, 1, n_max, t);
  if (is_padic(kind))
    w.header({"n", "main", "remainder", "remainder_num", "denominator"});
  else
    w.header({"n", "main", "remainder"});
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    std::vector<std::string> cells{CsvWriter::cell(n), CsvWriter::cell(s.main[i]), CsvWriter::cell(s.remainder[i])};
    if (is_padic(kind)) {
      cells.push_back(CsvWriter::cell(s.remainder_num[i]));
      cells.push_back(CsvWriter::cell(s.denominator));
    }
    w.row(cells);
  }
  return kOk;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s.empty() ? "none" : s;
}

int cmd_scan(const RunConfig& c, CsvWriter& w, std::ostream& summary) {
  if (!c.integers && !c.psq && !c.properties) throw ConfigError("scan needs --integers, --psq or --properties");
  if (static_cast<int>(c.integers) + static_cast<int>(c.psq) + static_cast<int>(c.properties) > 1)
    throw ConfigError("scan takes one of --integers, --psq, --properties per run");
  auto note = [&](const std::string& line) {
    w.comment(line);
    summary << line << '\n';
  };

  if (c.integers) {
    const std::int64_t n_max = require_n_max(c);
    const auto t = build_tables(n_max);
    const auto found = integer_farey_scan(n_max, t);
    note("integral F(n) for n <= " + std::to_string(n_max) + ": count=" + std::to_string(found.size()) +
         " max=" + (found.empty() ? std::string("none") : std::to_string(found.back())));
    w.header({"n"});
    for (auto n : found) w.row({CsvWriter::cell(n)});
    return kOk;
  }

  if (c.psq) {
    if (c.p_max < 3) throw ConfigError("scan --psq needs --p-max >= 3");
    if (c.p_max > 10000) throw ConfigError("scan --psq supports --p-max <= 10000");
    const auto t = build_tables(c.p_max * c.p_max - 1);
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 3; p <= c.p_max; ++p)
      if (t.is_prime(p)) primes.push_back(p);
    struct Row {
      std::int64_t closed, inverted;
    };
    const auto rows = parallel_map(0, static_cast<std::int64_t>(primes.size()) - 1, [&](std::int64_t i) {
      const std::int64_t p = primes[static_cast<std::size_t>(i)];
      return Row{ord_f_psq_closed(p, t), ord_f_inversion(p, p * p - 1, t)};
    });
    w.header({"p", "N", "closed", "inversion", "ord_over_NlogN"});
    std::int64_t mismatches = 0, positive = 0;
    double envelope = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::int64_t p = primes[i], N = p * p - 1;
      const double NlogN = static_cast<double>(N) * std::log(static_cast<double>(N)) / std::log(static_cast<double>(p));
      const double ratio = static_cast<double>(rows[i].closed) / NlogN;
      envelope = std::min(envelope, ratio);
      mismatches += rows[i].closed != rows[i].inverted;
      positive += rows[i].closed > 0;
      w.row({CsvWriter::cell(p), CsvWriter::cell(N), CsvWriter::cell(rows[i].closed),
             CsvWriter::cell(rows[i].inverted), CsvWriter::cell(ratio)});
    }
    note("odd primes p <= " + std::to_string(c.p_max) + ": " + std::to_string(primes.size()) +
         " checked, positive=" + std::to_string(positive) + " mismatches=" + std::to_string(mismatches) +
         " min ord/(N log_p N)=" + format_fixed(envelope, 4));
    return mismatches ? kCrossCheckFailure : kOk;
  }

  const std::int64_t p = require_prime(c);
  const std::int64_t n_max = require_n_max(c);
  const auto t = build_tables(n_max);
  const auto rep = property_scan(p, n_max, t);
  note("P1 violations (k with ord > 0 at p^k-1): " + join(rep.p1_violations));
  note("P2 violations (k with ord <= 0 at p^k): " + join(rep.p2_violations));
  const double total = static_cast<double>(n_max);
  note("P3 positive=" + std::to_string(rep.positive) + " (" + format_fixed(rep.positive / total, 4) +
       ") negative=" + std::to_string(rep.negative) + " (" + format_fixed(rep.negative / total, 4) +
       ") zero=" + std::to_string(rep.zero) + " (" + format_fixed(rep.zero / total, 4) + ")");
  note("P4 max |ord|/(n log_p n)=" + format_fixed(rep.max_growth_ratio, 4) + " at n=" +
       std::to_string(rep.max_growth_at));
  w.header({"k", "n", "point", "value"});
  std::vector<PowerRow> below = rep.at_power_minus_one, at = rep.at_power;
  std::size_t i = 0, j = 0;
  while (i < below.size() || j < at.size()) {
    if (j >= at.size() || (i < below.size() && below[i].n < at[j].n)) {
      w.row({CsvWriter::cell(below[i].k), CsvWriter::cell(below[i].n), "p^k-1", CsvWriter::cell(below[i].value)});
      ++i;
    } else {
      w.row({CsvWriter::cell(at[j].k), CsvWriter::cell(at[j].n), "p^k", CsvWriter::cell(at[j].value)});
      ++j;
    }
  }
  return kOk;
}

int cmd_jumps(const RunConfig& c, CsvWriter& w) {
  const std::int64_t p = require_prime(c);
  const std::int64_t n_max = require_n_max(c);
  if (!(c.tau > 0) || !(c.tau_p > 0)) throw ConfigError("--tau and --tau-p must be positive");
  const auto t = build_tables(n_max);
  const auto rep = jump_correlation_report(p, n_max, t, {c.tau, c.tau_p});
  std::vector<std::int64_t> only_inf, only_p;
  std::set_difference(rep.jumps_inf.begin(), rep.jumps_inf.end(), rep.jumps_p1.begin(), rep.jumps_p1.end(),
                      std::back_inserter(only_inf));
  std::set_difference(rep.jumps_p1.begin(), rep.jumps_p1.end(), rep.jumps_inf.begin(), rep.jumps_inf.end(),
                      std::back_inserter(only_p));
  w.comment("jumps R_inf=" + std::to_string(rep.jumps_inf.size()) + " -R_p1=" + std::to_string(rep.jumps_p1.size()) +
            " common=" + std::to_string(rep.common.size()) + " m(m+1) with m squarefree=" +
            std::to_string(rep.pronic_squarefree.size()));
  w.comment("only R_inf: " + join(only_inf));
  w.comment("only -R_p1: " + join(only_p));
  w.comment("median |delta_p1|/|delta_inf| over common points=" + format_fixed(rep.median_ratio, 4));
  w.header({"n", "delta_inf", "delta_p1", "mu_m"});
  for (const auto& r : rep.rows)
    w.row({CsvWriter::cell(r.n), CsvWriter::cell(r.delta_inf), CsvWriter::cell(r.delta_p1),
           r.m ? CsvWriter::cell(std::int64_t{r.mu_m}) : std::string()});
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Farey product valuations, sizes and main-term splits"};
  app.set_version_flag("--version", std::string(FAREY_VERSION));
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out_path, "Output file (default: stdout)");
    sub->add_option("--format", c.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
  };
  auto add_n_max = [&](CLI::App* sub) { sub->add_option("--n-max", c.n_max, "Largest n"); };
  auto add_prime = [&](CLI::App* sub) { sub->add_option("-p,--prime", c.prime, "Prime p"); };

  auto* sieve = app.add_subcommand("sieve", "Dump phi, mu, Mertens, Phi and psi tables");
  add_n_max(sieve);
  add_common(sieve);

  auto* ordg = app.add_subcommand("ordg", "ord_p of the unreduced product G(n)");
  add_n_max(ordg);
  add_prime(ordg);
  ordg->add_option("-b,--base", c.base, "Any base b >= 2 instead of a prime");
  add_common(ordg);

  auto* ordf = app.add_subcommand("ordf", "ord_p of the Farey product F(n)");
  add_n_max(ordf);
  add_prime(ordf);
  ordf->add_option("-b,--base", c.base, "Any base b >= 2 instead of a prime");
  ordf->add_option("--method", c.methods, "Comma list of inversion, direct, oracle");
  add_common(ordf);

  auto* table = app.add_subcommand("table", "Values at N = p^r - 1 for r = 1..max-power");
  add_prime(table);
  table->add_option("--max-power", c.max_power, "Largest exponent r");
  add_common(table);

  auto* rem = app.add_subcommand("remainder", "Main term and remainder series");
  add_n_max(rem);
  add_prime(rem);
  rem->add_option("--kind", c.kind, "mikolas, inf, p0, p1 or p2");
  add_common(rem);

  auto* scan = app.add_subcommand("scan", "Integrality, p^2-1 and sign-property scans");
  add_n_max(scan);
  add_prime(scan);
  scan->add_flag("--integers", c.integers, "List n with F(n) integral");
  scan->add_flag("--psq", c.psq, "ord_p(F(p^2-1)) for odd primes p <= p-max");
  scan->add_flag("--properties", c.properties, "Sign and growth properties for one prime");
  scan->add_option("--p-max", c.p_max, "Largest prime for --psq");
  add_common(scan);

  auto* jumps = app.add_subcommand("jumps", "Common jump points of R_inf and -R_{p,1}");
  add_n_max(jumps);
  add_prime(jumps);
  jumps->add_option("--tau", c.tau, "Jump threshold for R_inf, in units of sqrt(n)");
  jumps->add_option("--tau-p", c.tau_p, "Jump threshold for -R_{p,1}, in units of sqrt(n)");
  add_common(jumps);

  std::vector<const char*> argv{"farey"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out_path.empty()) {
      file.open(c.out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot open " + c.out_path + " for writing");
      sink = &file;
    }
    CsvWriter w(*sink, c.format == "tsv" ? TextFormat::tsv : TextFormat::csv);
    w.comment(describe(c));
    // Scan summaries also reach the terminal when the CSV goes to a file.
    std::ostringstream discard;
    std::ostream& summary = c.out_path.empty() ? static_cast<std::ostream&>(discard) : out;

    int code = kOk;
    if (c.command == "sieve") code = cmd_sieve(c, w);
    else if (c.command == "ordg") code = cmd_ordg(c, w);
    else if (c.command == "ordf") code = cmd_ordf(c, w, err);
    else if (c.command == "table") code = cmd_table(c, w);
    else if (c.command == "remainder") code = cmd_remainder(c, w);
    else if (c.command == "scan") code = cmd_scan(c, w, summary);
    else if (c.command == "jumps") code = cmd_jumps(c, w);
    sink->flush();
    if (!*sink) throw std::runtime_error("write failed");
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::length_error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const CrossCheckError& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace farey::cli
