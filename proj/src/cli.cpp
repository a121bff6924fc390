#include "tsys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "tsys/enumerator.hpp"
#include "tsys/recursions.hpp"
#include "tsys/series.hpp"
#include "tsys/transfer_system.hpp"
#include "tsys/verify.hpp"

namespace tsys::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CountArgs {
  std::string group;
  int n = 0;
  bool by_strata = false;
};

struct EnumerateArgs {
  int n = 0;
  bool liftable = false, saturated = false, tam = false, chain = false;
  std::string lattice_file;
  std::string format = "text";
  std::size_t budget = EnumerationOptions{}.budget;
};

struct SequenceArgs {
  std::string name;
  int max_n = 10;
};

struct ExportArgs {
  std::vector<std::string> series = {"L", "T", "Lmax", "Tmax", "ratio"};
  int max_n = 80;
  std::string out = ".";
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_n;
  bool json = false;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const Family family = a.group == "dihedral" ? Family::Liftable : Family::All;
  const auto table = strata_table(family, a.n);
  if (a.by_strata) {
    out << "k\\l";
    for (int l = 1; l <= a.n + 1; ++l) out << ' ' << l;
    out << '\n';
    for (int k = 1; k <= a.n + 1; ++k) {
      out << k;
      for (int l = 1; l <= a.n + 1; ++l) out << ' ' << table->aggregate(a.n, k, l);
      out << '\n';
    }
    out << "total " << table->total(a.n) << '\n';
  } else {
    out << table->total(a.n) << '\n';
  }
  return kOk;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  Carrier carrier;
  const bool grid = !a.chain && a.lattice_file.empty();
  if (!a.lattice_file.empty()) {
    std::ifstream in(a.lattice_file);
    if (!in) throw UsageError("cannot read lattice file `" + a.lattice_file + "`");
    carrier = std::make_shared<const Lattice>(read_lattice(in));
  } else if (a.chain) {
    carrier = std::make_shared<const Lattice>(make_chain(a.n));
  } else {
    carrier = std::make_shared<const Lattice>(make_grid(a.n));
  }
  if (!grid && (a.liftable || a.saturated || a.tam))
    throw UsageError("--liftable, --saturated and --tam need a [1] x [n] carrier");

  const auto result = enumerate_all(carrier, {a.budget});
  std::vector<const TransferSystem*> kept;
  for (const auto& t : result.systems) {
    if (a.liftable && !is_liftable(t)) continue;
    if (a.saturated && !is_saturated(t)) continue;
    if (a.tam && !(is_liftable(t) && has_full_right_vertical(t))) continue;
    kept.push_back(&t);
  }

  // Strata of the kept systems, keyed by (k, ℓ, minimal fibrant).
  std::map<std::tuple<int, int, GridElement>, std::size_t> strata;
  if (grid)
    for (const auto* t : kept) {
      const Stats s = stats(*t);
      ++strata[{s.stationary, s.extendable, s.minimal_fibrant}];
    }

  if (a.format == "json") {
    nlohmann::json systems = nlohmann::json::array();
    for (const auto* t : kept) systems.push_back(to_json(*t));
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& [key, count] : strata) {
      const auto& [k, l, e] = key;
      summary.push_back({{"k", k}, {"l", l}, {"minimal_fibrant", {e.a, e.b}}, {"count", count}});
    }
    nlohmann::json doc = {{"systems", std::move(systems)}, {"count", kept.size()}};
    if (grid) doc["strata"] = std::move(summary);
    out << doc.dump() << '\n';
  } else {
    for (const auto* t : kept) out << to_json(*t).dump() << '\n';
    for (const auto& [key, count] : strata) {
      const auto& [k, l, e] = key;
      out << "stratum k=" << k << " l=" << l << " mf=(" << e.a << ',' << e.b << ") " << count << '\n';
    }
    out << "count " << kept.size() << '\n';
  }
  return kOk;
}

int cmd_sequence(const SequenceArgs& a, std::ostream& out) {
  const std::string& s = a.name;
  const int m = a.max_n;
  if (s == "tamari") {
    for (int n = 0; n <= m; ++n) out << n << ' ' << tam_total(n) << '\n';
  } else if (s == "tamari-triangle") {
    for (int n = 0; n <= m; ++n) {
      out << n;
      for (int k = 1; k <= n + 1; ++k) out << ' ' << tam(n, k);
      out << '\n';
    }
  } else if (s == "schroder") {
    const auto v = schroder_sequence(m);
    for (int n = 0; n <= m; ++n) out << n << ' ' << v[n] << '\n';
  } else if (s == "refined-schroder") {
    for (int n = 1; n <= m; ++n) {
      out << n;
      for (int k = 1; k <= n; ++k) out << ' ' << refined_schroder(n, k);
      out << '\n';
    }
  } else if (s == "antichain") {
    for (int n = 1; n <= m; ++n) out << n << ' ' << antichain(n) << '\n';
  } else if (s == "catalan") {
    for (int n = 0; n <= m; ++n) out << n << ' ' << catalan(n) << '\n';
  } else if (s == "saturated") {
    for (int n = 0; n <= m; ++n) out << n << ' ' << saturated_liftable_count(n) << '\n';
  }
  return kOk;
}

int cmd_export(const ExportArgs& a, std::ostream& out) {
  std::vector<ExportSeries> which;
  for (const auto& name : a.series) {
    try {
      which.push_back(parse_export_series(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& path : export_series(which, a.max_n, a.out)) out << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Report report = run_suite(a.suite, a.max_n);
  if (a.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": expected " << c.expected << ", actual " << c.actual
          << " (" << to_string(c.provenance) << ": " << c.source << ")\n";
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks) passed += c.pass;
    out << "suite " << report.suite << " max_n=" << report.max_n << ": " << passed << '/' << report.checks.size()
        << " passed";
    if (!report.status.empty()) out << ", " << report.status;
    if (const Check* f = report.first_failure()) out << ", first failure: " << f->id;
    out << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate transfer systems on finite lattices", "tsys"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count transfer systems on [1] x [n] by recursion");
  c->add_option("--group", count.group, "dihedral (liftable systems) or cyclic (all systems)")
      ->required()
      ->check(CLI::IsMember({"dihedral", "cyclic"}));
  c->add_option("--n", count.n, "Grid size")->required()->check(CLI::NonNegativeNumber);
  c->add_flag("--by-strata", count.by_strata, "Print the matrix of counts by stationary (k) and extendable (l)");

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "Enumerate transfer systems by brute force");
  e->add_option("--n", enumerate.n, "Grid (or chain) size")->check(CLI::Range(0, 7));
  e->add_flag("--liftable", enumerate.liftable, "Keep liftable systems only");
  e->add_flag("--saturated", enumerate.saturated, "Keep saturated systems only");
  e->add_flag("--tam", enumerate.tam, "Keep liftable systems with (0,n) R (1,n)");
  e->add_flag("--chain", enumerate.chain, "Use the chain [n] instead of [1] x [n]");
  e->add_option("--lattice-file", enumerate.lattice_file, "Read the carrier from a covering-relation file")
      ->excludes("--chain");
  e->add_option("--format", enumerate.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  e->add_option("--budget", enumerate.budget, "Maximum number of systems to generate");

  SequenceArgs sequence;
  auto* s = app.add_subcommand("sequence", "Print an integer sequence or triangle");
  s->add_option("--name", sequence.name)
      ->required()
      ->check(CLI::IsMember(
          {"tamari", "tamari-triangle", "schroder", "refined-schroder", "antichain", "catalan", "saturated"}));
  s->add_option("--max-n", sequence.max_n, "Largest n")->check(CLI::Range(0, 2000));

  ExportArgs exporting;
  auto* x = app.add_subcommand("export", "Write the plotted series as .dat files");
  x->add_option("--series", exporting.series, "Comma-separated subset of L,T,Lmax,Tmax,ratio")->delimiter(',');
  x->add_option("--max-n", exporting.max_n, "Largest n")->check(CLI::Range(0, 500));
  x->add_option("--out", exporting.out, "Output directory");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", verify.suite, "One of: " + [] {
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }())->required();
  v->add_option("--max-n", verify.max_n, "Suite size parameter");
  v->add_flag("--json", verify.json, "Print the report as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (e->parsed()) return cmd_enumerate(enumerate, out);
    if (s->parsed()) return cmd_sequence(sequence, out);
    if (x->parsed()) return cmd_export(exporting, out);
    if (v->parsed()) return cmd_verify(verify, out);
  } catch (const UnknownSuite& ex) {
    err << "error: " << ex.what() << "\n" << v->help();
    return kUsage;
  } catch (const SuiteBudgetExceeded& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const LatticeError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tsys::cli
