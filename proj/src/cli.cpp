#include "rsbf/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsbf/bfcore.hpp"
#include "rsbf/cache.hpp"
#include "rsbf/error.hpp"
#include "rsbf/mrs.hpp"
#include "rsbf/numtheory.hpp"
#include "rsbf/orbits.hpp"
#include "rsbf/quadratic.hpp"
#include "rsbf/render.hpp"
#include "rsbf/structure.hpp"

namespace rsbf::cli {
namespace {

using json = nlohmann::ordered_json;
using render::OutputFormat;

struct Options {
  std::string format = "pretty";
  std::string cache_dir;
  bool no_cache = false;
  bool max_n_override = false;
  int jobs = 0;
  bool verbose = false;
  bool with_invariants = false;

  int n = 0;
  int p = 0;
  int k = 0;
  int j = 0;
  int r = 0;
  int s = 0;
  std::string f;
};

struct Outcome {
  int exit_code = kOk;
  std::string output;
};

bf::VarCap var_cap(const Options& o) { return o.max_n_override ? bf::VarCap::hard() : bf::VarCap{}; }

int power3_cap(const Options& o) { return o.max_n_override ? 7 : structure::kDefaultMaxPower3; }

// Large truth tables are allowed by the default cap but worth flagging.
void warn_memory(int n, std::ostream& err) {
  if (n > 20 && n <= bf::kHardMaxVars) {
    const std::uint64_t mib = (std::uint64_t{8} << n) >> 20;
    err << "warning: n = " << n << " allocates a " << mib << " MiB Walsh spectrum per worker\n";
  }
}

mrs::CubicTriple parse_triple(int n, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("--f expects j,k (e.g. --f 2,3)");
  int j = 0;
  int k = 0;
  try {
    std::size_t used = 0;
    j = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("j");
    const std::string rest = text.substr(comma + 1);
    k = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("k");
  } catch (const std::exception&) {
    throw DomainError("--f expects two integers j,k, got '" + text + "'");
  }
  return mrs::CubicTriple::from_canonical(n, j, k);
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

json triple_json(const mrs::CubicTriple& f) { return json::array({1, f.j(), f.k()}); }

// ---------------------------------------------------------------------------
// Commands. Each returns the full rendered output and its exit status.

Outcome cmd_dn(const Options& o, OutputFormat fmt) {
  const auto dn = mrs::enumerate_dn(o.n);
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty:
      os << "D_" << o.n << ": " << dn.size() << (dn.size() == 1 ? " function\n" : " functions\n");
      for (const auto& f : dn) os << f.to_string() << (f.is_short() ? "  short" : "") << '\n';
      break;
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = render::kSchemaVersion;
      doc["n"] = o.n;
      doc["size"] = dn.size();
      json list = json::array();
      for (const auto& f : dn) list.push_back(triple_json(f));
      doc["functions"] = std::move(list);
      os << dump(doc);
      break;
    }
    case OutputFormat::csv:
      os << "n,j,k,is_short\n";
      for (const auto& f : dn) os << o.n << ',' << f.j() << ',' << f.k() << ',' << (f.is_short() ? 1 : 0) << '\n';
      break;
  }
  return {kOk, os.str()};
}

Outcome cmd_classes(const Options& o, OutputFormat fmt) {
  const auto table = orbits::classes(o.n);
  if (!o.with_invariants) return {kOk, render::classes(table, fmt)};
  const auto inv = structure::class_invariants(table, var_cap(o), o.jobs);
  return {kOk, render::classes(table, fmt, &inv)};
}

Outcome cmd_orbit(const Options& o, OutputFormat fmt) {
  const auto f = parse_triple(o.n, o.f);
  const auto members = orbits::orbit(o.n, f);
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty:
      os << "orbit of " << f.to_string() << " in n = " << o.n << ": size " << members.size()
         << " (phi = " << nt::euler_phi(o.n) << ")\n";
      for (const auto& m : members) os << m.to_string() << '\n';
      break;
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = render::kSchemaVersion;
      doc["n"] = o.n;
      doc["function"] = triple_json(f);
      doc["size"] = members.size();
      json list = json::array();
      for (const auto& m : members) list.push_back(triple_json(m));
      doc["members"] = std::move(list);
      os << dump(doc);
      break;
    }
    case OutputFormat::csv:
      os << "n,j,k\n";
      for (const auto& m : members) os << o.n << ',' << m.j() << ',' << m.k() << '\n';
      break;
  }
  return {kOk, os.str()};
}

Outcome cmd_stabilizer(const Options& o, OutputFormat fmt) {
  const auto f = parse_triple(o.n, o.f);
  const auto stab = orbits::stabilizer(o.n, f);
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty: {
      os << "stabilizer of " << f.to_string() << " in n = " << o.n << ": {";
      for (std::size_t i = 0; i < stab.size(); ++i) os << (i ? ", " : "") << stab[i];
      os << "} (order " << stab.size() << ", orbit size "
         << nt::euler_phi(o.n) / static_cast<int>(stab.size()) << ")\n";
      break;
    }
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = render::kSchemaVersion;
      doc["n"] = o.n;
      doc["function"] = triple_json(f);
      doc["stabilizer"] = stab;
      doc["orbit_size"] = nt::euler_phi(o.n) / static_cast<int>(stab.size());
      os << dump(doc);
      break;
    }
    case OutputFormat::csv:
      os << "n,tau\n";
      for (int t : stab) os << o.n << ',' << t << '\n';
      break;
  }
  return {kOk, os.str()};
}

Outcome cmd_census(const Options& o, OutputFormat fmt) {
  return {kOk, render::census(structure::census(o.n), fmt)};
}

Outcome cmd_invariants(const Options& o, OutputFormat fmt) {
  const auto rows = structure::class_invariants(o.n, var_cap(o), o.jobs);
  return {kOk, render::invariants(o.n, rows, fmt, o.verbose)};
}

Outcome cmd_conjecture(const Options& o, OutputFormat fmt) {
  const auto report = structure::conjecture_check(o.n, var_cap(o), o.jobs);
  return {report.verdict ? kOk : kVerificationFailed, render::conjecture(report, fmt, o.verbose)};
}

std::string cycles_text(const quad::RhoCycles& rc) {
  std::string out;
  for (const auto& c : rc.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

Outcome cmd_quadratic(const Options& o, OutputFormat fmt) {
  const bool pair_mode = o.r != 0 || o.s != 0;
  if (pair_mode == (o.j != 0)) throw DomainError("quadratic expects either --j or both --r and --s");
  const int n = o.n;
  std::ostringstream os;
  if (!pair_mode) {
    const mrs::QuadIndex q(n, o.j);
    const auto formula = quad::quad_wt_nl(q);
    std::optional<bf::SpectralSummary> computed;
    if (n <= var_cap(o).max_vars) {
      computed = bf::summarize(bf::tt_from_monomials(mrs::quad_monomials(q), var_cap(o)), var_cap(o));
    }
    const bool agree = !computed || (computed->weight == formula.weight &&
                                     computed->nonlinearity == formula.nonlinearity);
    std::optional<quad::RhoCycles> rc;
    if (!q.is_short()) rc = quad::rho_cycles(n, o.j);
    switch (fmt) {
      case OutputFormat::pretty:
        os << "f_{" << n << "," << o.j << "}" << (q.is_short() ? " (short)" : "") << '\n';
        if (rc) os << "rho cycles: " << cycles_text(*rc) << " (k = " << rc->count << ")\n";
        os << "formula:   wt " << formula.weight << ", N " << formula.nonlinearity << '\n';
        if (computed) os << "transform: wt " << computed->weight << ", N " << computed->nonlinearity << '\n';
        else os << "transform: skipped (n above truth-table cap)\n";
        break;
      case OutputFormat::json: {
        json doc;
        doc["schema_version"] = render::kSchemaVersion;
        doc["n"] = n;
        doc["j"] = o.j;
        doc["short"] = q.is_short();
        if (rc) {
          doc["cycle_count"] = rc->count;
          doc["cycles"] = rc->cycles;
        }
        doc["weight"] = formula.weight;
        doc["nonlinearity"] = formula.nonlinearity;
        if (computed) {
          doc["transform_weight"] = computed->weight;
          doc["transform_nonlinearity"] = computed->nonlinearity;
        }
        os << dump(doc);
        break;
      }
      case OutputFormat::csv:
        os << "n,j,short,weight,nonlinearity,transform_weight,transform_nonlinearity\n"
           << n << ',' << o.j << ',' << (q.is_short() ? 1 : 0) << ',' << formula.weight << ','
           << formula.nonlinearity << ',';
        if (computed) os << computed->weight << ',' << computed->nonlinearity;
        else os << ',';
        os << '\n';
        break;
    }
    return {agree ? kOk : kVerificationFailed, os.str()};
  }

  if (o.r == 0 || o.s == 0) throw DomainError("quadratic pair mode needs both --r and --s");
  const bool equivalent = quad::quad_equivalent(n, o.r, o.s);
  std::vector<int> xi;
  bool terms_ok = false;
  std::optional<bool> table_ok;
  if (equivalent) {
    xi = quad::build_xi(n, o.r, o.s);
    terms_ok = quad::xi_maps_terms(n, o.r, o.s, xi);
    if (n <= var_cap(o).max_vars) {
      const auto from = bf::tt_from_monomials(mrs::quad_monomials(mrs::QuadIndex(n, o.r)), var_cap(o));
      const auto to = bf::tt_from_monomials(mrs::quad_monomials(mrs::QuadIndex(n, o.s)), var_cap(o));
      table_ok = bf::apply_affine(from, bf::AffineMap::from_permutation(xi)) == to;
    }
  }
  const bool ok = !equivalent || (terms_ok && table_ok.value_or(true));
  switch (fmt) {
    case OutputFormat::pretty: {
      os << "f_{" << n << "," << o.r << "} vs f_{" << n << "," << o.s
         << "}: permutation-equivalent (gcd criterion): " << (equivalent ? "yes" : "no") << '\n';
      if (equivalent) {
        os << "xi images of 1.." << n << ": [";
        for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
        os << "]\n";
        os << "xi maps terms: " << (terms_ok ? "yes" : "NO") << '\n';
        if (table_ok) os << "xi maps truth table: " << (*table_ok ? "yes" : "NO") << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = render::kSchemaVersion;
      doc["n"] = n;
      doc["r"] = o.r;
      doc["s"] = o.s;
      doc["permutation_equivalent"] = equivalent;
      if (equivalent) {
        doc["xi"] = xi;
        doc["xi_maps_terms"] = terms_ok;
        if (table_ok) doc["xi_maps_truth_table"] = *table_ok;
      }
      os << dump(doc);
      break;
    }
    case OutputFormat::csv:
      os << "n,r,s,permutation_equivalent,xi\n"
         << n << ',' << o.r << ',' << o.s << ',' << (equivalent ? 1 : 0) << ',';
      for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? " " : "") << xi[i];
      os << '\n';
      break;
  }
  return {ok ? kOk : kVerificationFailed, os.str()};
}

Outcome from_report(std::string_view check, const structure::Report& r, OutputFormat fmt) {
  return {r.passed ? kOk : kVerificationFailed, render::report(check, r, fmt)};
}

Outcome cmd_verify_prime(const Options& o, OutputFormat fmt) {
  return from_report("prime", structure::verify_prime(o.p), fmt);
}

Outcome cmd_verify_power3(const Options& o, OutputFormat fmt) {
  auto r = structure::verify_power3(o.k, power3_cap(o));
  const auto reduction = structure::check_power3_reduction(o.k, power3_cap(o));
  r.passed = r.passed && reduction.passed;
  r.failures.insert(r.failures.end(), reduction.failures.begin(), reduction.failures.end());
  return from_report("power3", r, fmt);
}

Outcome cmd_verify_smallest_group(const Options& o, OutputFormat fmt) {
  return from_report("smallest-group", structure::verify_smallest_group(o.n), fmt);
}

Outcome cmd_verify_quadratic(const Options& o, OutputFormat fmt) {
  if (o.n != 0) return from_report("quadratic-formulas", structure::verify_quadratic_formulas(o.n, var_cap(o)), fmt);
  structure::Report all;
  int checked = 0;
  for (int n = 2; n <= 20; ++n) {
    const auto r = structure::verify_quadratic_formulas(n, var_cap(o));
    all.passed = all.passed && r.passed;
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
    ++checked;
  }
  all.summary = "n=2..20: closed forms match the transform for " + std::to_string(checked) + " values of n";
  return from_report("quadratic-formulas", all, fmt);
}

std::string cache_key(const std::string& command, const Options& o) {
  std::ostringstream key;
  key << "rsbf " << kVersion << " schema " << render::kSchemaVersion << " | " << command
      << " | format=" << o.format << " n=" << o.n << " p=" << o.p << " k=" << o.k << " j=" << o.j
      << " r=" << o.r << " s=" << o.s << " f=" << o.f << " verbose=" << o.verbose
      << " invariants=" << o.with_invariants << " override=" << o.max_n_override;
  return key.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Affine equivalence classes of monomial rotation symmetric Boolean functions", "rsbf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir, "Result cache directory (overrides RSBF_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "Neither read nor write the result cache");
  app.add_flag("--max-n-override", o.max_n_override,
               "Raise the truth-table cap to 28 variables and the power-of-3 cap to k = 7");
  app.add_option("--jobs", o.jobs, "Worker threads for truth-table work (default: logical cores)")
      ->check(CLI::NonNegativeNumber);

  // (command name, handler) chosen by the callback of the parsed subcommand.
  std::string chosen;
  std::function<Outcome(const Options&, OutputFormat)> handler;
  auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Options&, OutputFormat)) {
    sub->callback([&chosen, &handler, name = std::move(name), fn] {
      chosen = name;
      handler = fn;
    });
  };
  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--n", o.n, "Number of variables");
    if (required) opt->required();
  };

  auto* dn = app.add_subcommand("dn", "List the canonical cubic MRS functions D_n");
  add_n(dn);
  bind(dn, "dn", cmd_dn);

  auto* cls = app.add_subcommand("classes", "Equivalence classes (G_n orbits) of D_n");
  add_n(cls);
  cls->add_flag("--invariants", o.with_invariants, "Add weight, nonlinearity and profile digest");
  bind(cls, "classes", cmd_classes);

  auto* orb = app.add_subcommand("orbit", "Orbit of one function under G_n");
  add_n(orb);
  orb->add_option("--f", o.f, "Canonical triple selector j,k for (1,j,k)")->required();
  bind(orb, "orbit", cmd_orbit);

  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of one function in G_n");
  add_n(stab);
  stab->add_option("--f", o.f, "Canonical triple selector j,k for (1,j,k)")->required();
  bind(stab, "stabilizer", cmd_stabilizer);

  auto* cen = app.add_subcommand("census", "Histogram of class sizes");
  add_n(cen);
  bind(cen, "census", cmd_census);

  auto* inv = app.add_subcommand("invariants", "Weight, nonlinearity and Walsh profile per class");
  add_n(inv);
  inv->add_flag("-v,--verbose", o.verbose, "Print full Walsh profiles");
  bind(inv, "invariants", cmd_invariants);

  auto* conj = app.add_subcommand("conjecture", "Check that Walsh profiles separate classes with equal (wt, N)");
  add_n(conj);
  conj->add_flag("-v,--verbose", o.verbose, "Print full Walsh profiles");
  bind(conj, "conjecture", cmd_conjecture);

  auto* quad_cmd = app.add_subcommand("quadratic", "Quadratic MRS weight/nonlinearity, equivalence and xi");
  add_n(quad_cmd);
  quad_cmd->add_option("--j", o.j, "Index j of f_{n,j}");
  quad_cmd->add_option("--r", o.r, "First index for the equivalence test");
  quad_cmd->add_option("--s", o.s, "Second index for the equivalence test");
  bind(quad_cmd, "quadratic", cmd_quadratic);

  auto* verify = app.add_subcommand("verify", "Theorem-level checks");
  verify->require_subcommand(1);
  auto* vp = verify->add_subcommand("prime", "Class count and sizes for prime n");
  vp->add_option("--p", o.p, "Prime number of variables")->required();
  bind(vp, "verify prime", cmd_verify_prime);
  auto* v3 = verify->add_subcommand("power3", "Class structure for n = 3^k");
  v3->add_option("--k", o.k, "Exponent k")->required();
  bind(v3, "verify power3", cmd_verify_power3);
  auto* vs = verify->add_subcommand("smallest-group", "No proper subgroup of G_n gives the classes");
  add_n(vs);
  bind(vs, "verify smallest-group", cmd_verify_smallest_group);
  auto* vq = verify->add_subcommand("quadratic-formulas", "Closed-form quadratic wt/N against the transform");
  add_n(vq, false);
  bind(vq, "verify quadratic-formulas", cmd_verify_quadratic);

  auto* cache_cmd = app.add_subcommand("cache", "Result cache maintenance");
  cache_cmd->require_subcommand(1);
  bool clear_requested = false;
  cache_cmd->add_subcommand("clear", "Remove all cached results")->callback([&] { clear_requested = true; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const cache::ResultCache store(cache::ResultCache::resolve_dir(o.cache_dir));
  if (clear_requested) {
    out << "removed " << store.clear() << " cache entries from " << store.dir().string() << '\n';
    return kOk;
  }
  if (!handler) {
    err << "error: no command given\n\n" << app.help();
    return kUsageError;
  }

  const OutputFormat fmt = *render::parse_format(o.format);
  const bool uses_tables = chosen == "invariants" || chosen == "conjecture" ||
                           (chosen == "classes" && o.with_invariants);
  if (uses_tables) warn_memory(o.n, err);

  const std::string key = cache_key(chosen, o);
  if (!o.no_cache) {
    if (auto hit = store.load(key)) {
      out << hit->output;
      return hit->exit_code;
    }
  }
  try {
    const Outcome result = handler(o, fmt);
    if (!o.no_cache) store.store(key, {result.exit_code, result.output});
    out << result.output;
    return result.exit_code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace rsbf::cli
