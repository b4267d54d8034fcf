// saxl: subdegrees and Saxl graph valencies of transitive permutation groups.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saxl/catalog.hpp"
#include "saxl/closed_forms.hpp"
#include "saxl/conjugacy.hpp"
#include "saxl/delta_engine.hpp"
#include "saxl/group_file.hpp"
#include "saxl/saxl_graph.hpp"
#include "saxl/suborbits.hpp"
#include "saxl/verify.hpp"

using namespace saxl;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

// Raised for bad input that CLI11 cannot see, e.g. an unknown entry name.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string subdegree_line(const SubdegreeReport &r) {
  std::string s;
  for (const auto &e : r.entries)
    s += (s.empty() ? "" : " ") + to_string(e.length) + "x" + to_string(e.multiplicity);
  return s;
}

void print_report(const SubdegreeReport &r) {
  std::cout << r.group_name << ": |G| = " << r.order_G << ", |H| = " << r.order_H << ", index " << r.index << "\n"
            << "method: " << method_name(r.method) << "\n"
            << "subdegrees (length x multiplicity): " << subdegree_line(r) << "\n"
            << "valency: " << r.valency << "\n"
            << "checks: sum_rule " << (r.checks.sum_rule ? "ok" : "FAILED") << ", valency_divisibility "
            << (r.checks.valency_divisibility ? "ok" : "FAILED");
  if (r.checks.cross_method_agreement)
    std::cout << ", cross_method_agreement " << (*r.checks.cross_method_agreement ? "true" : "FALSE");
  std::cout << "\n";
}

void print_counts(const char *name, const std::vector<std::string> &labels, const std::vector<BigInt> &v) {
  std::cout << name << ": (";
  for (std::size_t i = 0; i < v.size(); ++i)
    std::cout << (i ? ", " : "") << v[i];
  std::cout << ")\n";
  for (std::size_t i = 0; i < v.size() && i < labels.size(); ++i)
    std::cout << "  " << labels[i] << " " << v[i] << "\n";
}

std::vector<std::string> ordered_labels(const DeltaEngineResult &r) { return r.M.labels; }

CachedResult from_engine(const DeltaEngineResult &e, SubdegreeReport report) {
  return {std::move(report), ordered_labels(e), e.Delta, e.delta};
}

// ---- compute

struct ComputeOptions {
  std::string entry;
  std::string file;
  std::string method = "all";
  std::string out;
  std::string dot;
  std::size_t cap = kDefaultLabelCap;
  bool no_cache = false;
};

int run_compute(const ComputeOptions &o) {
  std::optional<CatalogEntry> entry;
  GroupAction action = [&] {
    if (!o.file.empty())
      return load_group_file(o.file, o.cap);
    entry = find_entry(o.entry);
    if (!entry)
      throw UsageError("unknown catalog entry '" + o.entry + "' (see 'saxl catalog list')");
    return entry->build(o.cap);
  }();
  const std::string &name = action.name;
  const PermGroup &G = action.G;
  const ActionSpace &space = action.space;
  const Subgroup &H = action.H;

  std::vector<std::string> failures;
  if (entry)
    failures = check_expected(*entry, action);

  const ReportCache cache(ReportCache::default_dir());
  const bool use_cache = entry && !o.no_cache;
  std::optional<CachedResult> result;
  if (use_cache)
    result = cache.load(entry->name, o.method);

  const auto start = std::chrono::steady_clock::now();
  bool fresh = false;
  if (!result) {
    fresh = true;
    if (o.method == "bruteforce") {
      result = CachedResult{suborbits_bruteforce(space, G, H, name), {}, {}, {}};
    } else if (o.method == "delta") {
      if (!is_primitive(space, G))
        throw UsageError(name + " is imprimitive on this action; the delta engine needs a primitive action");
      DeltaEngineResult e = run_delta_engine(space, G, H, name, o.cap);
      failures.insert(failures.end(), e.inconsistencies.begin(), e.inconsistencies.end());
      result = from_engine(e, e.report);
    } else {
      CrossValidation cv = cross_validate(space, G, H, name, o.cap);
      if (cv.engine) {
        failures.insert(failures.end(), cv.engine->inconsistencies.begin(), cv.engine->inconsistencies.end());
        result = from_engine(*cv.engine, cv.combined);
      } else {
        std::cout << "note: imprimitive action, brute force only\n";
        result = CachedResult{cv.combined, {}, {}, {}};
      }
    }
    if (use_cache && failures.empty())
      cache.store(entry->name, o.method, *result);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const SubdegreeReport &r = result->report;
  if (entry) {
    auto more = check_expected(*entry, action, &r);
    for (auto &m : more)
      if (m.find("valency") != std::string::npos)
        failures.push_back(std::move(m));
  }
  print_report(r);
  if (!result->Delta.empty()) {
    print_counts("Delta", result->labels, result->Delta);
    print_counts("delta", result->labels, result->delta);
  }
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << secs;
  std::cout << (fresh ? "time: " + t.str() + " s" : "cached: " + cache.path_for(entry->name, o.method).string())
            << "\n";

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    f << report_to_json(r) << "\n";
    if (!f)
      throw Error("cannot write " + o.out);
  }
  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    write_dot(saxl_graph(space, G, H), f);
    if (!f)
      throw Error("cannot write " + o.dot);
  }
  if (!r.passed())
    failures.push_back("report checks failed");
  for (const auto &f : failures)
    std::cerr << "check failed: " << f << "\n";
  return failures.empty() ? kOk : kCheckFailed;
}

// ---- formula

int print_formula_report(const BigInt &valency, const std::optional<SubdegreeReport> &r) {
  std::cout << valency << "\n";
  if (r)
    std::cout << "subdegrees (length x multiplicity): " << subdegree_line(*r) << "\n";
  return !r || r->passed() ? kOk : kCheckFailed;
}

Sign parse_sign(const std::string &s) {
  if (s == "+" || s == "plus")
    return Sign::kPlus;
  if (s == "-" || s == "minus")
    return Sign::kMinus;
  throw UsageError("--eps must be + or -");
}

// "2=12,5=40" -> {2: 12, 5: 40}
std::map<std::uint64_t, BigInt> parse_norm(const std::vector<std::string> &items) {
  std::map<std::uint64_t, BigInt> out;
  for (const auto &item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("--norm expects s=value, got '" + item + "'");
    try {
      out[std::stoull(item.substr(0, eq))] = parse_bigint(item.substr(eq + 1));
    } catch (const std::exception &) {
      throw UsageError("--norm expects s=value, got '" + item + "'");
    }
  }
  return out;
}

// ---- verify

int run_verify(const std::string &suite, std::size_t cap) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto &s : suites) {
    std::cout << "suite " << s << "\n";
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(s, cap, [](const CheckLine &c) {
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.label;
      if (!c.detail.empty())
        std::cout << ": " << c.detail;
      std::cout << std::endl;
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "suite " << s << ": " << (r.passed() ? "passed" : "FAILED") << " (" << static_cast<long>(secs * 1000)
              << " ms)\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kCheckFailed;
}

int run_catalog_list() {
  for (const auto &e : catalog()) {
    std::cout << e.name << "  " << e.description;
    for (const char *key : {"order_G", "order_H", "index", "valency"})
      if (auto it = e.expected.find(key); it != e.expected.end())
        std::cout << "  " << key << "=" << it->second;
    if (!e.primitive)
      std::cout << "  (imprimitive)";
    std::cout << "\n";
  }
  std::cout << "parametric: psl2_<q>_<split|nonsplit>, pgl2_<q>_<split|nonsplit>, sym_<p>, alt_<p>, "
               "singer_<r>_<q>[_socle]\n";
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subdegrees and Saxl graph valencies of transitive permutation groups"};
  app.require_subcommand(1);
  int rc = kOk;

  ComputeOptions co;
  auto *compute = app.add_subcommand("compute", "Compute subdegrees of a catalog entry or group file");
  auto *entry_opt = compute->add_option("--entry", co.entry, "Catalog entry name");
  auto *file_opt = compute->add_option("--file", co.file, "Group file (JSON)")->check(CLI::ExistingFile);
  entry_opt->excludes(file_opt);
  compute->add_option("--method", co.method, "bruteforce, delta or all")
      ->check(CLI::IsMember({"bruteforce", "delta", "all"}))
      ->capture_default_str();
  compute->add_option("--out", co.out, "Write the report as JSON");
  compute->add_option("--export-dot", co.dot, "Write the Saxl graph in DOT format");
  compute->add_option("--label-cap", co.cap, "Maximum number of labels in an orbit")->capture_default_str();
  compute->add_flag("--no-cache", co.no_cache, "Neither read nor write the result cache");
  compute->callback([&] {
    if (co.entry.empty() && co.file.empty())
      throw CLI::RequiredError("--entry or --file");
    rc = run_compute(co);
  });

  std::uint64_t p = 0, q = 0, r = 0, k = 0, l = 0;
  std::string case_name = "split", eps = "+", index_text, family;
  bool socle = false, as_report = false;
  std::vector<std::string> norm;
  auto *formula = app.add_subcommand("formula", "Evaluate a closed-form valency; the first line is the valency");
  formula->require_subcommand(1);
  auto *f_sym = formula->add_subcommand("sym", "S_p on the cosets of AGL_1(p)");
  auto *f_alt = formula->add_subcommand("alt", "A_p on the cosets of AGL_1(p) n A_p");
  for (auto *c : {f_sym, f_alt})
    c->add_option("--p", p, "Prime p > 5")->required();
  auto *f_psl2 = formula->add_subcommand("psl2", "PSL_2(q) on the cosets of a dihedral torus normalizer");
  auto *f_pgl2 = formula->add_subcommand("pgl2", "PGL_2(q) on the cosets of a dihedral torus normalizer");
  for (auto *c : {f_psl2, f_pgl2}) {
    c->add_option("--q", q, "Prime power q")->required();
    c->add_option("--case", case_name, "split or nonsplit")
        ->check(CLI::IsMember({"split", "nonsplit"}))
        ->capture_default_str();
  }
  auto *f_lr = formula->add_subcommand("lreps", "PGL_r^e(q) on the cosets of the Singer normalizer");
  f_lr->add_option("--r", r, "Odd prime r")->required();
  f_lr->add_option("--q", q, "Prime power q")->required();
  f_lr->add_option("--eps", eps, "+ (linear) or - (unitary)")->capture_default_str();
  f_lr->add_flag("--socle", socle, "Use the socle L_r^e(q) instead");
  auto *f_frob = formula->add_subcommand("frobenius", "Stabiliser Z_k:Z_l Frobenius, from normalizer orders");
  f_frob->add_option("--k", k, "Order of the kernel")->required();
  f_frob->add_option("--l", l, "Order of the complement")->required();
  f_frob->add_option("--index", index_text, "|G:H|")->required();
  f_frob->add_option("--norm", norm, "s=|N_G(C_s)| for each divisor s > 1 of l")->delimiter(',')->required();
  f_frob->add_flag("--report", as_report, "Print the report as JSON after the valency");

  f_sym->callback([&] {
    rc = print_formula_report(val_sym_p(p), sym_alt_report(SymAlt::kSym, p));
  });
  f_alt->callback([&] {
    if (auto w = val_alt_p_warning(p))
      std::cerr << "warning: " << *w << "\n";
    rc = print_formula_report(val_alt_p(p), sym_alt_report(SymAlt::kAlt, p));
  });
  f_psl2->callback([&] { rc = print_formula_report(val_psl2(q, parse_torus(case_name)), std::nullopt); });
  f_pgl2->callback([&] { rc = print_formula_report(val_pgl2(q, parse_torus(case_name)), std::nullopt); });
  f_lr->callback([&] {
    const SubdegreeReport rep = lr_eps_subdegrees(r, q, parse_sign(eps), socle ? LrVariant::kSocle : LrVariant::kFull);
    rc = print_formula_report(rep.valency, rep);
  });
  f_frob->callback([&] {
    BigInt index;
    try {
      index = parse_bigint(index_text);
    } catch (const std::exception &) {
      throw UsageError("--index must be a positive integer");
    }
    const FrobeniusInput in{k, l, parse_norm(norm), index};
    const SubdegreeReport rep = frobenius_report(in, "G");
    rc = print_formula_report(rep.valency, rep);
    if (as_report)
      std::cout << report_to_json(rep) << "\n";
  });

  auto *classify = app.add_subcommand("classify", "Match a prime-power stabiliser family against the classification");
  classify->add_option("--family", family,
                       "psl2-split, psl2-nonsplit, pgl2-split, pgl2-nonsplit, pgl2-9, m10, pgammal2-9 or lreps")
      ->required();
  classify->add_option("--q", q, "Prime power q");
  classify->add_option("--r", r, "Odd prime r (lreps)");
  classify->add_option("--eps", eps, "+ or - (lreps)")->capture_default_str();
  classify->callback([&] {
    auto fam = parse_family(family);
    if (!fam)
      throw UsageError("unknown family '" + family + "'");
    const ClassificationResult res = classify_prime_power_stabiliser({*fam, q, r, parse_sign(eps)});
    std::cout << (res.row_accepted ? "accepted: " : "rejected: ") << res.row << "\n";
    if (res.valency)
      std::cout << "valency: " << *res.valency << "\n"
                << "prime power: " << (res.prime_power_valency ? "yes" : "no") << "\n";
  });

  std::string suite;
  std::size_t verify_cap = kDefaultLabelCap;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--label-cap", verify_cap, "Maximum number of labels in an orbit")->capture_default_str();
  verify->callback([&] { rc = run_verify(suite, verify_cap); });

  auto *cat = app.add_subcommand("catalog", "Inspect the catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List the named entries")->callback([&] { rc = run_catalog_list(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << " (raise it with --label-cap)\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return rc;
}
