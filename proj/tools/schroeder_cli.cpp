// Command line front end: enumeration, classification, factorization,
// rank reports, counting tables and the verification suites, with
// deterministic text/csv/json output. Timings go to stderr so that two
// runs with identical flags produce byte-identical stdout.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schroeder/block_form.hpp"
#include "schroeder/checks.hpp"
#include "schroeder/combinatorics.hpp"
#include "schroeder/element_store.hpp"
#include "schroeder/factorize.hpp"
#include "schroeder/green.hpp"
#include "schroeder/monoid_spec.hpp"
#include "schroeder/rank.hpp"
#include "schroeder/text_format.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace schroeder;

struct CommonOptions {
  std::string format = "text";
  unsigned threads = 0;
  int max_n = 7;
  std::size_t max_elements = 500000;

  EnumerationLimits limits() const { return {max_n, max_elements}; }
};

void add_common(CLI::App* cmd, CommonOptions& options,
                bool allow_csv = false) {
  const std::string formats = allow_csv ? "json|csv|text" : "json|text";
  cmd->add_option("--format", options.format, "Output format (" + formats + ")")
      ->check(CLI::IsMember(allow_csv
                                ? std::vector<std::string>{"json", "csv", "text"}
                                : std::vector<std::string>{"json", "text"}));
  cmd->add_option("--threads", options.threads,
                  "Worker threads (0 = hardware concurrency)");
  cmd->add_option("--max-n", options.max_n,
                  "Whole-monoid enumeration ceiling");
  cmd->add_option("--max-elements", options.max_elements,
                  "Element count ceiling");
}

MonoidSpec make_spec(const std::string& family_token, int n,
                     std::optional<int> p) {
  const Family family = MonoidSpec::parse_family(family_token);
  MonoidSpec spec{family, n, p.value_or(0)};
  if (spec.uses_height_bound() && !p.has_value()) {
    throw std::invalid_argument("--p is required for family '" +
                                family_token + "'");
  }
  spec.validate();
  return spec;
}

json spec_json(const MonoidSpec& spec) {
  json out;
  out["family"] = spec.family_token();
  out["n"] = spec.n;
  if (spec.uses_height_bound()) {
    out["p"] = spec.p;
  }
  if (spec.is_rees()) {
    out["zero"] = true;
  }
  return out;
}

json element_json(const PartialMap& map) {
  const KernelClasses classes = kernel_classes(map);
  json out;
  out["n"] = map.chain_size();
  out["blocks"] = classes.blocks;
  out["images"] = classes.images;
  return out;
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(const std::string& family, int n, std::optional<int> p,
                  const CommonOptions& options) {
  const MonoidSpec spec = make_spec(family, n, p);
  const ElementStore store = ElementStore::enumerate(spec, options.limits());
  if (options.format == "json") {
    json out;
    out["spec"] = spec_json(spec);
    out["count"] = store.size();
    json elements = json::array();
    for (std::size_t i = 0; i < store.map_count(); ++i) {
      elements.push_back(element_json(store.map_at(static_cast<ElementIndex>(i))));
    }
    out["elements"] = std::move(elements);
    std::cout << out.dump(2) << "\n";
  } else if (options.format == "csv") {
    for (std::size_t i = 0; i < store.size(); ++i) {
      std::cout << store.element_text(static_cast<ElementIndex>(i)) << "\n";
    }
  } else {
    std::cout << spec.to_string() << ": " << store.size() << " elements\n";
    for (std::size_t i = 0; i < store.size(); ++i) {
      std::cout << "  " << store.element_text(static_cast<ElementIndex>(i))
                << "\n";
    }
  }
  return 0;
}

// ---- classify --------------------------------------------------------------

int run_classify(const std::string& family, int n, std::optional<int> p,
                 const std::string& relation_token, bool eggbox,
                 const CommonOptions& options) {
  const MonoidSpec spec = make_spec(family, n, p);
  const Relation relation = parse_relation(relation_token);
  const ElementStore store = ElementStore::enumerate(spec, options.limits());

  Classification cls;
  if (relation == Relation::JStar) {
    cls = j_star_classes(store);
  } else if (is_starred(relation)) {
    cls = starred_classes(store, relation);
  } else {
    cls = green_classes(store, relation);
  }

  std::string eggbox_text;
  if (eggbox) {
    if (is_starred(relation)) {
      eggbox_text = eggbox_render(store,
                                  starred_classes(store, Relation::LStar),
                                  starred_classes(store, Relation::RStar));
    } else {
      eggbox_text = eggbox_render(store, green_classes(store, Relation::L),
                                  green_classes(store, Relation::R));
    }
  }

  if (options.format == "json") {
    json out;
    out["spec"] = spec_json(spec);
    out["relation"] = relation_name(relation);
    json classes = json::array();
    for (const auto& members : cls.classes) {
      json one = json::array();
      for (ElementIndex i : members) {
        one.push_back(store.element_text(i));
      }
      classes.push_back(std::move(one));
    }
    out["classes"] = std::move(classes);
    if (eggbox) {
      out["eggbox"] = eggbox_text;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << spec.to_string() << ": " << cls.count() << " "
              << relation_name(relation) << "-classes\n";
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      std::cout << "  [" << c + 1 << "]";
      for (ElementIndex i : cls.classes[c]) {
        std::cout << " " << store.element_text(i);
      }
      std::cout << "\n";
    }
    if (eggbox) {
      std::cout << eggbox_text;
    }
  }
  return 0;
}

// ---- factorize --------------------------------------------------------------

int run_factorize(int n, const std::string& map_text,
                  std::optional<int> target_height,
                  const CommonOptions& options) {
  // Single-element operations allow larger chains than whole-monoid
  // enumeration, but the height-descent fallback still walks all domains.
  const int cap = std::max(options.max_n, 12);
  if (n > cap) {
    throw std::invalid_argument("factorize: chain size " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(cap) +
                                " (raise --max-n)");
  }
  const PartialMap alpha = parse_element_text(n, map_text);
  const Factorization f =
      target_height ? decompose_to_idempotents(alpha, *target_height)
                    : idempotent_factorization(alpha);
  const bool verified = f.product() == alpha;

  if (options.format == "json") {
    json out;
    out["target"] = element_json(alpha);
    json factors = json::array();
    for (const PartialMap& factor : f.factors) {
      factors.push_back(element_json(factor));
    }
    out["factors"] = std::move(factors);
    out["certificate"] = certificate_name(f.certificate);
    out["case"] = f.case_tag.empty() ? json(nullptr) : json(f.case_tag);
    out["skippable"] = f.skippable;
    out["verified"] = verified;
    if (!f.note.empty()) {
      out["note"] = f.note;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "target      " << to_text(alpha) << "\n";
    std::cout << "certificate " << certificate_name(f.certificate) << "\n";
    if (!f.case_tag.empty()) {
      std::cout << "case        " << f.case_tag << "\n";
    }
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      std::cout << "factor " << i + 1 << "    " << to_text(f.factors[i])
                << (f.skippable[i] ? "  (skippable)" : "") << "\n";
    }
    std::cout << "verified    " << (verified ? "true" : "false") << "\n";
    if (!f.note.empty()) {
      std::cout << "note        " << f.note << "\n";
    }
  }
  return verified ? 0 : 1;
}

// ---- rank ---------------------------------------------------------------------

int run_rank(const std::string& family, int n, std::optional<int> p,
             bool brute_force, const CommonOptions& options) {
  const MonoidSpec spec = make_spec(family, n, p);

  if (spec.family == Family::SSPrime) {
    // No closed form is known here; report the searched value only.
    const std::uint64_t brute = brute_min_rank(spec, {}, options.limits());
    if (options.format == "json") {
      json out;
      out["spec"] = spec_json(spec);
      out["closed_form"] = nullptr;
      out["brute_force_rank"] = brute;
      out["note"] = "no closed form: value from exhaustive search";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << spec.to_string() << ": rank " << brute
                << " (exhaustive search; no closed form)\n";
    }
    return 0;
  }

  RankReport report = verify_rank(spec, options.limits());
  if (brute_force) {
    report.brute_force_rank = brute_min_rank(spec, {}, options.limits());
  }

  if (options.format == "json") {
    json out;
    out["spec"] = spec_json(spec);
    out["closed_form"] = *report.closed_form;
    out["generating_set"] = report.generating_set;
    out["verified_generates"] = report.verified_generates.has_value()
                                    ? json(*report.verified_generates)
                                    : json(nullptr);
    out["lower_bound_certificate"] = report.lower_bound_certificate;
    out["brute_force_rank"] = report.brute_force_rank.has_value()
                                  ? json(*report.brute_force_rank)
                                  : json(nullptr);
    out["idempotents_only"] = report.idempotents_only.has_value()
                                  ? json(*report.idempotents_only)
                                  : json(nullptr);
    out["boundary_case"] = report.boundary_case;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << spec.to_string() << ": rank " << *report.closed_form;
    if (report.boundary_case) {
      std::cout << " (boundary parameters, outside the summation formulas)";
    }
    std::cout << "\n";
    if (report.verified_generates) {
      std::cout << "verified: " << (*report.verified_generates ? "yes" : "NO")
                << "; idempotents only: "
                << (report.idempotents_only.value_or(false) ? "yes" : "NO")
                << "\n";
      std::cout << "generators (" << report.generating_set.size() << "):";
      for (const std::string& g : report.generating_set) {
        std::cout << " " << g;
      }
      std::cout << "\n";
    }
    std::cout << "certificate: " << report.lower_bound_certificate << "\n";
    if (report.brute_force_rank) {
      std::cout << "brute-force rank: " << *report.brute_force_rank << "\n";
    }
  }
  const bool consistent =
      report.verified_generates.value_or(true) &&
      (!report.brute_force_rank ||
       *report.brute_force_rank == *report.closed_form);
  return consistent ? 0 : 1;
}

// ---- count ---------------------------------------------------------------------

struct CountRow {
  int n;
  std::string family;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> formula;
  std::optional<bool> match;
};

void emit_count_rows(const std::vector<CountRow>& rows,
                     const CommonOptions& options) {
  if (options.format == "json") {
    json out = json::array();
    for (const CountRow& row : rows) {
      json j;
      j["n"] = row.n;
      j["family"] = row.family;
      j["count"] = row.count ? json(*row.count) : json(nullptr);
      j["formula"] = row.formula ? json(*row.formula) : json(nullptr);
      j["match"] = row.match ? json(*row.match) : json(nullptr);
      out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  const auto cell = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  const auto match_cell = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "yes" : "no") : std::string("-");
  };
  if (options.format == "csv") {
    std::cout << "n,family,count,formula,match\n";
    for (const CountRow& row : rows) {
      std::cout << row.n << "," << row.family << "," << cell(row.count) << ","
                << cell(row.formula) << "," << match_cell(row.match) << "\n";
    }
    return;
  }
  std::printf("%4s  %-16s  %12s  %12s  %s\n", "n", "family", "count",
              "formula", "match");
  for (const CountRow& row : rows) {
    std::printf("%4d  %-16s  %12s  %12s  %s\n", row.n, row.family.c_str(),
                cell(row.count).c_str(), cell(row.formula).c_str(),
                match_cell(row.match).c_str());
  }
}

int run_count(const std::string& what, int n, std::optional<int> p,
              const CommonOptions& options) {
  std::vector<CountRow> rows;
  const EnumerationLimits limits = options.limits();
  const auto enumerable = [&](int chain) { return chain <= limits.max_n; };

  const auto order_row = [&](const MonoidSpec& spec,
                             std::optional<std::uint64_t> formula) {
    CountRow row{spec.n, spec.family_token(), std::nullopt, formula,
                 std::nullopt};
    if (spec.uses_height_bound()) {
      row.family += "(p=" + std::to_string(spec.p) + ")";
    }
    if (enumerable(spec.n)) {
      row.count = ElementStore::enumerate(spec, limits).size();
      if (formula) {
        row.match = *row.count == *formula;
      }
    }
    rows.push_back(row);
  };

  if (what == "order") {
    for (int chain = 0; chain <= n; ++chain) {
      order_row(MonoidSpec::ls(chain),
                schroeder_number(SchroederKind::Large, chain));
      if (chain >= 1) {
        const std::uint64_t small =
            schroeder_number(SchroederKind::Small, chain);
        order_row(MonoidSpec::ss(chain), small);
        order_row(MonoidSpec::ss_prime(chain), small);
        if (p && *p <= chain) {
          order_row(MonoidSpec::k(chain, *p), std::nullopt);
          order_row(MonoidSpec::m(chain, *p), std::nullopt);
          order_row(MonoidSpec::rls(chain, *p), std::nullopt);
          order_row(MonoidSpec::rss(chain, *p), std::nullopt);
        }
      }
    }
  } else if (what == "idempotents") {
    for (int chain = 1; chain <= n; ++chain) {
      const IdempotentCountReport report =
          idempotent_count_formulas(chain, limits);
      CountRow ls_row{chain, "ls", std::nullopt, report.ls_total, std::nullopt};
      CountRow ss_row{chain, "ss", std::nullopt, report.ss_total, std::nullopt};
      if (p) {
        if (*p > chain) continue;
        ls_row.family += "(p=" + std::to_string(*p) + ")";
        ss_row.family += "(p=" + std::to_string(*p) + ")";
        ls_row.formula = report.ls_by_height[static_cast<std::size_t>(*p)];
        ss_row.formula = report.ss_by_height[static_cast<std::size_t>(*p)];
      }
      if (enumerable(chain)) {
        const ElementStore ls =
            ElementStore::enumerate(MonoidSpec::ls(chain), limits);
        const ElementStore ss =
            ElementStore::enumerate(MonoidSpec::ss(chain), limits);
        const auto count_idempotents = [&](const ElementStore& store) {
          std::uint64_t total = 0;
          for (ElementIndex e : store.idempotent_indices()) {
            if (!p || store.map_at(e).height() == *p) {
              ++total;
            }
          }
          return total;
        };
        ls_row.count = count_idempotents(ls);
        ss_row.count = count_idempotents(ss);
        ls_row.match = *ls_row.count == *ls_row.formula;
        ss_row.match = *ss_row.count == *ss_row.formula;
      }
      rows.push_back(ls_row);
      rows.push_back(ss_row);
    }
  } else if (what == "rstar" || what == "lstar") {
    const bool rstar = what == "rstar";
    for (int chain = 1; chain <= n; ++chain) {
      if (!enumerable(chain)) continue;
      const ElementStore ls =
          ElementStore::enumerate(MonoidSpec::ls(chain), limits);
      const ElementStore ss =
          ElementStore::enumerate(MonoidSpec::ss(chain), limits);
      const auto ls_counts = class_count_by_height(
          ls, starred_classes(ls, rstar ? Relation::RStar : Relation::LStar));
      const auto ss_counts = class_count_by_height(
          ss, starred_classes(ss, rstar ? Relation::RStar : Relation::LStar));
      for (int height = p.value_or(0); height <= (p ? *p : chain); ++height) {
        const unsigned uc = static_cast<unsigned>(chain);
        const unsigned uh = static_cast<unsigned>(height);
        const auto lookup = [&](const std::map<int, std::size_t>& counts) {
          const auto it = counts.find(height);
          return it == counts.end() ? std::uint64_t{0} : it->second;
        };
        CountRow ls_row{chain, "ls(p=" + std::to_string(height) + ")",
                        lookup(ls_counts),
                        rstar ? idempotent_count_ls_slice(uc, uh)
                              : binomial(uc, uh),
                        std::nullopt};
        ls_row.match = *ls_row.count == *ls_row.formula;
        rows.push_back(ls_row);
        if (height >= 1) {
          CountRow ss_row{chain, "ss(p=" + std::to_string(height) + ")",
                          lookup(ss_counts),
                          rstar ? idempotent_count_ss_slice(uc, uh)
                                : binomial(uc - 1, uh - 1),
                          std::nullopt};
          ss_row.match = *ss_row.count == *ss_row.formula;
          rows.push_back(ss_row);
        }
      }
    }
  } else if (what == "schroeder") {
    for (int chain = 0; chain <= n; ++chain) {
      CountRow large{chain, "schroeder-large", std::nullopt,
                     schroeder_number(SchroederKind::Large, chain),
                     std::nullopt};
      if (enumerable(chain)) {
        large.count =
            ElementStore::enumerate(MonoidSpec::ls(chain), limits).size();
        large.match = *large.count == *large.formula;
      }
      rows.push_back(large);
      if (chain >= 1) {
        CountRow small{chain, "schroeder-small", std::nullopt,
                       schroeder_number(SchroederKind::Small, chain),
                       std::nullopt};
        if (enumerable(chain)) {
          small.count =
              ElementStore::enumerate(MonoidSpec::ss(chain), limits).size();
          small.match = *small.count == *small.formula;
        }
        rows.push_back(small);
      }
    }
  } else {
    throw std::invalid_argument(
        "unknown --what '" + what +
        "' (expected order|idempotents|rstar|lstar|schroeder)");
  }
  emit_count_rows(rows, options);
  return 0;
}

// ---- verify ---------------------------------------------------------------------

int run_verify(const std::string& suite, int max_n, std::uint64_t seed,
               const CommonOptions& options) {
  CheckOptions check_options;
  check_options.max_n = max_n;
  check_options.threads = options.threads;
  check_options.seed = seed;
  const std::vector<CheckResult> results = run_suite(suite, check_options);

  bool all_pass = true;
  for (const CheckResult& result : results) {
    all_pass &= result.pass;
    std::fprintf(stderr, "%s: %.1f ms\n", result.id.c_str(), result.millis);
  }

  if (options.format == "json") {
    json out;
    out["suite"] = suite;
    out["pass"] = all_pass;
    json entries = json::array();
    for (const CheckResult& result : results) {
      json entry;
      entry["id"] = result.id;
      entry["name"] = result.name;
      entry["pass"] = result.pass;
      entry["detail"] = result.detail;
      entries.push_back(std::move(entry));
    }
    out["results"] = std::move(entries);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CheckResult& result : results) {
      std::printf("%s  %s  %s\n", result.pass ? "PASS" : "FAIL",
                  result.id.c_str(), result.name.c_str());
      if (!result.detail.empty()) {
        std::printf("      %s\n", result.detail.c_str());
      }
    }
    std::printf("%s: %zu/%zu checks passed\n", all_pass ? "OK" : "FAILED",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const CheckResult& r) { return r.pass; })),
                results.size());
    if (!all_pass) {
      json failures = json::array();
      for (const CheckResult& result : results) {
        if (!result.pass) {
          failures.push_back({{"id", result.id}, {"detail", result.detail}});
        }
      }
      std::cout << json{{"failures", failures}}.dump() << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the large and small Schroeder monoids: "
               "enumeration, Green's and starred Green's relations, "
               "idempotent factorization, ranks"};
  app.require_subcommand(1);

  // enumerate
  std::string en_family;
  int en_n = 0;
  std::optional<int> en_p;
  CommonOptions en_options;
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "List the members of a family");
  enumerate_cmd->add_option("--family", en_family, "ls|ss|ssp|k|m|rls|rss")
      ->required();
  enumerate_cmd->add_option("--n", en_n, "Chain size")->required();
  enumerate_cmd->add_option("--p", en_p, "Height bound (k, m, rls, rss)");
  add_common(enumerate_cmd, en_options, /*allow_csv=*/true);

  // classify
  std::string cl_family, cl_relation;
  int cl_n = 0;
  std::optional<int> cl_p;
  bool cl_eggbox = false;
  CommonOptions cl_options;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Partition a family under a Green's or starred relation");
  classify_cmd->add_option("--family", cl_family, "ls|ss|ssp|k|m|rls|rss")
      ->required();
  classify_cmd->add_option("--n", cl_n, "Chain size")->required();
  classify_cmd->add_option("--p", cl_p, "Height bound (k, m, rls, rss)");
  classify_cmd
      ->add_option("--relation", cl_relation,
                   "l|r|h|d|lstar|rstar|hstar|dstar|jstar")
      ->required();
  classify_cmd->add_flag("--eggbox", cl_eggbox, "Render the eggbox grids");
  add_common(classify_cmd, cl_options);

  // factorize
  int fa_n = 0;
  std::string fa_map;
  std::optional<int> fa_target;
  CommonOptions fa_options;
  CLI::App* factorize_cmd = app.add_subcommand(
      "factorize", "Write a map as a product of idempotents");
  factorize_cmd->add_option("--n", fa_n, "Chain size")->required();
  factorize_cmd
      ->add_option("--map", fa_map, "Element text, e.g. \"1,2->1;3->2\"")
      ->required();
  factorize_cmd->add_option("--target-height", fa_target,
                            "Raise all factors to this height");
  add_common(factorize_cmd, fa_options);

  // rank
  std::string ra_family;
  int ra_n = 0;
  std::optional<int> ra_p;
  bool ra_brute = false;
  CommonOptions ra_options;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Closed-form rank with verification");
  rank_cmd->add_option("--family", ra_family, "ls|ss|ssp|k|m|rls|rss")
      ->required();
  rank_cmd->add_option("--n", ra_n, "Chain size")->required();
  rank_cmd->add_option("--p", ra_p, "Height bound (k, m, rls, rss)");
  rank_cmd->add_flag("--brute-force", ra_brute,
                     "Also run the exhaustive minimum search");
  add_common(rank_cmd, ra_options);

  // count
  std::string co_what;
  int co_n = 0;
  std::optional<int> co_p;
  CommonOptions co_options;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Counting tables against the formulas");
  count_cmd
      ->add_option("--what", co_what, "order|idempotents|rstar|lstar|schroeder")
      ->required();
  count_cmd->add_option("--n", co_n, "Largest chain size")->required();
  count_cmd->add_option("--p", co_p, "Restrict to one height");
  add_common(count_cmd, co_options, /*allow_csv=*/true);

  // verify
  std::string ve_suite = "all";
  int ve_n = 0;
  std::uint64_t ve_seed = 12345;
  CommonOptions ve_options;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", ve_suite,
                         "all|counts|green|starred|factorize|rank")
      ->check(CLI::IsMember(
          std::vector<std::string>{"all", "counts", "green", "starred",
                                   "factorize", "rank"}));
  verify_cmd->add_option(
      "--n", ve_n, "Lower the per-check chain-size ceilings (0 = pinned)");
  verify_cmd->add_option("--seed", ve_seed, "Seed for sampled checks");
  add_common(verify_cmd, ve_options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate_cmd) {
      return run_enumerate(en_family, en_n, en_p, en_options);
    }
    if (*classify_cmd) {
      return run_classify(cl_family, cl_n, cl_p, cl_relation, cl_eggbox,
                          cl_options);
    }
    if (*factorize_cmd) {
      return run_factorize(fa_n, fa_map, fa_target, fa_options);
    }
    if (*rank_cmd) {
      return run_rank(ra_family, ra_n, ra_p, ra_brute, ra_options);
    }
    if (*count_cmd) {
      return run_count(co_what, co_n, co_p, co_options);
    }
    if (*verify_cmd) {
      return run_verify(ve_suite, ve_n, ve_seed, ve_options);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
