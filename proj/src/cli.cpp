#include "rrc/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrc/error.hpp"
#include "rrc/harness.hpp"
#include "rrc/parallel.hpp"

namespace rrc {

namespace {

struct RunConfig {
  std::string command;
  int order = 100;
  std::string which = "first";
  int k = 1;
  int i = 2;
  std::optional<int> rows;
  std::optional<int> n_max;
  int degree_cap = 8;
  int denominator_degree = -1;
  int numerator_degree = -1;
  double margin = 0.2;
  bool allow_repeats = false;
  bool json = false;
  bool mutate = false;
  std::string out_file;
  int jobs = 0;
};

void add_common(CLI::App* sub, RunConfig& cfg, bool with_order) {
  if (with_order) sub->add_option("--order", cfg.order, "truncation order")->check(CLI::Range(0, 2000));
  sub->add_flag("--json", cfg.json, "print the report as JSON");
  sub->add_option("--out", cfg.out_file, "also write the JSON report to FILE");
  sub->add_option("--jobs", cfg.jobs, "worker threads (0: all cores)")->check(CLI::Range(0, 1024));
  sub->add_flag("--mutate", cfg.mutate, "run the deliberately broken variant (negative control)");
}

void add_k_i(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "modulus parameter (modulus 2k+3)")->check(CLI::Range(1, 20));
  sub->add_option("--i", cfg.i, "deleted residue, 1 <= i <= 2k+2")->check(CLI::Range(1, 42));
}

void add_n_max(CLI::App* sub, RunConfig& cfg, int lo, int hi) {
  sub->add_option("--n-max", cfg.n_max, "largest n checked")->check(CLI::Range(lo, hi));
}

int exit_code(const std::vector<IdentityReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    inconclusive = inconclusive || r.status == Status::Inconclusive;
  }
  return inconclusive ? 3 : 0;
}

std::vector<std::function<IdentityReport()>> suite(int order, int jobs_inner) {
  const CheckOptions opt{false, jobs_inner};
  std::vector<std::function<IdentityReport()>> checks;
  checks.emplace_back([=] { return verify_rr(RrWhich::First, order, opt); });
  checks.emplace_back([=] { return verify_rr(RrWhich::Second, order, opt); });
  checks.emplace_back([=] { return verify_rr_sum_rewrite(order, opt); });
  checks.emplace_back([=] { return verify_macmahon(100, opt); });
  for (int i : {2, 1}) {
    checks.emplace_back([=] {
      auto r = verify_cauchy_restricted(modulus_x_alphabet(1), modulus_y_alphabet(1, i), order, 2, opt);
      r.params["k"] = 1;
      r.params["i"] = i;
      return r;
    });
  }
  checks.emplace_back([=] { return verify_table1(opt); });
  checks.emplace_back([=] { return verify_table2(opt); });
  checks.emplace_back([=] { return verify_proposition_rsk(40, opt); });
  checks.emplace_back([=] { return verify_xyrr(order, 8, opt); });
  checks.emplace_back([=] { return verify_finite_identity(30, opt); });
  for (int k = 1; k <= 4; ++k) {
    for (int i = 1; i <= 2 * k + 2; ++i) checks.emplace_back([=] { return verify_genthm(k, i, order, opt); });
  }
  for (int rows : {1, 2}) {
    checks.emplace_back([=] {
      SpeculationConfig cfg;
      cfg.k = 1;
      cfg.i = 2;
      cfg.rows = rows;
      cfg.order = std::max(order, 30);
      cfg.jobs = jobs_inner;
      return probe_speculation(cfg);
    });
  }
  checks.emplace_back([=] { return verify_borwein(12, order, opt); });
  return checks;
}

// Range checks that depend on more than one flag.
void check_k_i(const RunConfig& c) {
  const int top = 2 * c.k + 2;
  if (c.i < 1 || c.i > top) {
    throw Error(ErrorKind::InvalidParams,
                "--i must lie in 1.." + std::to_string(top) + " for --k " + std::to_string(c.k));
  }
}

IdentityReport dispatch(const RunConfig& c) {
  const CheckOptions opt{c.mutate, c.jobs};
  if (c.command == "cauchy" || c.command == "genthm" || c.command == "speculation") check_k_i(c);
  if (c.command == "rr") {
    if (c.which != "first" && c.which != "second") {
      throw Error(ErrorKind::InvalidParams, "--which must be first or second");
    }
    return verify_rr(c.which == "first" ? RrWhich::First : RrWhich::Second, c.order, opt);
  }
  if (c.command == "rr-rewrite") return verify_rr_sum_rewrite(c.order, opt);
  if (c.command == "cauchy") {
    const int rows = c.rows.value_or(2 * c.k);
    if (rows < 2 * c.k) {
      throw Error(ErrorKind::InvalidParams,
                  "--rows must be at least 2k = " + std::to_string(2 * c.k) + " for the full product");
    }
    auto r = verify_cauchy_restricted(modulus_x_alphabet(c.k), modulus_y_alphabet(c.k, c.i), c.order, rows, opt);
    r.params["k"] = c.k;
    r.params["i"] = c.i;
    return r;
  }
  if (c.command == "table1") return verify_table1(opt);
  if (c.command == "table2") return verify_table2(opt);
  if (c.command == "rsk") return verify_proposition_rsk(c.n_max.value_or(40), opt);
  if (c.command == "xyrr") return verify_xyrr(c.order, c.degree_cap, opt);
  if (c.command == "finite") return verify_finite_identity(c.n_max.value_or(30), opt);
  if (c.command == "genthm") return verify_genthm(c.k, c.i, c.order, opt);
  if (c.command == "borwein") return verify_borwein(c.n_max.value_or(12), c.order, opt);
  if (c.command == "macmahon") return verify_macmahon(c.n_max.value_or(100), opt);
  if (c.command == "speculation") {
    if (c.rows && *c.rows > 2 * c.k) {
      throw Error(ErrorKind::InvalidParams, "--rows must lie in 1.." + std::to_string(2 * c.k) + " for --k " +
                                                std::to_string(c.k));
    }
    SpeculationConfig s;
    s.k = c.k;
    s.i = c.i;
    s.rows = c.rows.value_or(1);
    s.order = c.order;
    s.denominator_degree = c.denominator_degree;
    s.numerator_degree = c.numerator_degree;
    s.margin_fraction = c.margin;
    s.allow_repeats = c.allow_repeats;
    s.jobs = c.jobs;
    return probe_speculation(s);
  }
  throw Error(ErrorKind::InvalidParams, "unknown command " + c.command);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact q-series checks of partition identities via Schur function specializations"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run one identity check");
  verify->require_subcommand(1);
  auto check = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = verify->add_subcommand(name, help);
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
  };

  CLI::App* rr = check("rr", "both sides of a Rogers-Ramanujan identity");
  add_common(rr, cfg, true);
  rr->add_option("--which", cfg.which, "first or second")->check(CLI::IsMember({"first", "second"}));

  add_common(check("rr-rewrite", "termwise q^{n^2}/(q;q)_n = F_n(q)"), cfg, true);

  CLI::App* cauchy = check("cauchy", "row-restricted Cauchy sum against the product side");
  add_common(cauchy, cfg, true);
  add_k_i(cauchy, cfg);
  cauchy->add_option("--rows", cfg.rows, "row bound (default 2k)")->check(CLI::Range(1, 40));

  add_common(check("table1", "(P,Q) classes for the n=1 term"), cfg, false);
  add_common(check("table2", "(P,Q) classes for the n=2 term"), cfg, false);

  CLI::App* rsk = check("rsk", "RSK bijection for parts = +-1 mod 5");
  add_common(rsk, cfg, false);
  add_n_max(rsk, cfg, 0, 200);

  CLI::App* xyrr = check("xyrr", "x,y-weighted identity");
  add_common(xyrr, cfg, true);
  xyrr->add_option("--degree-cap", cfg.degree_cap, "largest total x,y-degree")->check(CLI::Range(0, 100));

  CLI::App* finite = check("finite", "finite Gaussian-binomial identity");
  add_common(finite, cfg, false);
  add_n_max(finite, cfg, 1, 200);

  CLI::App* genthm = check("genthm", "one-row sums as sums of infinite products");
  add_common(genthm, cfg, true);
  add_k_i(genthm, cfg);

  CLI::App* borwein = check("borwein", "dual Cauchy identity and the Borwein product");
  add_common(borwein, cfg, true);
  add_n_max(borwein, cfg, 0, 100);

  CLI::App* macmahon = check("macmahon", "partition equinumerosity");
  add_common(macmahon, cfg, false);
  add_n_max(macmahon, cfg, 0, 400);

  CLI::App* probe = app.add_subcommand("probe", "exploratory probes");
  probe->require_subcommand(1);
  CLI::App* spec = probe->add_subcommand("speculation", "fit row-restricted sums by products of R infinite products");
  spec->callback([&cfg] { cfg.command = "speculation"; });
  add_common(spec, cfg, true);
  add_k_i(spec, cfg);
  spec->add_option("--rows", cfg.rows, "number of rows R, 1 <= R <= 2k")->check(CLI::Range(1, 40));
  spec->add_option("--denominator-degree", cfg.denominator_degree, "D in the trial denominator (q;q)_D")
      ->check(CLI::Range(0, 60));
  spec->add_option("--numerator-degree", cfg.numerator_degree, "numerator degree bound")->check(CLI::Range(0, 2000));
  spec->add_option("--margin", cfg.margin, "withheld fraction of the order range")->check(CLI::Range(0.01, 0.9));
  spec->add_flag("--allow-repeats", cfg.allow_repeats, "allow a residue to repeat within one product");

  CLI::App* all = app.add_subcommand("all", "run the full suite");
  all->callback([&cfg] { cfg.command = "all"; });
  add_common(all, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::vector<IdentityReport> reports;
  try {
    if (cfg.command == "all") {
      const auto checks = suite(cfg.order, 1);
      reports = parallel_map(checks.size(), cfg.jobs, [&](std::size_t n) { return checks[n](); });
    } else {
      reports.push_back(dispatch(cfg));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidParams) throw;
    err << "error: " << e.what() << "\n";
    return 2;
  }

  nlohmann::ordered_json doc;
  if (cfg.command == "all") {
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    int pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : reports) {
      pass += r.status == Status::Pass;
      fail += r.status == Status::Fail;
      inconclusive += r.status == Status::Inconclusive;
    }
    doc["summary"] = {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}};
    if (cfg.json) {
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& r : reports) out << to_text(r);
      out << "summary: " << pass << " pass, " << fail << " fail, " << inconclusive << " inconclusive\n";
    }
  } else {
    doc = to_json(reports.front());
    if (cfg.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << to_text(reports.front());
    }
  }
  if (!cfg.out_file.empty()) {
    std::ofstream file(cfg.out_file);
    if (!file) {
      err << "error: cannot write " << cfg.out_file << "\n";
      return 2;
    }
    file << doc.dump(2) << "\n";
  }
  return exit_code(reports);
}

}  // namespace rrc
