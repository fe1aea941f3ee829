// Acceptance runner: one line per criterion, exact checks, pinned budgets.
//
// Usage: twocat_acceptance [--cli PATH] [--fixtures DIR]
// The CLI path enables the end-to-end exit-code checks; without it those
// sub-checks are reported as failures.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twocat/suite.hpp"

using namespace twocat;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double millis, double budget_ms,
            const std::string& detail = "") {
  bool in_budget = millis <= budget_ms;
  bool ok = pass && in_budget;
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
            << static_cast<int>(millis) << " ms, budget " << static_cast<int>(budget_ms)
            << " ms]";
  if (!pass && !detail.empty()) std::cout << "  -- " << detail;
  if (pass && !in_budget) std::cout << "  -- over time budget";
  std::cout << std::endl;
}

void from_check(int number, const CheckResult& r, double budget_ms) {
  report(number, r.name, r.status == CheckStatus::pass, r.millis, budget_ms, r.detail);
}

int run_cli(const std::string& cli, const std::string& args, std::string* output = nullptr) {
  fs::path tmp = fs::temp_directory_path() / "twocat_acceptance_out.txt";
  std::string cmd = cli + " " + args + " > " + tmp.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WEXITSTATUS(rc);
}

} // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string fixtures_dir = "fixtures";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--fixtures") fixtures_dir = argv[i + 1];
  }
  EnumCap cap;

  from_check(1, check_law_oracle_equivalence(0, cap), 5000);
  from_check(2, check_em_universal_property(cap), 5000);
  from_check(3, check_termresolve(cap), 2000);
  from_check(4, check_formaltfae(cap), 5000);
  from_check(5, check_doublemonads(0, cap), 10000);
  from_check(6, check_distributive_suite(cap), 10000);
  from_check(7, check_codensity(cap), 2000);
  from_check(8, check_pushforward(cap), 2000);
  from_check(9, check_span_retrofunctor(cap), 3000);

  // criterion 10: serialization stability, verdict determinism, exit codes
  {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;

    CheckResult ser = check_serialization(cap);
    if (ser.status != CheckStatus::pass) {
      pass = false;
      detail = ser.detail;
    }

    // verdicts of the randomized checks are seed-independent
    if (pass) {
      auto a1 = check_law_oracle_equivalence(1, cap);
      auto a2 = check_law_oracle_equivalence(2, cap);
      if (a1.status != a2.status) {
        pass = false;
        detail = "law-oracle verdict depends on the seed";
      }
    }

    // a tiny cap is reported as skipped-cap, never as pass
    if (pass) {
      EnumCap tiny{50};
      auto capped = check_em_universal_property(tiny);
      if (capped.status != CheckStatus::skipped_cap) {
        pass = false;
        detail = "capped check did not report skipped-cap";
      }
    }

    // end-to-end exit-code contract through the CLI
    if (pass && cli.empty()) {
      pass = false;
      detail = "no --cli given";
    }
    if (pass) {
      fs::path dir = fs::temp_directory_path() / "twocat_acceptance_fixtures";
      fs::remove_all(dir);
      int rc = run_cli(cli, "fixtures --out " + dir.string());
      if (rc != 0) {
        pass = false;
        detail = "fixtures generation failed";
      }
      if (pass) {
        struct Case {
          std::string kind;
          std::string file;
          int expect;
        };
        std::vector<Case> cases;
        for (auto& [name, j] : corpus_documents()) {
          std::string kind = j.at("kind").get<std::string>();
          int expect = name.rfind("good_", 0) == 0 ? 0 : 1;
          if (name == "bad_span") expect = 2;  // schema violation, not a law failure
          cases.push_back({kind, (dir / "corpus" / (name + ".json")).string(), expect});
        }
        for (const auto& c : cases) {
          int rc2 = run_cli(cli, "--fixtures " + dir.string() + " check " + c.kind + " " + c.file);
          if (rc2 != c.expect) {
            pass = false;
            detail = "check " + c.file + " exited " + std::to_string(rc2) + ", expected " +
                     std::to_string(c.expect);
            break;
          }
        }
      }
      if (pass) {
        // input error: malformed document
        fs::path bad = fs::temp_directory_path() / "twocat_acceptance_bad.json";
        std::ofstream(bad) << "{ not json";
        if (run_cli(cli, "check monad " + bad.string()) != 2) {
          pass = false;
          detail = "malformed input did not exit 2";
        }
      }
      if (pass) {
        // construction: codensity of the inclusion emits the closure monad
        std::string out;
        int rc3 = run_cli(cli,
                          "--fixtures " + dir.string() + " construct codensity " +
                              (dir / "fix_incl.json").string(),
                          &out);
        if (rc3 != 0 || out.find("\"kind\": \"monad\"") == std::string::npos) {
          pass = false;
          detail = "construct codensity did not emit a monad document";
        }
      }
      if (pass) {
        // absent construction exits 3
        fs::path diagram = fs::temp_directory_path() / "twocat_acceptance_pair_id.json";
        {
          DocumentStore store;
          store.add_fixtures();
          Document d;
          d.kind = "functor";
          d.payload = identity_functor(fixtures::pair_cat());
          save_document(diagram, d);
        }
        if (run_cli(cli, "limit " + diagram.string()) != 3) {
          pass = false;
          detail = "absent limit did not exit 3";
        }
      }
      if (pass) {
        // blowing the cap exits 4
        if (run_cli(cli, "--cap 2 --fixtures " + dir.string() + " enumerate functors " +
                             (dir / "chain3.json").string() + " " +
                             (dir / "chain3.json").string()) != 4) {
          pass = false;
          detail = "cap overflow did not exit 4";
        }
      }
    }
    double millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report(10, "command-line contract", pass, millis, 5000, detail);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
  return failures == 0 ? 0 : 1;
}
