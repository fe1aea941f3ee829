#ifndef TWOCAT_SUITE_HPP
#define TWOCAT_SUITE_HPP

#include "twocat/serialize.hpp"

// The theorem-suite runner: every proposition exercised as a reproducible
// check with deterministic verdicts.  Randomized instance selection is
// seeded; verdicts are assertions quantified over the sampled instances and
// must not depend on the seed.

namespace twocat {

enum class CheckStatus { pass, fail, skipped_cap };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::shared_ptr<Json> counterexample;
  double millis = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::pass) return false;
    return true;
  }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  EnumCap cap;
  // when set, fixture documents are loaded from here and must match the
  // bundled ones; when empty the built-ins are used directly
  std::filesystem::path fixtures_dir;
};

SuiteReport run_suite(const SuiteOptions& opt);

Json suite_report_json(const SuiteReport& report);
std::string suite_report_text(const SuiteReport& report);

// Individual proposition checks (also used by the acceptance runner).
CheckResult check_law_oracle_equivalence(std::uint64_t seed, const EnumCap& cap);
CheckResult check_em_universal_property(const EnumCap& cap);
CheckResult check_termresolve(const EnumCap& cap);
CheckResult check_formaltfae(const EnumCap& cap);
CheckResult check_doublemonads(std::uint64_t seed, const EnumCap& cap);
CheckResult check_distributive_suite(const EnumCap& cap);
CheckResult check_codensity(const EnumCap& cap);
CheckResult check_pushforward(const EnumCap& cap);
CheckResult check_span_retrofunctor(const EnumCap& cap);
CheckResult check_serialization(const EnumCap& cap);

} // namespace twocat

#endif
