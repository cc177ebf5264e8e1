#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fgr {

struct CampaignFailure {
  std::uint64_t seed = 0;  // trial seed; rerun with this as the campaign seed and --trials 1
  std::int64_t trial = 0;
  std::string instance_path;
  std::string expected;
  std::string got;
};

struct CampaignReport {
  std::string reduction;
  std::int64_t trials = 0;
  std::int64_t mismatches = 0;
  std::int64_t positives = 0;  // trials whose source instance has a solution (MaxSAT: is satisfiable)
  std::optional<CampaignFailure> first_failure;
  double wall_seconds = 0;
  bool budget_exhausted = false;
};

struct CampaignOptions {
  std::int64_t trials = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  double time_budget_seconds = 0;  // 0: unlimited
  // Test hook: perturbs the compared target value so every trial mismatches.
  bool corrupt = false;
  // Failure artifacts go here; empty means $FGRED_CACHE_DIR or ./fgred-failures.
  std::string cache_dir;
};

struct TrialOutcome {
  bool ok = true;
  std::string expected;
  std::string got;
  std::string instance;   // source instance text
  std::string extension;  // file extension for the artifact
  bool positive = false;  // source instance has a solution
};

using TrialFn = std::function<TrialOutcome(std::uint64_t trial_seed, const CampaignOptions&)>;

struct CampaignSpec {
  std::string name;
  std::string description;
  TrialFn trial;
};

const std::vector<CampaignSpec>& campaign_registry();
// Names accepted by run_campaign, including the aliases radius and wiener.
std::vector<std::string> campaign_names();
// Runs trial t with seed derive_seed(seed, t). Throws PreconditionError for an
// unknown name.
CampaignReport run_campaign(const std::string& name, const CampaignOptions& options);
// Trial seed used by run_campaign for trial t; a failing trial reruns alone
// through run_single_trial.
std::uint64_t campaign_trial_seed(std::uint64_t seed, std::int64_t trial);
TrialOutcome run_single_trial(const std::string& name, std::uint64_t trial_seed, const CampaignOptions& options);

std::string format_report(const CampaignReport& r);

}  // namespace fgr
