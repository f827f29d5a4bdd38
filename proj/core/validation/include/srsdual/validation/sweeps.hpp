#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srsdual::validation {

struct CriterionReport {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SweepOptions {
  std::uint64_t seed = 1;
  // Extra oracle length beyond the fixed-point iteration bound, reported
  // separately from the agreement verdict.
  std::size_t fp_cross_check_extra = 4;
};

CriterionReport fp_sweep(const SweepOptions& options = {});           // 1
CriterionReport fp_anchored_cases(const SweepOptions& options = {});  // 2
CriterionReport monadic_sweep(const SweepOptions& options = {});      // 3
CriterionReport ce_example(const SweepOptions& options = {});         // 4
CriterionReport automata_checks(const SweepOptions& options = {});    // 5
CriterionReport gpcp_ct_checks(const SweepOptions& options = {});     // 6
CriterionReport gpcp_ce_checks(const SweepOptions& options = {});     // 7
CriterionReport dlba_checks(const SweepOptions& options = {});        // 8
CriterionReport fp_scaling(const SweepOptions& options = {});         // 9

struct Criterion {
  int id;
  const char* name;
  CriterionReport (*run)(const SweepOptions&);
};

const std::vector<Criterion>& all_criteria();

// Runs the selected criteria (all when `ids` is empty), calling `on_report`
// after each one.
std::vector<CriterionReport> run_criteria(const SweepOptions& options, const std::vector<int>& ids = {},
                                          const std::function<void(const CriterionReport&)>& on_report = {});

std::string format_report(const CriterionReport& r);

}  // namespace srsdual::validation
