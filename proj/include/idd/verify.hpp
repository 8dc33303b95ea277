#ifndef IDD_VERIFY_HPP
#define IDD_VERIFY_HPP

#include "idd/classify.hpp"
#include "idd/derivations.hpp"
#include "idd/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace idd {

struct VerifyOptions {
  std::string scope = "all";
  int n_max = 12;
  int window_margin = kDefaultWindowMargin;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;  // 0: OpenMP default
};

enum class Status { Pass, Fail, Discrepancy };
std::string to_string(Status s);

struct VerifyRecord {
  std::string scope;
  std::string instance;
  Status status = Status::Pass;
  std::string detail;
  Json data;
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<VerifyRecord> records;
  int count(Status s) const;
  /// 0 unless some record failed; paper discrepancies do not fail the run.
  int exit_code() const { return count(Status::Fail) > 0 ? 1 : 0; }
};

/// Scope names in execution order, "all" excluded.
const std::vector<std::string>& verify_scopes();

/// Grid scopes cover n <= min(n_max, kGridTop); derivation scopes cover each
/// statement's range up to n_max. Throws std::invalid_argument on an unknown
/// scope or n_max < 8.
VerifySummary verify_paper(const VerifyOptions& options);

constexpr int kGridTop = 10;
constexpr int kIdentityWindow = 20;
constexpr int kCorollaryWindow = 30;
constexpr int kProNilpotentWindow = 30;

Json to_json(const VerifySummary& s);

}  // namespace idd

#endif
