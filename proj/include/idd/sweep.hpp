#ifndef IDD_SWEEP_HPP
#define IDD_SWEEP_HPP

#include "idd/algebra.hpp"
#include "idd/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace idd {

class GridParseError : public std::invalid_argument {
public:
  GridParseError(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// One spec per line; blank lines and `#` comments are ignored. A field may be
/// an inclusive range `a..b`, e.g. `K0..1:2..12:-2..2,-2..2`; points with
/// n < k are skipped. Duplicates keep their first position.
std::vector<AlgebraSpec> parse_grid(const std::string& text);
std::vector<AlgebraSpec> read_grid(const std::string& path);

struct SweepOptions {
  std::string out_path;
  std::uint64_t seed = 0;
  int jobs = 0;
  int batch = 32;  // points completed between manifest flushes
};

struct SweepResult {
  Json document;       // {config, records} in grid order
  int computed = 0;    // points evaluated in this run
  int resumed = 0;     // points taken from the manifest
};

/// Classifies every grid point. Completed points are appended to
/// `<out>.manifest` (spec strings) and `<out>.partial` (JSON lines) as they
/// finish, so an interrupted run resumes where it stopped; the final document
/// is written to `<out>`.
SweepResult run_sweep(const std::vector<AlgebraSpec>& grid, const SweepOptions& options);

}  // namespace idd

#endif
