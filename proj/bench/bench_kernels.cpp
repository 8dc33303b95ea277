// Serial reference vs OpenMP kernels on the same inputs; results must agree.
#include "idd/derivations.hpp"
#include "idd/identities.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>

namespace {

using namespace idd;
using Clock = std::chrono::steady_clock;

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (agree ? "  agree" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", best of " << reps << '\n';
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(10) << "speedup" << '\n';
  bool all_agree = true;

  for (const char* text : {"K0:16:-1,-1", "K1:20:0,-2", "K1:24:2,0", "K0:30:1,1"}) {
    const StructureTable t(AlgebraSpec::parse(text));
    Subspace a, b;
    const double s = seconds([&] { a = derivation_kernel(t, Exec::Serial); }, reps);
    const double p = seconds([&] { b = derivation_kernel(t, Exec::Parallel); }, reps);
    all_agree = all_agree && a == b;
    row(std::string("derivation_kernel ") + text, s, p, a == b);
  }

  for (const char* text : {"K0:inf@16:1,0", "K1:inf@16:-1,0"}) {
    const AlgebraSpec spec = AlgebraSpec::parse(text);
    const StructureTable t(spec);
    const StarTable star(spec);
    std::optional<IdentityReport> a, b;
    const double s = seconds([&] { a = check_conservative(t, star, Exec::Serial); }, reps);
    const double p = seconds([&] { b = check_conservative(t, star, Exec::Parallel); }, reps);
    const bool agree = a->checked == b->checked && a->pass == b->pass && a->witness == b->witness;
    all_agree = all_agree && agree;
    row(std::string("check_conservative ") + text, s, p, agree);
  }
  return all_agree ? 0 : 1;
}
