// Benchmark: the naive generate-and-filter oracle versus the pruned
// backtracking enumerator, serial and worker-parallel. Counts must agree
// exactly (the run fails otherwise); timings are informational.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semiclose/oracle.hpp"
#include "semiclose/semigroup.hpp"

using namespace semiclose;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void row(const std::string& label, std::uint64_t count, double naive_s,
         double serial_s, double parallel_s) {
  std::cout << std::left << std::setw(26) << label << std::right << std::setw(8)
            << count << std::fixed << std::setprecision(4);
  if (naive_s >= 0)
    std::cout << std::setw(12) << naive_s;
  else
    std::cout << std::setw(12) << "-";
  std::cout << std::setw(12) << serial_s << std::setw(12) << parallel_s
            << "\n";
}

void compare(int order, bool commutative_only) {
  EnumerationSpec spec;
  spec.order = order;
  spec.commutative_only = commutative_only;

  std::vector<FiniteSemigroup> serial, parallel;
  const double serial_s =
      timed([&] { serial = enumerate_semigroups_serial(spec); });
  const double parallel_s = timed([&] { parallel = enumerate_semigroups(spec); });

  double naive_s = -1;
  std::uint64_t naive_count = serial.size();
  if (order <= 3) {
    naive_s = timed([&] { naive_count = naive_labeled_count(order, commutative_only); });
  }

  const bool agree = serial.size() == parallel.size() &&
                     std::equal(serial.begin(), serial.end(), parallel.begin()) &&
                     naive_count == serial.size();
  if (!agree) {
    ++g_failures;
    std::cout << "MISMATCH at order " << order
              << (commutative_only ? " (commutative)" : "") << ": naive "
              << naive_count << ", serial " << serial.size() << ", parallel "
              << parallel.size() << "\n";
    return;
  }

  std::string label = "order " + std::to_string(order) +
                      (commutative_only ? ", commutative" : ", all");
  row(label, serial.size(), naive_s, serial_s, parallel_s);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "workers: " << omp_get_max_threads() << " (OpenMP)\n";
#else
  std::cout << "workers: 1 (OpenMP not available)\n";
#endif
  std::cout << std::left << std::setw(26) << "spec" << std::right
            << std::setw(8) << "count" << std::setw(12) << "naive[s]"
            << std::setw(12) << "serial[s]" << std::setw(12) << "parallel[s]"
            << "\n";

  for (int order = 1; order <= 4; ++order) {
    compare(order, false);
    compare(order, true);
  }

  if (g_failures) {
    std::cout << g_failures << " comparisons disagreed\n";
    return 1;
  }
  std::cout << "all enumeration routes agree\n";
  return 0;
}
