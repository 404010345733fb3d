#pragma once

#include <cstddef>
#include <string>
#include <vector>

#ifdef STRATCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace stratcat::sweep {

/// Execution policy for enumeration sweeps. Parallel falls back to the
/// serial path when the build has no OpenMP support.
enum class Exec { Serial, Parallel };

Exec exec_from_name(std::string_view name); // "serial" | "parallel"
std::string to_string(Exec e);
bool parallel_available();

/// Runs fn(i) for every i < n and concatenates the returned vectors in
/// index order, so the serial and parallel paths give identical results.
/// fn must not throw.
template <typename T, typename Fn>
std::vector<T> map_collect(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<std::vector<T>> slots(n);
#ifdef STRATCAT_HAVE_OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      slots[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) slots[i] = fn(i);
  }
#else
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) slots[i] = fn(i);
#endif
  std::vector<T> out;
  std::size_t total = 0;
  for (const auto& s : slots) total += s.size();
  out.reserve(total);
  for (auto& s : slots)
    for (auto& x : s) out.push_back(std::move(x));
  return out;
}

} // namespace stratcat::sweep
