#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace nestrad {

// Sweep rows are independent pure computations. The serial path is the
// reference; the OpenMP path must produce identical output in the same order.
enum class Execution { serial, parallel };

template <class In, class Fn>
auto map_rows(std::span<const In> inputs, Fn&& fn, Execution exec)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(inputs.size());
  std::vector<Out> out;
  out.reserve(inputs.size());
  if (exec == Execution::serial) {
    for (const In& in : inputs) out.push_back(fn(in));
    return out;
  }

  std::vector<std::optional<Out>> slots(inputs.size());
  // Exceptions cannot cross the parallel region; keep the first by index.
  std::vector<std::exception_ptr> errors(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      slots[idx].emplace(fn(inputs[idx]));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace nestrad
