#pragma once

#include <complex>
#include <cstddef>

namespace wilson {

/// Composite Simpson weights applied to equally spaced samples obtained from
/// `sample(i)` for i in [0, n). Falls back to Simpson 3/8 on the last three
/// intervals when the interval count is odd, and to the trapezoid rule when
/// only one interval is available. Summation runs left to right.
template <typename Sample>
auto simpson(Sample&& sample, std::size_t n, double h)
    -> decltype(sample(std::size_t{0})) {
  using Value = decltype(sample(std::size_t{0}));
  if (n < 2) return Value{};
  const std::size_t intervals = n - 1;
  if (intervals == 1) return (h / 2.0) * (sample(0) + sample(1));

  Value acc{};
  if (intervals % 2 == 0) {
    acc = sample(0);
    for (std::size_t i = 1; i < intervals; ++i)
      acc += (i % 2 == 1 ? 4.0 : 2.0) * sample(i);
    acc += sample(intervals);
    return (h / 3.0) * acc;
  }

  // Odd interval count: Simpson on the first intervals-3, 3/8 rule on the rest.
  const std::size_t head = intervals - 3;
  if (head > 0) {
    acc = sample(0);
    for (std::size_t i = 1; i < head; ++i)
      acc += (i % 2 == 1 ? 4.0 : 2.0) * sample(i);
    acc += sample(head);
    acc = (h / 3.0) * acc;
  }
  Value tail = sample(head) + 3.0 * sample(head + 1) + 3.0 * sample(head + 2) +
               sample(head + 3);
  return acc + (3.0 * h / 8.0) * tail;
}

}  // namespace wilson
