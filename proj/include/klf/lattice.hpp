#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace klf {

/// Number of integer vectors of the given dimension with sup-norm exactly r.
inline std::uint64_t shell_size(int dim, int r) {
  if (r == 0) return 1;
  auto ipow = [](std::uint64_t b, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
  };
  return ipow(static_cast<std::uint64_t>(2 * r + 1), dim) - ipow(static_cast<std::uint64_t>(2 * r - 1), dim);
}

/// True when the first nonzero coordinate of v is positive. Exactly one of
/// v, -v satisfies this for every nonzero v.
inline bool is_half_space_representative(std::span<const std::int64_t> v) {
  for (auto c : v) {
    if (c != 0) return c > 0;
  }
  return false;
}

/// Calls fn(std::span<const std::int64_t>) for every vector of sup-norm r,
/// in lexicographic order.
template <class Fn>
void for_each_shell_vector(int dim, int r, Fn&& fn) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(dim), -r);
  if (dim == 0) return;
  while (true) {
    bool on_shell = false;
    for (auto c : v) {
      if (std::llabs(c) == r) {
        on_shell = true;
        break;
      }
    }
    if (on_shell) fn(std::span<const std::int64_t>(v));
    int i = dim - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == r) {
      v[static_cast<std::size_t>(i)] = -r;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
}

/// Half of a shell: one representative of each {v, -v} pair.
template <class Fn>
void for_each_half_shell_vector(int dim, int r, Fn&& fn) {
  for_each_shell_vector(dim, r, [&](std::span<const std::int64_t> v) {
    if (is_half_space_representative(v)) fn(v);
  });
}

}  // namespace klf
