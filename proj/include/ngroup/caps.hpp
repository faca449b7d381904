#pragma once

#include <cstddef>

namespace ngroup {

/// Size limits for the exhaustive algorithms. Exceeding one throws
/// CapExceeded rather than silently running for hours.
struct Caps {
  std::size_t closure = 10'000;       // elements in a composition closure
  std::size_t table = 128;            // order of a constructed standard group
  std::size_t subgroups = 48;         // order for all_subgroups
  std::size_t automorphisms = 24;     // order for automorphism_group
  std::size_t isomorphism = 48;       // order for is_isomorphic
  std::size_t idempotent_degree = 7;  // n for the n^n idempotent scan
};

inline constexpr Caps default_caps{};

}  // namespace ngroup
