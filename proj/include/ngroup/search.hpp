#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngroup/caps.hpp"
#include "ngroup/transgroup.hpp"

namespace ngroup {

/// All f in T_n with f*f == f, in lexicographic order of image lists.
/// Brute force over the n^n maps; n above caps.idempotent_degree throws.
std::vector<Transformation> enumerate_idempotents(
    std::size_t n, Caps const& caps = default_caps);

/// sum_{k=1..n} C(n,k) k^(n-k)
std::uint64_t idempotent_count_formula(std::size_t n);

/// Every partition of {0..n-1}, generated as restricted growth strings in
/// lexicographic order.
void for_each_partition(std::size_t n,
                        std::function<void(Partition const&)> const& visit);
std::vector<Partition> all_partitions(std::size_t n);

/// The maps sharing the kernel and image of the idempotent e, verified to
/// be a group with identity e, order rank(e)! and a full symmetric image
/// under rho. Throws PreconditionError if e is not idempotent.
TransGroup h_class_group(Transformation const& e);

struct MaxNgResult {
  std::size_t n = 0;
  std::uint64_t order = 0;
  TransGroup witness;
  std::size_t idempotents = 0;  // non-bijective idempotents examined
};

/// Largest |h_class_group(e)| over the non-bijective idempotents of T_n.
/// A maximum other than (n-1)! throws TheoremViolation.
MaxNgResult max_ng_order(std::size_t n, Caps const& caps = default_caps);

struct PoolCensus {
  Partition partition;
  std::vector<Transformation> pool;  // every map with exactly this kernel
  std::uint64_t subsets_checked = 0;
  std::vector<TransGroup> groups;
  // second route: every pool member that can lie in a group sits in the
  // H-class of the pool idempotent with the same image
  std::size_t members_checked = 0;
  std::size_t hclass_failures = 0;
  std::uint64_t hclass_max_order = 0;
};

struct ScanCensus {
  std::size_t n = 0;
  bool bounded = false;
  std::size_t subset_limit = 0;  // largest subset size tested
  std::vector<PoolCensus> pools;
  std::uint64_t max_ng_order = 0;
  std::uint64_t hclass_max_order = 0;
  std::uint64_t subsets_checked = 0;
  std::vector<std::string> notes;
};

/// For every non-discrete partition P, tests each subset of the maps with
/// kernel exactly P with check_group. Full mode (n <= 3) tests every
/// subset; bounded mode (n <= 4) only subsets of size <= (n-1)! + 1.
ScanCensus exhaustive_ng_scan(std::size_t n, bool bounded,
                              Caps const& caps = default_caps);

/// { "n", "mode", "pools": [{ "partition", "pool_size", "groups", ... }],
///   "max_ng_order", ... }
nlohmann::json to_json(ScanCensus const& census, bool one_based = false);

}  // namespace ngroup
