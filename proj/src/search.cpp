#include "ngroup/search.hpp"

#include <algorithm>
#include <optional>

#include "ngroup/errors.hpp"
#include "ngroup/numeric.hpp"

namespace ngroup {

namespace {

void partitions_from(std::vector<Point>& rgs, std::size_t i, Point max_label,
                     std::function<void(Partition const&)> const& visit) {
  if (i == rgs.size()) {
    visit(Partition::from_labels(rgs));
    return;
  }
  for (Point b = 0; b <= max_label + 1; ++b) {
    rgs[i] = b;
    partitions_from(rgs, i + 1, std::max(max_label, b), visit);
  }
}

// Every map whose kernel is exactly p: injective assignments of blocks to
// points.
std::vector<Transformation> kernel_pool(Partition const& p) {
  std::size_t const n = p.size();
  std::size_t const k = p.block_count();
  std::vector<Transformation> pool;
  std::vector<Point> assign(k);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == k) {
      std::vector<Point> images(n);
      for (std::size_t x = 0; x < n; ++x) images[x] = assign[p.block_of(x)];
      pool.emplace_back(std::move(images));
      return;
    }
    for (Point x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      assign[b] = x;
      rec(b + 1);
      used[x] = false;
    }
  };
  rec(0);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void scan_pool(PoolCensus& census, std::size_t subset_limit) {
  auto const& pool = census.pool;
  std::size_t const m = pool.size();
  if (m > 63) throw CapExceeded("kernel pool too large for subset scan");

  constexpr int outside = -1;
  std::vector<int> product(m * m, outside);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const f = compose(pool[i], pool[j]);
      auto it = std::lower_bound(pool.begin(), pool.end(), f);
      if (it != pool.end() && *it == f) {
        product[i * m + j] = static_cast<int>(it - pool.begin());
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<bool> in(m, false);
  auto test_subset = [&] {
    ++census.subsets_checked;
    // cheap closure filter on the precomputed table, then the full check
    for (std::size_t i : chosen) {
      for (std::size_t j : chosen) {
        int const k = product[i * m + j];
        if (k == outside || !in[static_cast<std::size_t>(k)]) return;
      }
    }
    std::vector<Transformation> subset;
    for (std::size_t i : chosen) subset.push_back(pool[i]);
    auto result = check_group(subset);
    if (auto* g = std::get_if<TransGroup>(&result)) census.groups.push_back(std::move(*g));
  };

  // subsets in order of increasing size, then lexicographic
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                           std::size_t left) {
    if (left == 0) {
      test_subset();
      return;
    }
    for (std::size_t i = start; i + left <= m; ++i) {
      chosen.push_back(i);
      in[i] = true;
      rec(i + 1, left - 1);
      in[i] = false;
      chosen.pop_back();
    }
  };
  ++census.subsets_checked;  // the empty subset, which has no identity
  for (std::size_t size = 1; size <= std::min(subset_limit, m); ++size) rec(0, size);

  // H-class route
  std::vector<Transformation> idempotents;
  for (auto const& f : pool) {
    if (is_idempotent(f)) idempotents.push_back(f);
  }
  for (auto const& e : idempotents) {
    census.hclass_max_order =
        std::max<std::uint64_t>(census.hclass_max_order, h_class_group(e).order());
  }
  for (auto const& f : pool) {
    if (!can_be_member(f)) continue;
    ++census.members_checked;
    auto const image = image_rank(f).image;
    std::optional<Transformation> match;
    std::size_t matches = 0;
    for (auto const& e : idempotents) {
      if (image_rank(e).image == image) {
        match = e;
        ++matches;
      }
    }
    if (matches != 1 || !h_class_group(*match).index_of(f)) ++census.hclass_failures;
  }
}

}  // namespace

std::vector<Transformation> enumerate_idempotents(std::size_t n, Caps const& caps) {
  if (n < 1) throw PreconditionError("enumerate_idempotents needs n >= 1");
  if (n > caps.idempotent_degree) {
    throw CapExceeded("idempotent scan limited to n <= " +
                      std::to_string(caps.idempotent_degree));
  }
  std::vector<Transformation> out;
  std::vector<Point> images(n, 0);
  while (true) {
    bool idem = true;
    for (std::size_t x = 0; x < n && idem; ++x) idem = images[images[x]] == images[x];
    if (idem) out.emplace_back(images);
    // odometer, last position fastest: lexicographic order
    std::size_t i = n;
    while (i > 0 && images[i - 1] == n - 1) images[--i] = 0;
    if (i == 0) break;
    ++images[i - 1];
  }
  return out;
}

std::uint64_t idempotent_count_formula(std::size_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) total += binomial(n, k) * ipow(k, n - k);
  return total;
}

void for_each_partition(std::size_t n,
                        std::function<void(Partition const&)> const& visit) {
  if (n < 1) throw PreconditionError("partitions need n >= 1");
  std::vector<Point> rgs(n, 0);
  partitions_from(rgs, 1, 0, visit);
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition const& p) { out.push_back(p); });
  return out;
}

TransGroup h_class_group(Transformation const& e) {
  if (!is_idempotent(e)) {
    throw PreconditionError(e.to_string() + " is not idempotent");
  }
  auto const kernel = kernel_partition(e);
  auto image = image_rank(e).image;
  std::size_t const n = e.degree();

  std::vector<Transformation> maps;
  do {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = image[kernel.block_of(x)];
    maps.emplace_back(std::move(images));
  } while (std::next_permutation(image.begin(), image.end()));

  auto g = require_group(maps);
  std::uint64_t const expected = factorial(kernel.block_count());
  if (g.identity() != e || g.order() != expected) {
    throw TheoremViolation("H-class of " + e.to_string() +
                           " is not a group of order rank! with identity e");
  }
  auto const hat = rho(g);
  if (hat.m != kernel.block_count() || hat.perms.size() != expected) {
    throw TheoremViolation("H-class of " + e.to_string() +
                           " does not map onto the full symmetric group");
  }
  return g;
}

MaxNgResult max_ng_order(std::size_t n, Caps const& caps) {
  if (n < 2) throw PreconditionError("max_ng_order needs n >= 2");
  if (n > caps.idempotent_degree) {
    throw CapExceeded("max_ng_order limited to n <= " +
                      std::to_string(caps.idempotent_degree));
  }
  std::optional<TransGroup> best;
  std::size_t examined = 0;
  for (auto const& e : enumerate_idempotents(n, caps)) {
    if (image_rank(e).bijective) continue;
    ++examined;
    auto g = h_class_group(e);
    if (!best || g.order() > best->order()) best = std::move(g);
  }
  if (!is_ng_group(*best) || best->order() != factorial(n - 1)) {
    throw TheoremViolation("maximal NG order for n = " + std::to_string(n) +
                           " is " + std::to_string(best->order()) + ", not (n-1)!");
  }
  std::uint64_t const order = best->order();
  return MaxNgResult{n, order, std::move(*best), examined};
}

ScanCensus exhaustive_ng_scan(std::size_t n, bool bounded, Caps const& caps) {
  (void)caps;
  if (n < 1) throw PreconditionError("scan needs n >= 1");
  if (!bounded && n > 3) {
    throw CapExceeded("full subset scan limited to n <= 3 (use bounded mode)");
  }
  if (bounded && n > 4) throw CapExceeded("bounded scan limited to n <= 4");

  ScanCensus census;
  census.n = n;
  census.bounded = bounded;
  census.subset_limit = bounded ? factorial(n - 1) + 1 : std::size_t{64};

  for_each_partition(n, [&](Partition const& p) {
    if (p.is_discrete()) return;
    PoolCensus pool{p, kernel_pool(p), 0, {}, 0, 0, 0};
    scan_pool(pool, census.subset_limit);
    census.subsets_checked += pool.subsets_checked;
    census.hclass_max_order = std::max(census.hclass_max_order, pool.hclass_max_order);
    for (auto const& g : pool.groups) {
      if (!is_ng_group(g)) {
        throw TheoremViolation("group inside a non-discrete kernel pool is not NG");
      }
      census.max_ng_order = std::max<std::uint64_t>(census.max_ng_order, g.order());
      if (g.kernel().block_count() > n - 1) {
        throw TheoremViolation("NG group acts on more than n-1 blocks");
      }
    }
    census.pools.push_back(std::move(pool));
  });

  census.notes.push_back("pools are formed by exact kernel partition; every "
                         "group's members share its identity's kernel");
  census.notes.push_back("every NG group acts on a quotient of at most n-1 "
                         "blocks, and n-1 blocks are attained");
  if (bounded) {
    census.notes.push_back(
        "bounded mode tests subsets of size <= (n-1)!+1 and cross-checks every "
        "group-capable pool member against the H-class of its pool idempotent");
  }
  return census;
}

nlohmann::json to_json(ScanCensus const& census, bool one_based) {
  auto const shift = one_based ? 1u : 0u;
  nlohmann::json pools = nlohmann::json::array();
  for (auto const& pool : census.pools) {
    nlohmann::json blocks = nlohmann::json::array();
    for (auto const& b : pool.partition.blocks()) {
      nlohmann::json block = nlohmann::json::array();
      for (Point x : b) block.push_back(x + shift);
      blocks.push_back(block);
    }
    nlohmann::json groups = nlohmann::json::array();
    for (auto const& g : pool.groups) groups.push_back(group_report(g, one_based));
    pools.push_back({{"partition", blocks},
                     {"pool_size", pool.pool.size()},
                     {"subsets_checked", pool.subsets_checked},
                     {"groups", groups},
                     {"hclass_route",
                      {{"members_checked", pool.members_checked},
                       {"failures", pool.hclass_failures},
                       {"max_order", pool.hclass_max_order}}}});
  }
  return {{"n", census.n},
          {"mode", census.bounded ? "bounded" : "full"},
          {"subset_limit", census.subset_limit},
          {"pools", pools},
          {"max_ng_order", census.max_ng_order},
          {"hclass_max_order", census.hclass_max_order},
          {"subsets_checked", census.subsets_checked},
          {"notes", census.notes}};
}

}  // namespace ngroup
