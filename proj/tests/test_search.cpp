#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ngroup/constructions.hpp"
#include "ngroup/errors.hpp"
#include "ngroup/numeric.hpp"
#include "ngroup/search.hpp"
#include "ngroup/verify.hpp"

using namespace ngroup;

namespace {

Transformation T(std::vector<Point> v) { return Transformation(std::move(v)); }

std::vector<std::uint64_t> order_statistics(ScanCensus const& c) {
  std::vector<std::uint64_t> orders;
  for (auto const& pool : c.pools) {
    for (auto const& g : pool.groups) orders.push_back(g.order());
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("idempotents") {
  CHECK(enumerate_idempotents(1).size() == 1);
  auto const two = enumerate_idempotents(2);
  CHECK(two == std::vector<Transformation>{T({0, 0}), T({0, 1}), T({1, 1})});
  CHECK(enumerate_idempotents(3).size() == 10);
  CHECK_THROWS_AS(enumerate_idempotents(8), CapExceeded);
}

TEST_CASE("idempotent counts match the closed form and brute force") {
  std::vector<std::uint64_t> const expected{1, 3, 10, 41, 196};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_idempotents(n).size() == expected[n - 1]);
    CHECK(idempotent_count_formula(n) == expected[n - 1]);
    CHECK(oracle::count_idempotents(n) == expected[n - 1]);
  }
  auto const six = enumerate_idempotents(6);
  CHECK(six.size() == idempotent_count_formula(6));
  CHECK(std::is_sorted(six.begin(), six.end()));
}

TEST_CASE("partitions") {
  std::vector<std::size_t> const bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const ps = all_partitions(n);
    CHECK(ps.size() == bell[n]);
    std::set<std::string> distinct;
    for (auto const& p : ps) distinct.insert(p.to_string());
    CHECK(distinct.size() == ps.size());
  }
}

TEST_CASE("H-class groups") {
  auto const g = h_class_group(T({0, 0, 2}));
  CHECK(g.order() == 2);
  CHECK(g.elements() == ng_witness(3).elements());
  auto const s3 = h_class_group(T({0, 1, 2}));
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_ng_group(s3));
  CHECK(h_class_group(T({0, 0, 0})).order() == 1);
  CHECK_THROWS_AS(h_class_group(T({0, 0, 1})), PreconditionError);
}

TEST_CASE("H-class order is rank factorial, NG iff not full rank") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& e : enumerate_idempotents(n)) {
      auto const g = h_class_group(e);
      std::size_t const r = image_rank(e).rank;
      CHECK(g.order() == factorial(r));
      CHECK(is_ng_group(g) == (r < n));
      CHECK(g.identity() == e);
    }
  }
}

TEST_CASE("maximal NG order") {
  std::vector<std::uint64_t> const expected{1, 2, 6, 24, 120};
  for (std::size_t n = 2; n <= 6; ++n) {
    auto const r = max_ng_order(n);
    CHECK(r.order == expected[n - 2]);
    CHECK(is_ng_group(r.witness));
    CHECK(r.order == ng_witness(n).order());
    CHECK(r.idempotents == idempotent_count_formula(n) - 1);
  }
  CHECK_THROWS_AS(max_ng_order(1), PreconditionError);
}

TEST_CASE("scan n = 2") {
  auto const c = exhaustive_ng_scan(2, false);
  REQUIRE(c.pools.size() == 1);
  auto const& pool = c.pools.front();
  CHECK(pool.partition.to_string() == "{{0,1}}");
  CHECK(pool.pool == std::vector<Transformation>{T({0, 0}), T({1, 1})});
  CHECK(pool.subsets_checked == 4);
  REQUIRE(pool.groups.size() == 2);
  CHECK(pool.groups[0].elements() == std::vector<Transformation>{T({0, 0})});
  CHECK(pool.groups[1].elements() == std::vector<Transformation>{T({1, 1})});
  CHECK(c.max_ng_order == 1);
}

TEST_CASE("scan n = 3") {
  auto const c = exhaustive_ng_scan(3, false);
  CHECK(c.max_ng_order == 2);
  CHECK(c.hclass_max_order == 2);
  std::size_t order_two = 0;
  for (auto const& pool : c.pools) {
    CHECK(pool.subsets_checked == (std::uint64_t{1} << pool.pool.size()));
    CHECK(pool.hclass_failures == 0);
    for (auto const& g : pool.groups) {
      CHECK(oracle::shares_identity_kernel_image(g));
      if (g.order() != 2) continue;
      ++order_two;
      auto const h = h_class_group(g.identity());
      CHECK(h.elements() == g.elements());
    }
  }
  // one per rank-2 idempotent: 3 two-block partitions, each with 2 images
  // meeting both blocks; C(3,2) * 2^1 in the closed form
  std::size_t rank_two = 0;
  for (auto const& e : enumerate_idempotents(3)) rank_two += image_rank(e).rank == 2;
  CHECK(rank_two == binomial(3, 2) * ipow(2, 1));
  CHECK(order_two == rank_two);
  CHECK(order_two == 6);
}

TEST_CASE("every scanned group sits in the H-class of its identity") {
  for (std::size_t n : {2u, 3u}) {
    for (auto const& pool : exhaustive_ng_scan(n, false).pools) {
      for (auto const& g : pool.groups) {
        auto const h = h_class_group(g.identity());
        for (auto const& f : g.elements()) CHECK(h.index_of(f).has_value());
      }
    }
  }
}

TEST_CASE("bounded scan n = 4") {
  auto const c = exhaustive_ng_scan(4, true);
  CHECK(c.bounded);
  CHECK(c.subset_limit == 7);
  CHECK(c.max_ng_order == 6);
  CHECK(c.hclass_max_order == 6);
  for (auto const& pool : c.pools) CHECK(pool.hclass_failures == 0);
  CHECK_THROWS_AS(exhaustive_ng_scan(4, false), CapExceeded);
  CHECK_THROWS_AS(exhaustive_ng_scan(5, true), CapExceeded);
}

TEST_CASE("scan statistics are invariant under relabelling") {
  // conjugating every found group by a carrier permutation gives a group
  // found by the scan again
  std::mt19937 rng(3);
  for (std::size_t n : {2u, 3u}) {
    auto const c = exhaustive_ng_scan(n, false);
    std::set<std::vector<Transformation>> found;
    for (auto const& pool : c.pools) {
      for (auto const& g : pool.groups) found.insert(g.elements());
    }
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Point> pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      std::vector<Point> inv(n);
      for (Point x = 0; x < n; ++x) inv[pi[x]] = x;
      std::set<std::vector<Transformation>> moved;
      for (auto const& els : found) {
        std::vector<Transformation> m;
        for (auto const& f : els) {
          m.push_back(compose(Transformation(pi), compose(f, Transformation(inv))));
        }
        std::sort(m.begin(), m.end());
        moved.insert(m);
      }
      CHECK(moved == found);
    }
    CHECK(order_statistics(c).size() == found.size());
  }
}

TEST_CASE("census json") {
  auto const j = to_json(exhaustive_ng_scan(2, false));
  CHECK(j["n"] == 2);
  CHECK(j["max_ng_order"] == 1);
  REQUIRE(j["pools"].size() == 1);
  CHECK(j["pools"][0]["pool_size"] == 2);
  CHECK(j["pools"][0]["partition"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(j["pools"][0]["groups"].size() == 2);
  CHECK(to_json(exhaustive_ng_scan(2, false), true)["pools"][0]["partition"] ==
        nlohmann::json::parse("[[1,2]]"));
}
