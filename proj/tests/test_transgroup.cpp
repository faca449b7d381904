#include <doctest.h>

#include <algorithm>
#include <random>

#include "ngroup/constructions.hpp"
#include "ngroup/errors.hpp"
#include "ngroup/search.hpp"
#include "ngroup/transgroup.hpp"
#include "ngroup/verify.hpp"

using namespace ngroup;

namespace {

Transformation T(std::vector<Point> v) { return Transformation(std::move(v)); }

std::vector<oracle::Map> raw(std::vector<Transformation> const& fs) {
  std::vector<oracle::Map> out;
  for (auto const& f : fs) out.emplace_back(f.images().begin(), f.images().end());
  std::sort(out.begin(), out.end());
  return out;
}

TransGroup group_of(std::vector<Transformation> const& s) { return require_group(s); }

}  // namespace

TEST_CASE("closure") {
  CHECK(raw(generate_closure(std::vector{T({2, 2, 0})})) ==
        std::vector<oracle::Map>{{0, 0, 2}, {2, 2, 0}});
  CHECK(raw(generate_closure(std::vector{T({0, 1, 2})})) ==
        std::vector<oracle::Map>{{0, 1, 2}});
  CHECK(raw(generate_closure(std::vector{T({0, 0, 1})})) ==
        std::vector<oracle::Map>{{0, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(generate_closure(std::vector{T({1, 2, 3, 4, 5, 6, 0})}, 5), CapExceeded);
}

TEST_CASE("closure agrees with naive saturation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const n = 2 + trial % 4;
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    std::vector<Transformation> gens;
    std::vector<oracle::Map> raw_gens;
    for (int k = 0; k < 1 + trial % 3; ++k) {
      oracle::Map m(n);
      for (auto& x : m) x = pick(rng);
      gens.emplace_back(m);
      raw_gens.push_back(m);
    }
    auto expected = oracle::naive_closure(raw_gens);
    std::sort(expected.begin(), expected.end());
    CHECK(raw(generate_closure(gens)) == expected);
  }
}

TEST_CASE("check_group accepts groups and names the failing axiom") {
  auto const g = group_of({T({0, 0, 2}), T({2, 2, 0})});
  CHECK(g.identity() == T({0, 0, 2}));
  CHECK(g.order() == 2);
  CHECK(g.kernel().blocks() == std::vector<std::vector<Point>>{{0, 1}, {2}});
  CHECK(g.image() == std::vector<Point>{0, 2});
  // all four products
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(g.elements()[g.product(i, j)] == compose(g.elements()[i], g.elements()[j]));
    }
  }

  auto const rejected = check_group(std::vector{T({0, 0, 1})});
  REQUIRE(std::holds_alternative<GroupRejection>(rejected));
  CHECK(std::get<GroupRejection>(rejected).axiom == GroupAxiom::not_closed);

  auto const s2 = check_group(std::vector{T({0, 1, 2}), T({1, 0, 2})});
  REQUIRE(std::holds_alternative<TransGroup>(s2));
  CHECK_FALSE(is_ng_group(std::get<TransGroup>(s2)));

  CHECK_THROWS_AS(check_group(std::vector<Transformation>{}), PreconditionError);
  CHECK_THROWS_AS(check_group(std::vector{T({0, 0}), T({0, 0, 0})}), DomainMismatch);
  // duplicates collapse
  CHECK(group_of({T({0, 0, 2}), T({2, 2, 0}), T({0, 0, 2})}).order() == 2);
}

TEST_CASE("closed sets that are not groups") {
  // {[0,0,0],[0,0,1]}... is not closed; {[0,1,2],[0,0,0]} is closed with no inverse
  auto const r = check_group(std::vector{T({0, 1, 2}), T({0, 0, 0})});
  REQUIRE(std::holds_alternative<GroupRejection>(r));
  auto const axiom = std::get<GroupRejection>(r).axiom;
  CHECK((axiom == GroupAxiom::no_inverse || axiom == GroupAxiom::mixed_kernel));
  // two constants: closed, every element a left zero, no two-sided identity
  auto const z = check_group(std::vector{T({0, 0}), T({1, 1})});
  REQUIRE(std::holds_alternative<GroupRejection>(z));
}

TEST_CASE("NG predicate") {
  CHECK(is_ng_group(group_of({T({0, 0, 2}), T({2, 2, 0})})));
  CHECK_FALSE(is_ng_group(group_of({T({0, 1, 2})})));
  CHECK(is_ng_group(group_of({T({0, 0, 0})})));
}

TEST_CASE("shared kernel and image") {
  auto const ki = common_kernel_image(group_of({T({0, 0, 2}), T({2, 2, 0})}));
  CHECK(ki.kernel.blocks() == std::vector<std::vector<Point>>{{0, 1}, {2}});
  CHECK(ki.image == std::vector<Point>{0, 2});
  auto const id = common_kernel_image(group_of({T({0, 1, 2})}));
  CHECK(id.kernel.is_discrete());
  CHECK(id.image == std::vector<Point>{0, 1, 2});
  auto const w4 = common_kernel_image(ng_witness(4));
  CHECK(w4.kernel.block_count() == 3);
  CHECK(w4.image.size() == 3);
}

TEST_CASE("rho onto the quotient permutation group") {
  auto const p = rho(group_of({T({0, 0, 2}), T({2, 2, 0})}));
  CHECK(p.m == 2);
  CHECK(p.perms == std::vector<BlockMap>{{0, 1}, {1, 0}});

  auto const t = rho(group_of({T({0, 0, 0})}));
  CHECK(t.m == 1);
  CHECK(t.perms == std::vector<BlockMap>{{0}});

  auto const w = ng_witness(4);
  auto const s3 = rho(w);
  CHECK(s3.m == 3);
  CHECK(s3.perms.size() == 6);
  CHECK(oracle::rho_is_isomorphism(w));
  // the block maps form a table isomorphic to S_3
  CHECK(is_isomorphic(from_transgroup(w), standard_group(Symmetric{3})));
}

TEST_CASE("rho is an isomorphism on every H-class to n = 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& e : enumerate_idempotents(n)) {
      auto const g = h_class_group(e);
      auto const p = rho(g);
      CHECK(p.perms.size() == g.order());
      CHECK(oracle::rho_is_isomorphism(g));
      CHECK(oracle::shares_identity_kernel_image(g));
    }
  }
}

TEST_CASE("group report") {
  auto const j = group_report(group_of({T({0, 0, 2}), T({2, 2, 0})}));
  CHECK(j["n"] == 3);
  CHECK(j["order"] == 2);
  CHECK(j["identity"] == "[0,0,2]");
  CHECK(j["is_ng"] == true);
  CHECK(j["quotient_order"] == 2);
  CHECK(j["image"] == nlohmann::json::array({0, 2}));
  auto const one = group_report(group_of({T({0, 0, 2}), T({2, 2, 0})}), true);
  CHECK(one["identity"] == "[1,1,3]");
  CHECK(one["image"] == nlohmann::json::array({1, 3}));
}

TEST_CASE("cayley table of a transformation group") {
  CHECK(from_transgroup(group_of({T({0, 0, 2}), T({2, 2, 0})})).order() == 2);
  CHECK(from_transgroup(group_of({T({0, 0, 0})})).order() == 1);
  CHECK(is_isomorphic(from_transgroup(group_of({T({0, 0, 2}), T({2, 2, 0})})),
                      standard_group(Cyclic{2})));
}
