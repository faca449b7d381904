#include <doctest.h>

#include <algorithm>

#include "ngroup/cayley.hpp"
#include "ngroup/constructions.hpp"
#include "ngroup/errors.hpp"
#include "ngroup/verify.hpp"

using namespace ngroup;

namespace {

Element first_of_order(CayleyGroup const& g, std::size_t k, std::size_t skip = 0) {
  for (Element x = 0; x < g.order(); ++x) {
    if (element_order(g, x) == k && skip-- == 0) return x;
  }
  FAIL("no element of order " << k);
  return 0;
}

Subgroup gen(CayleyGroup const& g, std::vector<Element> seeds) {
  return subgroup_generated(g, seeds);
}

std::vector<std::vector<Element>> member_lists(std::vector<Subgroup> const& hs) {
  std::vector<std::vector<Element>> out;
  for (auto const& h : hs) out.emplace_back(h.members().begin(), h.members().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CayleyGroup> small_groups() {
  return {standard_group(Cyclic{1}),         standard_group(Cyclic{4}),
          standard_group(Cyclic{6}),         standard_group(ElementaryAbelian{2, 2}),
          standard_group(ElementaryAbelian{2, 3}), standard_group(Symmetric{3}),
          standard_group(Dihedral{4}),       standard_group(Dihedral{5}),
          semidirect_q_p2(SemidirectSpec::make(2, 3)).group};
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(CayleyGroup({{0, 1}, {1, 1}}, {"e", "a"}), PreconditionError);
  // a Latin square with identity that is not associative
  std::vector<std::vector<Element>> const loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(CayleyGroup(loop, {"e", "a", "b", "c", "d"}), PreconditionError);
}

TEST_CASE("constructed tables are Latin squares and associative") {
  for (auto const& g : small_groups()) {
    std::size_t const n = g.order();
    for (Element a = 0; a < n; ++a) {
      std::vector<bool> row(n), col(n);
      for (Element b = 0; b < n; ++b) {
        row[g.mul(a, b)] = true;
        col[g.mul(b, a)] = true;
        for (Element c = 0; c < n; ++c) {
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
      }
      CHECK(std::all_of(row.begin(), row.end(), [](bool x) { return x; }));
      CHECK(std::all_of(col.begin(), col.end(), [](bool x) { return x; }));
      CHECK(g.mul(a, g.inverse(a)) == g.identity());
    }
  }
}

TEST_CASE("generated subgroups") {
  auto const s3 = standard_group(Symmetric{3});
  CHECK(gen(s3, {first_of_order(s3, 3)}).size() == 3);
  CHECK(gen(s3, {}) == trivial_subgroup(s3));
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  auto const sylow = gen(sd.group, {sd.x, sd.y});
  CHECK(sylow.size() == 4);
  CHECK(sylow == sd.h);
}

TEST_CASE("normality") {
  auto const s3 = standard_group(Symmetric{3});
  auto const a3 = gen(s3, {first_of_order(s3, 3)});
  auto const t = gen(s3, {first_of_order(s3, 2)});
  CHECK(is_normal(s3, a3));
  CHECK_FALSE(is_normal(s3, t));
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(is_normal(sd.group, gen(sd.group, {sd.y})));
}

TEST_CASE("normal closure") {
  auto const s3 = standard_group(Symmetric{3});
  auto const a3 = gen(s3, {first_of_order(s3, 3)});
  CHECK(normal_closure(s3, gen(s3, {first_of_order(s3, 2)})) == whole_group(s3));
  CHECK(normal_closure(s3, a3) == a3);
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(normal_closure(sd.group, gen(sd.group, {sd.x})) == sd.u);
}

TEST_CASE("subnormal depth") {
  auto const s3 = standard_group(Symmetric{3});
  CHECK(subnormal_depth(s3, gen(s3, {first_of_order(s3, 3)})) == 1u);
  CHECK_FALSE(subnormal_depth(s3, gen(s3, {first_of_order(s3, 2)})).has_value());
  CHECK(subnormal_depth(s3, whole_group(s3)) == 0u);

  // a reflection in D_4: D_4 > Klein > <reflection>
  auto const d4 = standard_group(Dihedral{4});
  Element const s = 4;  // r^0 s
  REQUIRE(element_order(d4, s) == 2);
  auto const refl = gen(d4, {s});
  CHECK_FALSE(is_normal(d4, refl));
  CHECK(subnormal_depth(d4, refl) == 2u);
}

TEST_CASE("depth 1 iff proper normal; depth bounded by chain length") {
  for (auto const& g : small_groups()) {
    auto const subs = all_subgroups(g);
    for (auto const& h : subs) {
      auto const d = subnormal_depth(g, h);
      CHECK((d == 1u) == (is_normal(g, h) && h != whole_group(g)));
      if (d) {
        // each step strictly shrinks by a factor of at least 2
        std::size_t bound = 0;
        for (std::size_t idx = g.order() / h.size(); idx > 1; idx /= 2) ++bound;
        CHECK(*d <= bound);
      }
    }
  }
}

TEST_CASE("quotients") {
  auto const s3 = standard_group(Symmetric{3});
  auto const a3 = gen(s3, {first_of_order(s3, 3)});
  auto const q = quotient_group(s3, a3);
  CHECK(q.group.order() == 2);
  auto const same = quotient_group(s3, trivial_subgroup(s3));
  CHECK(is_isomorphic(same.group, s3));
  CHECK_THROWS_AS(quotient_group(s3, gen(s3, {first_of_order(s3, 2)})), PreconditionError);

  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  auto const gn = quotient_group(sd.group, sd.n);
  CHECK(gn.group.order() == 4);
  CHECK(is_isomorphic(gn.group, standard_group(ElementaryAbelian{2, 2})));

  for (auto const& g : small_groups()) {
    for (auto const& n : normal_subgroups(g)) {
      CHECK(quotient_group(g, n).group.order() * n.size() == g.order());
    }
  }
}

TEST_CASE("product sets") {
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  auto const uv = product_set(sd.group, sd.u, sd.v);
  CHECK(uv.elements.size() == sd.group.order());
  CHECK(uv.is_subgroup);
  CHECK(product_set(sd.group, sd.u, sd.u).elements.size() == sd.u.size());

  auto const s3 = standard_group(Symmetric{3});
  auto const a = gen(s3, {first_of_order(s3, 2, 0)});
  auto const b = gen(s3, {first_of_order(s3, 2, 1)});
  auto const ab = product_set(s3, a, b);
  CHECK(ab.elements.size() == 4);
  CHECK_FALSE(ab.is_subgroup);
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(standard_group(Symmetric{3})).size() == 6);
  CHECK(all_subgroups(standard_group(Cyclic{4})).size() == 3);
  CHECK(all_subgroups(standard_group(Cyclic{1})).size() == 1);
  for (auto const& g : small_groups()) {
    if (g.order() > 16) continue;
    auto subsets = oracle::subgroups_by_subsets(g);
    auto normal = oracle::normal_subgroups_by_subsets(g);
    std::sort(subsets.begin(), subsets.end());
    std::sort(normal.begin(), normal.end());
    CHECK(member_lists(all_subgroups(g)) == subsets);
    CHECK(member_lists(normal_subgroups(g)) == normal);
  }
  CHECK_THROWS_AS(all_subgroups(standard_group(Cyclic{49})), CapExceeded);
}

TEST_CASE("automorphisms") {
  CHECK(automorphism_group(standard_group(Cyclic{3})).size() == 2);
  CHECK(automorphism_group(standard_group(Cyclic{1})).size() == 1);
  CHECK(automorphism_group(standard_group(Symmetric{3})).size() == 6);
  CHECK(automorphism_group(standard_group(ElementaryAbelian{2, 2})).size() == 6);
  CHECK(automorphism_group(standard_group(Dihedral{4})).size() == 8);
  for (auto const& g : small_groups()) {
    if (g.order() > 8) continue;
    CHECK(automorphism_group(g).size() == oracle::count_automorphisms(g));
  }
  auto const autos = automorphism_group(standard_group(Cyclic{5}));
  CHECK(autos.front() == std::vector<Element>{0, 1, 2, 3, 4});
}

TEST_CASE("characteristic subgroups") {
  auto const s3 = standard_group(Symmetric{3});
  CHECK(is_characteristic(s3, gen(s3, {first_of_order(s3, 3)})));
  auto const k4 = standard_group(ElementaryAbelian{2, 2});
  CHECK_FALSE(is_characteristic(k4, gen(k4, {1})));
  CHECK(is_characteristic(k4, whole_group(k4)));
}

TEST_CASE("characteristic implies normal, and is transitive") {
  for (auto const& g : small_groups()) {
    auto const subs = all_subgroups(g);
    for (auto const& h : subs) {
      if (is_characteristic(g, h)) CHECK(is_normal(g, h));
    }
    if (g.order() > 16) continue;
    for (auto const& k : subs) {
      if (!is_characteristic(g, k)) continue;
      auto const ek = subgroup_as_group(g, k);
      for (auto const& h_local : all_subgroups(ek.group)) {
        if (!is_characteristic(ek.group, h_local)) continue;
        CHECK(is_characteristic(g, transport(g, ek, h_local)));
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(standard_group(Dihedral{3}), standard_group(Symmetric{3})));
  CHECK_FALSE(is_isomorphic(standard_group(Cyclic{4}), standard_group(ElementaryAbelian{2, 2})));
  CHECK_FALSE(is_isomorphic(standard_group(Cyclic{6}), standard_group(Symmetric{3})));
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(is_isomorphic(standard_group(Dihedral{6}), sd.group));
  auto const phi = find_isomorphism(standard_group(Dihedral{3}), standard_group(Symmetric{3}));
  REQUIRE(phi.has_value());
  auto const a = standard_group(Dihedral{3});
  auto const b = standard_group(Symmetric{3});
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) CHECK((*phi)[a.mul(x, y)] == b.mul((*phi)[x], (*phi)[y]));
  }
}

TEST_CASE("embedded subgroups") {
  auto const d4 = standard_group(Dihedral{4});
  auto const rot = gen(d4, {1});
  auto const e = subgroup_as_group(d4, rot);
  CHECK(e.group.order() == 4);
  CHECK(is_isomorphic(e.group, standard_group(Cyclic{4})));
  CHECK(transport(d4, e, whole_group(e.group)) == rot);
}

TEST_CASE("json round trip") {
  auto const g = standard_group(Dihedral{4});
  auto const j = to_json(g);
  CHECK(j["order"] == 8);
  auto const back = cayley_from_json(j);
  CHECK(back.rows() == g.rows());
  CHECK(back.labels() == g.labels());
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json{{"order", 2}}), ParseError);
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json{{"order", 2}, {"table", {{0, 1}}}}),
                  ParseError);
}

TEST_CASE("subgroup constructor validates") {
  auto const s3 = standard_group(Symmetric{3});
  CHECK_THROWS_AS(Subgroup(s3, {0, first_of_order(s3, 3)}), PreconditionError);
  CHECK(Subgroup(s3, {0}).size() == 1);
}
