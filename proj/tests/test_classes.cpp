#include <doctest.h>

#include "ngroup/classes.hpp"
#include "ngroup/constructions.hpp"
#include "ngroup/errors.hpp"
#include "ngroup/verify.hpp"

using namespace ngroup;

namespace {

Subgroup gen(CayleyGroup const& g, std::vector<Element> seeds) {
  return subgroup_generated(g, seeds);
}

Element first_of_order(CayleyGroup const& g, std::size_t k) {
  for (Element x = 0; x < g.order(); ++x) {
    if (element_order(g, x) == k) return x;
  }
  return 0;
}

std::vector<GroupClass> classes() {
  return {GroupClass::p_group(2), GroupClass::p_group(3), GroupClass::p_group(5),
          GroupClass::nilpotent()};
}

}  // namespace

TEST_CASE("class parsing") {
  CHECK(GroupClass::parse("p:2").prime() == 2);
  CHECK(GroupClass::parse("nilpotent").kind() == GroupClass::Kind::nilpotent);
  CHECK_THROWS_AS(GroupClass::parse("p:4"), Error);
  CHECK_THROWS_AS(GroupClass::parse("abelian"), ParseError);
  CHECK_THROWS_AS(GroupClass::parse("p:"), ParseError);
  CHECK_FALSE(GroupClass::non_shp_abelian().assumes_shp());
}

TEST_CASE("membership") {
  auto const p2 = GroupClass::p_group(2);
  CHECK(belongs(p2, standard_group(Dihedral{4})));
  CHECK_FALSE(belongs(p2, standard_group(Symmetric{3})));
  CHECK_FALSE(belongs(GroupClass::nilpotent(), standard_group(Symmetric{3})));
  CHECK(belongs(GroupClass::nilpotent(), standard_group(Cyclic{6})));
  CHECK(belongs(GroupClass::nilpotent(), standard_group(Dihedral{4})));
  CHECK_FALSE(belongs(GroupClass::nilpotent(), standard_group(Dihedral{6})));
  for (auto const& c : classes()) CHECK(belongs(c, standard_group(Cyclic{1})));
}

TEST_CASE("membership depends only on the table") {
  auto const d3 = standard_group(Dihedral{3});
  auto const s3 = standard_group(Symmetric{3});
  auto const c6 = standard_group(Cyclic{6});
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3)).group;
  auto const d6 = standard_group(Dihedral{6});
  for (auto const& c : classes()) {
    CHECK(belongs(c, d3) == belongs(c, s3));
    CHECK(belongs(c, sd) == belongs(c, d6));
    CHECK(belongs(c, c6) == belongs(c, quotient_group(c6, trivial_subgroup(c6)).group));
  }
}

TEST_CASE("class axioms") {
  std::vector<CayleyGroup> two{standard_group(Cyclic{2}), standard_group(Cyclic{4}),
                               standard_group(Dihedral{4}),
                               standard_group(ElementaryAbelian{2, 2})};
  CHECK(verify_shp_axioms(GroupClass::p_group(2), two).status == Status::holds);
  std::vector<CayleyGroup> mixed{standard_group(Cyclic{6}), standard_group(Symmetric{3}),
                                 standard_group(Dihedral{4})};
  CHECK(verify_shp_axioms(GroupClass::nilpotent(), mixed).status == Status::holds);
  std::vector<CayleyGroup> d4{standard_group(Dihedral{4})};
  auto const control = verify_shp_axioms(GroupClass::non_shp_abelian(), d4);
  CHECK(control.status == Status::violated);
  CHECK(control.witness.at("violations").size() >= 1);
}

TEST_CASE("residuals") {
  auto const s3 = standard_group(Symmetric{3});
  auto const r = residual(s3, GroupClass::p_group(2));
  CHECK(r.size() == 3);
  CHECK(r == gen(s3, {first_of_order(s3, 3)}));
  CHECK(quotient_group(s3, r).group.order() == 2);
  CHECK(residual(standard_group(Dihedral{4}), GroupClass::p_group(2)).size() == 1);

  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(residual(sd.group, GroupClass::p_group(2)) == sd.n);
  auto const sd7 = semidirect_q_p2(SemidirectSpec::make(3, 7));
  CHECK(residual(sd7.group, GroupClass::p_group(3)) == sd7.n);
}

TEST_CASE("radicals") {
  auto const p2 = GroupClass::p_group(2);
  auto const s3 = standard_group(Symmetric{3});
  CHECK(radical(s3, p2).size() == 1);
  auto const d4 = standard_group(Dihedral{4});
  CHECK(radical(d4, p2) == whole_group(d4));
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(radical(sd.group, p2) == gen(sd.group, {sd.y}));
  CHECK(radical_of(sd.group, sd.u, p2).size() == 1);
  CHECK(radical_of(sd.group, sd.v, p2).size() == 1);
}

TEST_CASE("residual and radical defining properties") {
  std::vector<CayleyGroup> groups{standard_group(Symmetric{3}), standard_group(Dihedral{4}),
                                  standard_group(Dihedral{6}), standard_group(Cyclic{12}),
                                  standard_group(Symmetric{4}),
                                  semidirect_q_p2(SemidirectSpec::make(2, 5)).group};
  for (auto const& g : groups) {
    for (auto const& c : classes()) {
      auto const r = residual(g, c);
      CHECK(is_normal(g, r));
      CHECK(belongs(c, quotient_group(g, r).group));
      auto const o = radical(g, c);
      CHECK(is_normal(g, o));
      CHECK(belongs(c, subgroup_as_group(g, o).group));
      for (auto const& n : normal_subgroups(g)) {
        if (belongs(c, quotient_group(g, n).group)) CHECK(r.is_subset_of(n));
        if (belongs(c, subgroup_as_group(g, n).group)) CHECK(n.is_subset_of(o));
      }
    }
  }
}

TEST_CASE("residual of a product") {
  auto const p2 = GroupClass::p_group(2);
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(check_residual_product(sd.group, sd.u, sd.v, p2).status == Status::holds);
  auto const g = sd.group;
  CHECK(check_residual_product(g, whole_group(g), whole_group(g), p2).status ==
        Status::holds);

  auto const s3 = standard_group(Symmetric{3});
  auto const a3 = gen(s3, {first_of_order(s3, 3)});
  auto const t = gen(s3, {first_of_order(s3, 2)});
  CHECK(check_residual_product(s3, a3, t, p2).status == Status::precondition_failed);
}

TEST_CASE("radical of a product") {
  auto const p2 = GroupClass::p_group(2);
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  auto const r = check_radical_product(sd.group, sd.u, sd.v, p2);
  CHECK(r.status == Status::violated);
  auto const d4 = standard_group(Dihedral{4});
  auto const rot = gen(d4, {1});
  auto const klein = gen(d4, {2, 4});
  CHECK(check_radical_product(d4, rot, klein, p2).status == Status::holds);

  auto const sd7 = semidirect_q_p2(SemidirectSpec::make(3, 7));
  auto const p3 = GroupClass::p_group(3);
  CHECK(radical(sd7.group, p3).size() == 3);
  CHECK(check_radical_product(sd7.group, sd7.u, sd7.v, p3).status == Status::violated);
}

TEST_CASE("joins of subnormal class members") {
  auto const p2 = GroupClass::p_group(2);
  auto const d4 = standard_group(Dihedral{4});
  auto const centre = gen(d4, {2});
  auto const klein = gen(d4, {2, 4});
  auto const rot = gen(d4, {1});
  CHECK(subnormal_join_in_class(d4, centre, klein, p2).status == Status::holds);
  CHECK(subnormal_join_in_class(d4, klein, rot, p2).status == Status::holds);
  CHECK(subnormal_join_in_class(d4, klein, klein, p2).status == Status::holds);
  CHECK(join(d4, klein, klein) == klein);

  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  auto const y = gen(sd.group, {sd.y});
  CHECK(subnormal_join_in_class(sd.group, y, trivial_subgroup(sd.group), p2).status ==
        Status::holds);
  CHECK(join(sd.group, y, trivial_subgroup(sd.group)).is_subset_of(radical(sd.group, p2)));
}

TEST_CASE("monotonicity, characteristic residuals and quotients") {
  auto const p2 = GroupClass::p_group(2);
  CHECK(residual_monotone_check(standard_group(Symmetric{3}), p2).status == Status::holds);
  CHECK(residual_monotone_check(standard_group(Cyclic{1}), p2).status == Status::holds);
  auto const sd = semidirect_q_p2(SemidirectSpec::make(2, 3));
  CHECK(residual_monotone_check(sd.group, p2).status == Status::holds);
  CHECK(is_characteristic(sd.group, residual(sd.group, p2)));
}

TEST_CASE("sweeps over a few groups") {
  for (auto const& g : {standard_group(Symmetric{4}), standard_group(Dihedral{6}),
                        standard_group(ElementaryAbelian{2, 3})}) {
    for (auto const& c : classes()) {
      CHECK(residual_product_sweep(g, c).status == Status::holds);
      CHECK(subnormal_join_sweep(g, c).status == Status::holds);
    }
  }
}

TEST_CASE("report json") {
  Report r{"claim", Status::precondition_failed, nullptr};
  auto const j = to_json(r);
  CHECK(j["claim"] == "claim");
  CHECK(j["status"] == "precondition-failed");
}
