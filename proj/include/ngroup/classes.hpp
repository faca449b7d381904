#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ngroup/caps.hpp"
#include "ngroup/cayley.hpp"

namespace ngroup {

/// A class of finite groups given by a membership predicate. p-groups and
/// nilpotent groups are closed under subgroups, quotients and products of
/// normal members. The abelian class fails the last axiom and exists only
/// as a negative control for verify_shp_axioms.
class GroupClass {
 public:
  enum class Kind { p_group, nilpotent, abelian };

  /// Throws PreconditionError unless p is prime.
  static GroupClass p_group(unsigned p);
  static GroupClass nilpotent();
  static GroupClass non_shp_abelian();

  /// "p:<prime>" or "nilpotent". The abelian control is not parseable.
  static GroupClass parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  unsigned prime() const noexcept { return prime_; }
  std::string const& name() const noexcept { return name_; }
  bool assumes_shp() const noexcept { return kind_ != Kind::abelian; }

 private:
  GroupClass(Kind kind, unsigned prime, std::string name)
      : kind_(kind), prime_(prime), name_(std::move(name)) {}

  Kind kind_;
  unsigned prime_ = 0;
  std::string name_;
};

/// Nilpotency is decided by normality of every Sylow subgroup, which needs
/// all_subgroups and so respects caps.subgroups.
bool belongs(GroupClass const& c, CayleyGroup const& g,
             Caps const& caps = default_caps);
bool belongs(GroupClass const& c, CayleyGroup const& g, Subgroup const& h,
             Caps const& caps = default_caps);

enum class Status { holds, violated, precondition_failed };

std::string to_string(Status s);

struct Report {
  std::string claim;
  Status status = Status::holds;
  nlohmann::json witness;  // null when there is nothing to show
};

/// { "claim", "status", "witness" }
nlohmann::json to_json(Report const& r);

/// Checks subgroup-closure, quotient-closure and normal-product closure of
/// `c` over each library group. Violations are listed in the witness.
Report verify_shp_axioms(GroupClass const& c,
                         std::span<CayleyGroup const> library,
                         Caps const& caps = default_caps);

/// Smallest normal N with g/N in c. Computed both as the intersection of
/// the family and as its unique minimal member; a mismatch throws
/// TheoremViolation.
Subgroup residual(CayleyGroup const& g, GroupClass const& c,
                  Caps const& caps = default_caps);

/// Residual of h computed in h's own table, expressed in g's indices.
Subgroup residual_of(CayleyGroup const& g, Subgroup const& h,
                     GroupClass const& c, Caps const& caps = default_caps);

/// Largest normal subgroup in c, as the join of all normal c-subgroups.
/// The join must itself lie in c and be the unique maximal member.
Subgroup radical(CayleyGroup const& g, GroupClass const& c,
                 Caps const& caps = default_caps);

Subgroup radical_of(CayleyGroup const& g, Subgroup const& h,
                    GroupClass const& c, Caps const& caps = default_caps);

/// G = UV with U, V subnormal  =>  residual(G) = residual(U) residual(V).
Report check_residual_product(CayleyGroup const& g, Subgroup const& u,
                              Subgroup const& v, GroupClass const& c,
                              Caps const& caps = default_caps);

/// Same shape for radicals. Equality is not a theorem here; "violated" is
/// the expected outcome on the semidirect counterexample.
Report check_radical_product(CayleyGroup const& g, Subgroup const& u,
                             Subgroup const& v, GroupClass const& c,
                             Caps const& caps = default_caps);

/// Subnormal c-subgroups a, b lie in the radical and generate a c-group.
Report subnormal_join_in_class(CayleyGroup const& g, Subgroup const& a,
                               Subgroup const& b, GroupClass const& c,
                               Caps const& caps = default_caps);

/// Residual monotonicity over all subgroups, characteristic residual and
/// radical, and residual(g/n) == image of residual(g) for every normal n.
Report residual_monotone_check(CayleyGroup const& g, GroupClass const& c,
                               Caps const& caps = default_caps);

/// check_residual_product over every pair of subnormal subgroups (U, V)
/// with UV = G.
Report residual_product_sweep(CayleyGroup const& g, GroupClass const& c,
                              Caps const& caps = default_caps);

/// subnormal_join_in_class over every pair of subnormal c-subgroups.
Report subnormal_join_sweep(CayleyGroup const& g, GroupClass const& c,
                            Caps const& caps = default_caps);

}  // namespace ngroup
