#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngroup/caps.hpp"

namespace ngroup {

class TransGroup;

/// Index of an element in a CayleyGroup.
using Element = std::uint32_t;

/// Finite group given by its multiplication table.
class CayleyGroup {
 public:
  /// Validates that `table` is a Latin square with an identity and that
  /// multiplication is associative (every triple up to order 128, a fixed
  /// random sample above). Throws PreconditionError otherwise.
  CayleyGroup(std::vector<std::vector<Element>> const& table,
              std::vector<std::string> labels);

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  std::string const& label(Element a) const noexcept { return labels_[a]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }

  std::vector<std::vector<Element>> rows() const;

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
};

/// Subset of a CayleyGroup closed under the table and inverses, stored as a
/// sorted index set. Operations take the parent group alongside.
class Subgroup {
 public:
  /// Validates closure against `g`; throws PreconditionError otherwise.
  Subgroup(CayleyGroup const& g, std::vector<Element> members);

  std::span<Element const> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  bool contains(Element x) const;
  bool is_subset_of(Subgroup const& other) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.members_ == b.members_;
  }
  friend auto operator<=>(Subgroup const& a, Subgroup const& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.members_ <=> b.members_;
  }

 private:
  friend struct SubgroupFactory;
  Subgroup(std::size_t parent_order, std::vector<Element> members)
      : members_(std::move(members)), parent_order_(parent_order) {}

  std::vector<Element> members_;
  std::size_t parent_order_ = 0;
};

Subgroup trivial_subgroup(CayleyGroup const& g);
Subgroup whole_group(CayleyGroup const& g);

/// Smallest subgroup containing `seeds`.
Subgroup subgroup_generated(CayleyGroup const& g,
                            std::span<Element const> seeds);
Subgroup join(CayleyGroup const& g, Subgroup const& a, Subgroup const& b);
Subgroup intersect(CayleyGroup const& g, Subgroup const& a,
                   Subgroup const& b);

std::size_t element_order(CayleyGroup const& g, Element x);

bool is_normal(CayleyGroup const& g, Subgroup const& h);

/// Smallest normal subgroup of g containing h.
Subgroup normal_closure(CayleyGroup const& g, Subgroup const& h);

/// Subgroup generated by the conjugates of h by elements of `ambient`.
Subgroup normal_closure_in(CayleyGroup const& g, Subgroup const& ambient,
                           Subgroup const& h);

/// Length of the descending normal-closure chain from g down to h, or
/// nullopt when the chain stabilises strictly above h. 0 iff h == g.
std::optional<std::size_t> subnormal_depth(CayleyGroup const& g,
                                           Subgroup const& h);

struct Quotient {
  CayleyGroup group;
  std::vector<Element> projection;       // element of g -> coset index
  std::vector<Element> representatives;  // smallest element of each coset
};

/// Coset table of g/n. Throws PreconditionError if n is not normal.
Quotient quotient_group(CayleyGroup const& g, Subgroup const& n);

/// Image of h under a quotient projection.
Subgroup project(Quotient const& q, Subgroup const& h);

struct ProductSet {
  std::vector<Element> elements;  // sorted
  bool is_subgroup = false;
};

ProductSet product_set(CayleyGroup const& g, Subgroup const& u,
                       Subgroup const& v);

/// Every subgroup, sorted by (size, members). Order above caps.subgroups
/// throws CapExceeded.
std::vector<Subgroup> all_subgroups(CayleyGroup const& g,
                                    Caps const& caps = default_caps);

/// Every normal subgroup, sorted by (size, members).
std::vector<Subgroup> normal_subgroups(CayleyGroup const& g);

/// Commutator subgroup.
Subgroup derived_subgroup(CayleyGroup const& g);

/// Automorphisms as permutations of element indices; the identity map is
/// always first.
std::vector<std::vector<Element>> automorphism_group(
    CayleyGroup const& g, Caps const& caps = default_caps);

bool is_characteristic(CayleyGroup const& g, Subgroup const& h,
                       Caps const& caps = default_caps);

/// A bijection phi with phi(a*b) == phi(a)*phi(b), if one exists.
std::optional<std::vector<Element>> find_isomorphism(
    CayleyGroup const& a, CayleyGroup const& b,
    Caps const& caps = default_caps);
bool is_isomorphic(CayleyGroup const& a, CayleyGroup const& b,
                   Caps const& caps = default_caps);

/// h with its own multiplication table; embed[i] is the parent index of
/// local element i.
struct Embedded {
  CayleyGroup group;
  std::vector<Element> embed;
};

Embedded subgroup_as_group(CayleyGroup const& g, Subgroup const& h);

/// Image in g of a subgroup of an embedded group.
Subgroup transport(CayleyGroup const& g, Embedded const& e,
                   Subgroup const& local);

/// Table of a transformation group, indexed like g.elements().
CayleyGroup from_transgroup(TransGroup const& g);

/// { "order", "labels", "table" }
nlohmann::json to_json(CayleyGroup const& g);
CayleyGroup cayley_from_json(nlohmann::json const& j);

}  // namespace ngroup
