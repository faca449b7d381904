#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ngroup/caps.hpp"
#include "ngroup/transformation.hpp"

namespace ngroup {

/// A finite set of transformations verified to be a group under
/// composition. Only check_group constructs one, so every instance has
/// passed closure, identity and inverse checks. Bijective members are
/// allowed; NG-ness is the separate predicate is_ng_group.
class TransGroup {
 public:
  std::size_t degree() const noexcept { return elements_.front().degree(); }
  std::size_t order() const noexcept { return elements_.size(); }

  /// Sorted by image sequence.
  std::vector<Transformation> const& elements() const noexcept {
    return elements_;
  }
  std::size_t identity_index() const noexcept { return identity_; }
  Transformation const& identity() const noexcept {
    return elements_[identity_];
  }

  /// Index of elements()[i] * elements()[j], i.e. compose(e_i, e_j).
  std::size_t product(std::size_t i, std::size_t j) const noexcept {
    return table_[i * order() + j];
  }
  std::size_t inverse(std::size_t i) const noexcept { return inverses_[i]; }

  std::optional<std::size_t> index_of(Transformation const& f) const;

  /// The kernel partition and image shared by all members.
  Partition const& kernel() const noexcept { return kernel_; }
  std::vector<Point> const& image() const noexcept { return image_; }

 private:
  friend struct GroupChecker;
  TransGroup() = default;

  std::vector<Transformation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
  Partition kernel_ = Partition::discrete(1);
  std::vector<Point> image_;
};

enum class GroupAxiom { not_closed, no_identity, no_inverse, mixed_kernel };

std::string to_string(GroupAxiom axiom);

/// First failed axiom with the witnessing element(s).
struct GroupRejection {
  GroupAxiom axiom;
  std::optional<Transformation> left;
  std::optional<Transformation> right;
  std::string message;
};

using GroupCheck = std::variant<TransGroup, GroupRejection>;

/// Axiom-by-axiom group test. Duplicates in `s` are ignored. Throws
/// PreconditionError on an empty set and DomainMismatch on mixed degrees.
GroupCheck check_group(std::span<Transformation const> s);

/// check_group, throwing PreconditionError with the rejection message.
TransGroup require_group(std::span<Transformation const> s);

/// Smallest composition-closed superset of `gens`, sorted.
std::vector<Transformation> generate_closure(
    std::span<Transformation const> gens,
    std::size_t cap = default_caps.closure);

/// No member is bijective.
bool is_ng_group(TransGroup const& g);

struct KernelImage {
  Partition kernel;
  std::vector<Point> image;
};

/// Recomputes kernel and image for every member and checks they agree;
/// disagreement throws TheoremViolation.
KernelImage common_kernel_image(TransGroup const& g);

/// The induced permutation group on the quotient set.
struct PermGroup {
  std::size_t m = 0;               // number of blocks
  std::vector<BlockMap> perms;     // sorted
  std::vector<std::size_t> label;  // label[i] = index in perms of rho(e_i)
};

/// f -> induced map of f on the common kernel. Verifies bijectivity of each
/// image, injectivity, and the homomorphism property (full table for
/// order <= 720, sampled above); failures throw TheoremViolation.
PermGroup rho(TransGroup const& g);

/// { "n", "order", "identity", "elements", "kernel_blocks", "image",
///   "is_ng", "quotient_order" }
nlohmann::json group_report(TransGroup const& g, bool one_based = false);

}  // namespace ngroup
