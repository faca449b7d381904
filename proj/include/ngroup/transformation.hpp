#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ngroup {

/// A point of the carrier {0, ..., n-1}.
using Point = std::uint32_t;

/// Total map on {0, ..., n-1}, stored as its image list.
///
/// Composition follows the "f after g" convention throughout the library:
/// compose(f, g)(x) == f(g(x)).
class Transformation {
 public:
  /// Throws PreconditionError if `images` is empty or has an entry >= size.
  explicit Transformation(std::vector<Point> images);

  static Transformation identity(std::size_t n);

  /// Parses "[0, 0, 2]". With `one_based`, entries are read as 1..n.
  static Transformation parse(std::string_view text, bool one_based = false);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  std::string to_string(bool one_based = false) const;

  friend bool operator==(Transformation const&,
                         Transformation const&) = default;
  friend auto operator<=>(Transformation const&,
                          Transformation const&) = default;

 private:
  std::vector<Point> images_;
};

struct TransformationHash {
  std::size_t operator()(Transformation const& f) const noexcept;
};

/// Equivalence relation on {0, ..., n-1} in first-occurrence canonical
/// labelling: block_of(0) == 0 and every new label is the smallest unused
/// one. Two partitions are equal iff their label sequences are equal.
class Partition {
 public:
  /// Canonicalises an arbitrary labelling (equal labels = same block).
  static Partition from_labels(std::span<Point const> labels);
  static Partition discrete(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  Point block_of(std::size_t x) const noexcept { return block_of_[x]; }
  std::span<Point const> labels() const noexcept { return block_of_; }

  bool is_discrete() const noexcept { return block_count_ == size(); }

  /// Blocks in label order, each sorted ascending.
  std::vector<std::vector<Point>> blocks() const;

  /// True if every block of *this lies inside a block of `coarser`.
  bool refines(Partition const& coarser) const;

  std::string to_string(bool one_based = false) const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend auto operator<=>(Partition const&, Partition const&) = default;

 private:
  Partition(std::vector<Point> block_of, std::size_t block_count)
      : block_of_(std::move(block_of)), block_count_(block_count) {}

  std::vector<Point> block_of_;
  std::size_t block_count_ = 0;
};

struct PartitionHash {
  std::size_t operator()(Partition const& p) const noexcept;
};

struct ImageRank {
  std::vector<Point> image;  // sorted, distinct
  std::size_t rank = 0;
  bool bijective = false;
};

/// Map on block labels of a partition: block b goes to block_map[b].
using BlockMap = std::vector<Point>;

Transformation compose(Transformation const& f, Transformation const& g);

/// k-fold composite of f with itself; k == 0 is rejected.
Transformation power(Transformation const& f, std::size_t k);

ImageRank image_rank(Transformation const& f);

/// x ~ y  iff  f(x) == f(y). Block count equals the rank of f.
Partition kernel_partition(Transformation const& f);

bool is_idempotent(Transformation const& f);

/// Some group of transformations contains f iff Im(f) == Im(f^2).
bool can_be_member(Transformation const& f);

/// Some group of transformations has f as identity iff f^2 == f.
bool can_be_identity(Transformation const& f);

/// The induced map [x] -> [f(x)] on the blocks of p. Throws IllDefined
/// when two points of one block land in different blocks.
BlockMap induced_map(Transformation const& f, Partition const& p);

bool is_identity_block_map(BlockMap const& m);
bool is_bijective_block_map(BlockMap const& m);

}  // namespace ngroup
