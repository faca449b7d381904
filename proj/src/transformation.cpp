#include "ngroup/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ngroup/errors.hpp"

namespace ngroup {

namespace {

std::size_t hash_points(std::span<Point const> xs) {
  // FNV-1a over the point values
  std::size_t h = 1469598103934665603ull;
  for (Point x : xs) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b9u;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

Transformation::Transformation(std::vector<Point> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw PreconditionError("transformation on an empty carrier");
  }
  for (Point x : images_) {
    if (x >= images_.size()) {
      throw PreconditionError("image " + std::to_string(x) +
                              " outside carrier of size " +
                              std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Transformation(std::move(images));
}

Transformation Transformation::parse(std::string_view text, bool one_based) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  auto fail = [&](std::string const& what) -> ParseError {
    return ParseError("cannot parse transformation \"" + std::string(text) +
                      "\": " + what);
  };

  skip();
  if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
  ++pos;
  std::vector<Point> images;
  skip();
  if (pos < text.size() && text[pos] == ']') throw fail("empty image list");
  while (true) {
    skip();
    long long value = 0;
    auto [end, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw fail("expected an integer");
    pos = static_cast<std::size_t>(end - text.data());
    if (one_based) --value;
    if (value < 0) throw fail("negative point");
    images.push_back(static_cast<Point>(value));
    skip();
    if (pos >= text.size()) throw fail("missing ']'");
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    throw fail("unexpected character");
  }
  skip();
  if (pos != text.size()) throw fail("trailing characters");
  for (Point x : images) {
    if (x >= images.size()) throw fail("point out of range");
  }
  return Transformation(std::move(images));
}

std::string Transformation::to_string(bool one_based) const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + (one_based ? 1 : 0));
  }
  out += ']';
  return out;
}

std::size_t TransformationHash::operator()(
    Transformation const& f) const noexcept {
  return hash_points(f.images());
}

Partition Partition::from_labels(std::span<Point const> labels) {
  if (labels.empty()) throw PreconditionError("partition of an empty carrier");
  std::vector<Point> block_of(labels.size());
  // labels may be arbitrary values; map them by first occurrence
  std::vector<std::pair<Point, Point>> seen;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](auto const& s) { return s.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], static_cast<Point>(seen.size()));
      block_of[x] = seen.back().second;
    } else {
      block_of[x] = it->second;
    }
  }
  return Partition(std::move(block_of), seen.size());
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Point> block_of(n);
  for (std::size_t i = 0; i < n; ++i) block_of[i] = static_cast<Point>(i);
  return Partition(std::move(block_of), n);
}

std::vector<std::vector<Point>> Partition::blocks() const {
  std::vector<std::vector<Point>> out(block_count_);
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    out[block_of_[x]].push_back(static_cast<Point>(x));
  }
  return out;
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.size() != size()) {
    throw DomainMismatch("partitions on carriers of different size");
  }
  std::vector<std::int64_t> target(block_count_, -1);
  for (std::size_t x = 0; x < size(); ++x) {
    auto& t = target[block_of_[x]];
    if (t == -1) {
      t = coarser.block_of_[x];
    } else if (t != coarser.block_of_[x]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string(bool one_based) const {
  std::ostringstream os;
  os << '{';
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) os << ',';
    os << '{';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) os << ',';
      os << bs[b][i] + (one_based ? 1 : 0);
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
  return hash_points(p.labels());
}

Transformation compose(Transformation const& f, Transformation const& g) {
  if (f.degree() != g.degree()) {
    throw DomainMismatch("cannot compose maps of degree " +
                         std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
  }
  std::vector<Point> images(f.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = f[g[x]];
  return Transformation(std::move(images));
}

Transformation power(Transformation const& f, std::size_t k) {
  if (k == 0) throw PreconditionError("power exponent must be positive");
  if (k <= 8) {
    Transformation result = f;
    for (std::size_t i = 1; i < k; ++i) result = compose(result, f);
    return result;
  }
  // powers of one map commute, so the multiplication order is irrelevant
  Transformation base = f;
  Transformation result = f;
  bool have = false;
  while (k > 0) {
    if (k & 1u) {
      result = have ? compose(result, base) : base;
      have = true;
    }
    k >>= 1u;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

ImageRank image_rank(Transformation const& f) {
  ImageRank out;
  out.image.assign(f.images().begin(), f.images().end());
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()),
                  out.image.end());
  out.rank = out.image.size();
  out.bijective = out.rank == f.degree();
  return out;
}

Partition kernel_partition(Transformation const& f) {
  return Partition::from_labels(f.images());
}

bool is_idempotent(Transformation const& f) {
  for (std::size_t x = 0; x < f.degree(); ++x) {
    if (f[f[x]] != f[x]) return false;
  }
  return true;
}

bool can_be_member(Transformation const& f) {
  return image_rank(f).image == image_rank(compose(f, f)).image;
}

bool can_be_identity(Transformation const& f) {
  return compose(f, f) == f;
}

BlockMap induced_map(Transformation const& f, Partition const& p) {
  if (f.degree() != p.size()) {
    throw DomainMismatch("map and partition on carriers of different size");
  }
  constexpr Point unset = static_cast<Point>(-1);
  BlockMap out(p.block_count(), unset);
  for (std::size_t x = 0; x < f.degree(); ++x) {
    Point const from = p.block_of(x);
    Point const to = p.block_of(f[x]);
    if (out[from] == unset) {
      out[from] = to;
    } else if (out[from] != to) {
      throw IllDefined("induced map of " + f.to_string() + " on " +
                       p.to_string() + " depends on the representative of block " +
                       std::to_string(from));
    }
  }
  return out;
}

bool is_identity_block_map(BlockMap const& m) {
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (m[b] != b) return false;
  }
  return true;
}

bool is_bijective_block_map(BlockMap const& m) {
  std::vector<bool> hit(m.size(), false);
  for (Point b : m) {
    if (b >= m.size() || hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

}  // namespace ngroup
