#include "ngroup/transgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ngroup/errors.hpp"

namespace ngroup {

namespace {

std::optional<std::size_t> find_sorted(std::vector<Transformation> const& xs,
                                       Transformation const& f) {
  auto it = std::lower_bound(xs.begin(), xs.end(), f);
  if (it == xs.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - xs.begin());
}

BlockMap compose_blocks(BlockMap const& a, BlockMap const& b) {
  BlockMap out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

std::string to_string(GroupAxiom axiom) {
  switch (axiom) {
    case GroupAxiom::not_closed:
      return "not-closed";
    case GroupAxiom::no_identity:
      return "no-identity";
    case GroupAxiom::no_inverse:
      return "no-inverse";
    case GroupAxiom::mixed_kernel:
      return "mixed-kernel";
  }
  return "unknown";
}

std::optional<std::size_t> TransGroup::index_of(Transformation const& f) const {
  return find_sorted(elements_, f);
}

struct GroupChecker {
  static GroupCheck run(std::span<Transformation const> s) {
    if (s.empty()) throw PreconditionError("check_group on an empty set");
    std::size_t const n = s.front().degree();
    for (auto const& f : s) {
      if (f.degree() != n) {
        throw DomainMismatch("check_group: maps of degree " +
                             std::to_string(n) + " and " +
                             std::to_string(f.degree()));
      }
    }

    TransGroup g;
    g.elements_.assign(s.begin(), s.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    g.elements_.erase(std::unique(g.elements_.begin(), g.elements_.end()),
                      g.elements_.end());
    auto const& els = g.elements_;
    std::size_t const order = els.size();

    g.table_.resize(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        auto const k = find_sorted(els, compose(els[i], els[j]));
        if (!k) {
          return GroupRejection{GroupAxiom::not_closed, els[i], els[j],
                                "product " + els[i].to_string() + " * " +
                                    els[j].to_string() + " leaves the set"};
        }
        g.table_[i * order + j] = static_cast<std::uint32_t>(*k);
      }
    }

    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < order && !identity; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < order && ok; ++j) {
        ok = g.table_[e * order + j] == j && g.table_[j * order + e] == j;
      }
      if (ok) identity = e;
    }
    if (!identity) {
      return GroupRejection{GroupAxiom::no_identity, std::nullopt,
                            std::nullopt, "no two-sided identity"};
    }
    g.identity_ = *identity;

    g.inverses_.assign(order, order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        if (g.table_[i * order + j] == g.identity_ &&
            g.table_[j * order + i] == g.identity_) {
          g.inverses_[i] = j;
          break;
        }
      }
      if (g.inverses_[i] == order) {
        return GroupRejection{GroupAxiom::no_inverse, els[i], std::nullopt,
                              els[i].to_string() + " has no inverse"};
      }
    }

    g.kernel_ = kernel_partition(g.identity());
    g.image_ = image_rank(g.identity()).image;
    for (auto const& f : els) {
      if (kernel_partition(f) != g.kernel_ || image_rank(f).image != g.image_) {
        return GroupRejection{GroupAxiom::mixed_kernel, f, g.identity(),
                              f.to_string() +
                                  " disagrees with the identity's kernel or "
                                  "image"};
      }
    }
    return g;
  }
};

GroupCheck check_group(std::span<Transformation const> s) {
  return GroupChecker::run(s);
}

TransGroup require_group(std::span<Transformation const> s) {
  auto result = check_group(s);
  if (auto* r = std::get_if<GroupRejection>(&result)) {
    throw PreconditionError("not a group (" + to_string(r->axiom) +
                            "): " + r->message);
  }
  return std::get<TransGroup>(std::move(result));
}

std::vector<Transformation> generate_closure(
    std::span<Transformation const> gens, std::size_t cap) {
  if (cap < 1) throw PreconditionError("closure cap must be positive");
  if (gens.empty()) return {};
  std::size_t const n = gens.front().degree();
  for (auto const& f : gens) {
    if (f.degree() != n) {
      throw DomainMismatch("generators of different degree");
    }
  }

  std::unordered_set<Transformation, TransformationHash> seen;
  std::deque<Transformation> queue;
  auto push = [&](Transformation f) {
    if (seen.insert(f).second) {
      if (seen.size() > cap) {
        throw CapExceeded("closure exceeds " + std::to_string(cap) +
                          " elements");
      }
      queue.push_back(std::move(f));
    }
  };
  for (auto const& f : gens) push(f);
  // every product of generators is a word w*g, so right multiplication by
  // the generators reaches the whole semigroup
  while (!queue.empty()) {
    Transformation w = std::move(queue.front());
    queue.pop_front();
    for (auto const& g : gens) push(compose(w, g));
  }
  std::vector<Transformation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ng_group(TransGroup const& g) {
  return image_rank(g.identity()).rank < g.degree();
}

KernelImage common_kernel_image(TransGroup const& g) {
  KernelImage out{kernel_partition(g.identity()),
                  image_rank(g.identity()).image};
  for (auto const& f : g.elements()) {
    if (kernel_partition(f) != out.kernel) {
      throw TheoremViolation("member " + f.to_string() +
                             " has a kernel different from the identity's");
    }
    if (image_rank(f).image != out.image) {
      throw TheoremViolation("member " + f.to_string() +
                             " has an image different from the identity's");
    }
  }
  return out;
}

PermGroup rho(TransGroup const& g) {
  auto const common = common_kernel_image(g);
  PermGroup out;
  out.m = common.kernel.block_count();

  std::vector<BlockMap> hats;
  hats.reserve(g.order());
  for (auto const& f : g.elements()) {
    BlockMap hat = induced_map(f, common.kernel);
    if (!is_bijective_block_map(hat)) {
      throw TheoremViolation("induced map of " + f.to_string() +
                             " is not a bijection of the quotient set");
    }
    hats.push_back(std::move(hat));
  }
  out.perms = hats;
  std::sort(out.perms.begin(), out.perms.end());
  out.perms.erase(std::unique(out.perms.begin(), out.perms.end()),
                  out.perms.end());
  if (out.perms.size() != g.order()) {
    throw TheoremViolation("rho is not injective: " +
                           std::to_string(out.perms.size()) + " images for " +
                           std::to_string(g.order()) + " elements");
  }
  out.label.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.label[i] = static_cast<std::size_t>(
        std::lower_bound(out.perms.begin(), out.perms.end(), hats[i]) -
        out.perms.begin());
  }

  if (!is_identity_block_map(hats[g.identity_index()])) {
    throw TheoremViolation("rho does not send the identity to the identity");
  }

  std::size_t const order = g.order();
  auto check_pair = [&](std::size_t i, std::size_t j) {
    if (compose_blocks(hats[i], hats[j]) != hats[g.product(i, j)]) {
      throw TheoremViolation("rho(fg) != rho(f) rho(g) for f = " +
                             g.elements()[i].to_string() + ", g = " +
                             g.elements()[j].to_string());
    }
  };
  if (order <= 720) {
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) check_pair(i, j);
    }
  } else {
    // deterministic sample: a full row and column through every 97th element
    for (std::size_t i = 0; i < order; i += 97) {
      for (std::size_t j = 0; j < order; ++j) {
        check_pair(i, j);
        check_pair(j, i);
      }
    }
  }
  return out;
}

nlohmann::json group_report(TransGroup const& g, bool one_based) {
  auto const shift = one_based ? 1u : 0u;
  nlohmann::json elements = nlohmann::json::array();
  for (auto const& f : g.elements()) elements.push_back(f.to_string(one_based));
  nlohmann::json blocks = nlohmann::json::array();
  for (auto const& b : g.kernel().blocks()) {
    nlohmann::json block = nlohmann::json::array();
    for (Point x : b) block.push_back(x + shift);
    blocks.push_back(block);
  }
  nlohmann::json image = nlohmann::json::array();
  for (Point x : g.image()) image.push_back(x + shift);
  return {{"n", g.degree()},
          {"order", g.order()},
          {"identity", g.identity().to_string(one_based)},
          {"elements", elements},
          {"kernel_blocks", blocks},
          {"image", image},
          {"is_ng", is_ng_group(g)},
          {"quotient_order", g.kernel().block_count()}};
}

}  // namespace ngroup
