#include "ngroup/cayley.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "ngroup/errors.hpp"
#include "ngroup/transgroup.hpp"

namespace ngroup {

struct SubgroupFactory {
  static Subgroup make(std::size_t parent_order, std::vector<Element> members) {
    return Subgroup(parent_order, std::move(members));
  }
};

namespace {

Subgroup closed_set(CayleyGroup const& g, std::vector<bool> const& in) {
  std::vector<Element> members;
  for (std::size_t x = 0; x < in.size(); ++x) {
    if (in[x]) members.push_back(static_cast<Element>(x));
  }
  return SubgroupFactory::make(g.order(), std::move(members));
}

void check_parent(CayleyGroup const& g, Subgroup const& h) {
  if (h.parent_order() != g.order()) {
    throw DomainMismatch("subgroup belongs to a group of order " +
                         std::to_string(h.parent_order()) + ", not " +
                         std::to_string(g.order()));
  }
}

// Greedy small generating set, preferring elements of large order.
std::vector<Element> generating_set(CayleyGroup const& g) {
  std::vector<Element> by_order(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) by_order[i] = static_cast<Element>(i);
  std::vector<std::size_t> orders(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    orders[i] = element_order(g, static_cast<Element>(i));
  }
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });
  std::vector<Element> gens;
  Subgroup h = trivial_subgroup(g);
  for (Element x : by_order) {
    if (h.size() == g.order()) break;
    if (!h.contains(x)) {
      gens.push_back(x);
      h = subgroup_generated(g, gens);
    }
  }
  return gens;
}

// Enumerates homomorphisms src -> dst that are bijective, calling `found`
// for each; stops early when `found` returns false.
void search_isomorphisms(
    CayleyGroup const& src, CayleyGroup const& dst,
    std::function<bool(std::vector<Element> const&)> const& found) {
  if (src.order() != dst.order()) return;
  std::size_t const order = src.order();
  auto const gens = generating_set(src);

  // spanning tree: every element is parent * gens[k]
  std::vector<Element> bfs{src.identity()};
  std::vector<std::pair<Element, std::size_t>> parent(order);
  std::vector<bool> seen(order, false);
  seen[src.identity()] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = src.mul(bfs[i], gens[k]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {bfs[i], k};
        bfs.push_back(y);
      }
    }
  }

  std::vector<std::size_t> dst_orders(order);
  for (std::size_t i = 0; i < order; ++i) {
    dst_orders[i] = element_order(dst, static_cast<Element>(i));
  }
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t const o = element_order(src, gens[k]);
    for (std::size_t i = 0; i < order; ++i) {
      if (dst_orders[i] == o) candidates[k].push_back(static_cast<Element>(i));
    }
  }

  std::vector<Element> images(gens.size());
  std::vector<Element> phi(order);
  std::vector<bool> hit(order);
  bool keep_going = true;

  std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (!keep_going) return;
    if (k == gens.size()) {
      phi[src.identity()] = dst.identity();
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        auto [p, gk] = parent[bfs[i]];
        phi[bfs[i]] = dst.mul(phi[p], images[gk]);
      }
      std::fill(hit.begin(), hit.end(), false);
      for (Element y : phi) {
        if (hit[y]) return;
        hit[y] = true;
      }
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (phi[src.mul(static_cast<Element>(a), static_cast<Element>(b))] !=
              dst.mul(phi[a], phi[b])) {
            return;
          }
        }
      }
      keep_going = found(phi);
      return;
    }
    for (Element c : candidates[k]) {
      images[k] = c;
      recurse(k + 1);
      if (!keep_going) return;
    }
  };
  recurse(0);
}

// Saturates a family of subgroups under pairwise joins with the seeds.
std::vector<Subgroup> join_saturation(CayleyGroup const& g,
                                      std::vector<Subgroup> seeds) {
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::set<Subgroup> found(seeds.begin(), seeds.end());
  std::vector<Subgroup> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Subgroup h = std::move(queue.back());
    queue.pop_back();
    for (auto const& s : seeds) {
      if (s.is_subset_of(h)) continue;
      Subgroup j = join(g, h, s);
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

CayleyGroup::CayleyGroup(std::vector<std::vector<Element>> const& table,
                         std::vector<std::string> labels)
    : order_(table.size()), labels_(std::move(labels)) {
  if (order_ == 0) throw PreconditionError("group table is empty");
  if (labels_.size() != order_) {
    throw PreconditionError("expected " + std::to_string(order_) +
                            " labels, got " + std::to_string(labels_.size()));
  }
  table_.reserve(order_ * order_);
  for (auto const& row : table) {
    if (row.size() != order_) throw PreconditionError("group table is not square");
    for (Element x : row) {
      if (x >= order_) throw PreconditionError("table entry out of range");
      table_.push_back(x);
    }
  }

  std::vector<bool> hit(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::fill(hit.begin(), hit.end(), false);
    for (std::size_t j = 0; j < order_; ++j) hit[table_[i * order_ + j]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw PreconditionError("row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(hit.begin(), hit.end(), false);
    for (std::size_t j = 0; j < order_; ++j) hit[table_[j * order_ + i]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw PreconditionError("column " + std::to_string(i) +
                              " is not a permutation");
    }
  }

  bool found_identity = false;
  for (std::size_t e = 0; e < order_ && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < order_ && ok; ++j) {
      ok = table_[e * order_ + j] == j && table_[j * order_ + e] == j;
    }
    if (ok) {
      identity_ = static_cast<Element>(e);
      found_identity = true;
    }
  }
  if (!found_identity) throw PreconditionError("group table has no identity");

  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw PreconditionError("multiplication is not associative at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              "," + std::to_string(c) + ")");
    }
  };
  if (order_ <= 128) {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        for (Element c = 0; c < order_; ++c) assoc(a, b, c);
      }
    }
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (int i = 0; i < 200'000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  // Latin square + identity: each row holds the identity exactly once
  inverses_.resize(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (table_[i * order_ + j] == identity_) {
        inverses_[i] = static_cast<Element>(j);
        break;
      }
    }
  }
}

std::vector<std::vector<Element>> CayleyGroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

Subgroup::Subgroup(CayleyGroup const& g, std::vector<Element> members)
    : members_(std::move(members)), parent_order_(g.order()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.back() >= g.order()) {
    throw PreconditionError("subgroup members out of range or empty");
  }
  if (!contains(g.identity())) {
    throw PreconditionError("subgroup does not contain the identity");
  }
  for (Element a : members_) {
    if (!contains(g.inverse(a))) {
      throw PreconditionError("subgroup is not closed under inverses");
    }
    for (Element b : members_) {
      if (!contains(g.mul(a, b))) {
        throw PreconditionError("subgroup is not closed under multiplication");
      }
    }
  }
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Subgroup trivial_subgroup(CayleyGroup const& g) {
  return SubgroupFactory::make(g.order(), {g.identity()});
}

Subgroup whole_group(CayleyGroup const& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all[i] = static_cast<Element>(i);
  return SubgroupFactory::make(g.order(), std::move(all));
}

Subgroup subgroup_generated(CayleyGroup const& g,
                            std::span<Element const> seeds) {
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (s >= g.order()) throw PreconditionError("seed outside the group");
    if (s != g.identity()) gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<bool> in(g.order(), false);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = true;
  // in a finite group, right multiplication by the seeds reaches inverses too
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(queue[i], s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return closed_set(g, in);
}

Subgroup join(CayleyGroup const& g, Subgroup const& a, Subgroup const& b) {
  check_parent(g, a);
  check_parent(g, b);
  std::vector<Element> seeds(a.members().begin(), a.members().end());
  seeds.insert(seeds.end(), b.members().begin(), b.members().end());
  return subgroup_generated(g, seeds);
}

Subgroup intersect(CayleyGroup const& g, Subgroup const& a,
                   Subgroup const& b) {
  check_parent(g, a);
  check_parent(g, b);
  std::vector<Element> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return SubgroupFactory::make(g.order(), std::move(out));
}

std::size_t element_order(CayleyGroup const& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

bool is_normal(CayleyGroup const& g, Subgroup const& h) {
  check_parent(g, h);
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element const xi = g.inverse(static_cast<Element>(x));
    for (Element m : h.members()) {
      if (!h.contains(g.mul(g.mul(static_cast<Element>(x), m), xi))) return false;
    }
  }
  return true;
}

Subgroup normal_closure_in(CayleyGroup const& g, Subgroup const& ambient,
                           Subgroup const& h) {
  check_parent(g, ambient);
  check_parent(g, h);
  std::vector<Element> conjugates;
  for (Element k : ambient.members()) {
    Element const ki = g.inverse(k);
    for (Element m : h.members()) conjugates.push_back(g.mul(g.mul(k, m), ki));
  }
  return subgroup_generated(g, conjugates);
}

Subgroup normal_closure(CayleyGroup const& g, Subgroup const& h) {
  return normal_closure_in(g, whole_group(g), h);
}

std::optional<std::size_t> subnormal_depth(CayleyGroup const& g,
                                           Subgroup const& h) {
  check_parent(g, h);
  Subgroup current = whole_group(g);
  std::size_t depth = 0;
  while (current != h) {
    Subgroup next = normal_closure_in(g, current, h);
    if (next == current) return std::nullopt;
    current = std::move(next);
    ++depth;
  }
  return depth;
}

Quotient quotient_group(CayleyGroup const& g, Subgroup const& n) {
  check_parent(g, n);
  if (!is_normal(g, n)) {
    throw PreconditionError("quotient by a subgroup that is not normal");
  }
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> coset(g.order(), unset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    auto const id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element m : n.members()) coset[g.mul(static_cast<Element>(x), m)] = id;
  }

  std::size_t const k = reps.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (coset[g.mul(static_cast<Element>(a), static_cast<Element>(b))] !=
          table[coset[a]][coset[b]]) {
        throw TheoremViolation("coset product depends on representatives");
      }
    }
  }
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(g.label(r) + "N");
  return Quotient{CayleyGroup(table, std::move(labels)), std::move(coset),
                  std::move(reps)};
}

Subgroup project(Quotient const& q, Subgroup const& h) {
  std::vector<Element> image;
  for (Element x : h.members()) image.push_back(q.projection[x]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return SubgroupFactory::make(q.group.order(), std::move(image));
}

ProductSet product_set(CayleyGroup const& g, Subgroup const& u,
                       Subgroup const& v) {
  check_parent(g, u);
  check_parent(g, v);
  std::vector<bool> in(g.order(), false);
  for (Element a : u.members()) {
    for (Element b : v.members()) in[g.mul(a, b)] = true;
  }
  ProductSet out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in[x]) out.elements.push_back(static_cast<Element>(x));
  }
  out.is_subgroup = true;
  for (Element a : out.elements) {
    for (Element b : out.elements) {
      if (!in[g.mul(a, b)]) {
        out.is_subgroup = false;
        return out;
      }
    }
  }
  return out;
}

std::vector<Subgroup> all_subgroups(CayleyGroup const& g, Caps const& caps) {
  if (g.order() > caps.subgroups) {
    throw CapExceeded("all_subgroups: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(caps.subgroups));
  }
  std::vector<Subgroup> cyclic;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element const e = static_cast<Element>(x);
    cyclic.push_back(subgroup_generated(g, std::span<Element const>(&e, 1)));
  }
  return join_saturation(g, std::move(cyclic));
}

std::vector<Subgroup> normal_subgroups(CayleyGroup const& g) {
  std::vector<Subgroup> seeds;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element const e = static_cast<Element>(x);
    seeds.push_back(
        normal_closure(g, subgroup_generated(g, std::span<Element const>(&e, 1))));
  }
  return join_saturation(g, std::move(seeds));
}

Subgroup derived_subgroup(CayleyGroup const& g) {
  std::vector<Element> commutators;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      auto const x = static_cast<Element>(a);
      auto const y = static_cast<Element>(b);
      commutators.push_back(
          g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y)));
    }
  }
  return subgroup_generated(g, commutators);
}

std::vector<std::vector<Element>> automorphism_group(CayleyGroup const& g,
                                                     Caps const& caps) {
  if (g.order() > caps.automorphisms) {
    throw CapExceeded("automorphism_group: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(caps.automorphisms));
  }
  std::vector<std::vector<Element>> out;
  search_isomorphisms(g, g, [&](std::vector<Element> const& phi) {
    out.push_back(phi);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_characteristic(CayleyGroup const& g, Subgroup const& h,
                       Caps const& caps) {
  check_parent(g, h);
  for (auto const& phi : automorphism_group(g, caps)) {
    for (Element x : h.members()) {
      if (!h.contains(phi[x])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(CayleyGroup const& a,
                                                     CayleyGroup const& b,
                                                     Caps const& caps) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > caps.isomorphism) {
    throw CapExceeded("isomorphism test: order " + std::to_string(a.order()) +
                      " exceeds cap " + std::to_string(caps.isomorphism));
  }
  std::vector<std::size_t> census_a(a.order() + 1), census_b(b.order() + 1);
  for (std::size_t x = 0; x < a.order(); ++x) {
    ++census_a[element_order(a, static_cast<Element>(x))];
    ++census_b[element_order(b, static_cast<Element>(x))];
  }
  if (census_a != census_b) return std::nullopt;
  std::optional<std::vector<Element>> out;
  search_isomorphisms(a, b, [&](std::vector<Element> const& phi) {
    out = phi;
    return false;
  });
  return out;
}

bool is_isomorphic(CayleyGroup const& a, CayleyGroup const& b,
                   Caps const& caps) {
  return find_isomorphism(a, b, caps).has_value();
}

Embedded subgroup_as_group(CayleyGroup const& g, Subgroup const& h) {
  check_parent(g, h);
  std::vector<Element> embed(h.members().begin(), h.members().end());
  std::vector<Element> local(g.order(), static_cast<Element>(-1));
  for (std::size_t i = 0; i < embed.size(); ++i) {
    local[embed[i]] = static_cast<Element>(i);
  }
  std::vector<std::vector<Element>> table(embed.size(),
                                          std::vector<Element>(embed.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < embed.size(); ++i) {
    labels.push_back(g.label(embed[i]));
    for (std::size_t j = 0; j < embed.size(); ++j) {
      table[i][j] = local[g.mul(embed[i], embed[j])];
    }
  }
  return Embedded{CayleyGroup(table, std::move(labels)), std::move(embed)};
}

Subgroup transport(CayleyGroup const& g, Embedded const& e,
                   Subgroup const& local) {
  check_parent(e.group, local);
  std::vector<Element> members;
  for (Element x : local.members()) members.push_back(e.embed[x]);
  std::sort(members.begin(), members.end());
  return SubgroupFactory::make(g.order(), std::move(members));
}

CayleyGroup from_transgroup(TransGroup const& g) {
  std::size_t const order = g.order();
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) {
    labels.push_back(g.elements()[i].to_string());
    for (std::size_t j = 0; j < order; ++j) {
      table[i][j] = static_cast<Element>(g.product(i, j));
    }
  }
  return CayleyGroup(table, std::move(labels));
}

nlohmann::json to_json(CayleyGroup const& g) {
  return {{"order", g.order()}, {"labels", g.labels()}, {"table", g.rows()}};
}

CayleyGroup cayley_from_json(nlohmann::json const& j) {
  try {
    auto const order = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
    }
    if (table.size() != order) {
      throw ParseError("group JSON: \"order\" does not match the table");
    }
    return CayleyGroup(table, std::move(labels));
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("group JSON: ") + e.what());
  } catch (PreconditionError const& e) {
    throw ParseError(std::string("group JSON: ") + e.what());
  }
}

}  // namespace ngroup
