#include "ngroup/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "ngroup/errors.hpp"
#include "ngroup/numeric.hpp"

namespace ngroup {

namespace {

void check_order(std::uint64_t order, Caps const& caps) {
  if (order > caps.table) {
    throw CapExceeded("group of order " + std::to_string(order) +
                      " exceeds table cap " + std::to_string(caps.table));
  }
}

std::string power_label(char symbol, std::uint64_t k) {
  if (k == 0) return "";
  std::string s(1, symbol);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string join_words(std::vector<std::string> const& parts) {
  std::string out;
  for (auto const& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out.empty() ? "e" : out;
}

std::string cycle_notation(std::vector<std::size_t> const& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1u;
  }
  return r;
}

Report step(std::string claim, bool ok, nlohmann::json witness = nullptr) {
  return Report{std::move(claim), ok ? Status::holds : Status::violated,
                std::move(witness)};
}

}  // namespace

CayleyGroup standard_group(Cyclic kind, Caps const& caps) {
  if (kind.m < 1) throw PreconditionError("cyclic group needs m >= 1");
  check_order(kind.m, caps);
  std::size_t const m = kind.m;
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(join_words({power_label('r', i)}));
    for (std::size_t j = 0; j < m; ++j) table[i][j] = static_cast<Element>((i + j) % m);
  }
  return CayleyGroup(table, std::move(labels));
}

CayleyGroup standard_group(ElementaryAbelian kind, Caps const& caps) {
  if (!is_prime(kind.p)) throw PreconditionError("elementary abelian group needs a prime");
  std::uint64_t const order = ipow(kind.p, kind.k);
  check_order(order, caps);
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(kind.k);
    for (std::size_t i = kind.k; i-- > 0;) {
      d[i] = x % kind.p;
      x /= kind.p;
    }
    return d;
  };
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    auto const da = digits(a);
    std::string label = "(";
    for (std::size_t i = 0; i < kind.k; ++i) {
      if (i) label += ',';
      label += std::to_string(da[i]);
    }
    labels.push_back(label + ")");
    for (std::size_t b = 0; b < order; ++b) {
      auto const db = digits(b);
      std::size_t sum = 0;
      for (std::size_t i = 0; i < kind.k; ++i) sum = sum * kind.p + (da[i] + db[i]) % kind.p;
      table[a][b] = static_cast<Element>(sum);
    }
  }
  return CayleyGroup(table, std::move(labels));
}

CayleyGroup standard_group(Symmetric kind, Caps const& caps) {
  if (kind.m < 1) throw PreconditionError("symmetric group needs m >= 1");
  if (kind.m > 20) throw CapExceeded("symmetric group degree too large");
  check_order(factorial(kind.m), caps);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(kind.m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(perms.size(),
                                          std::vector<Element>(perms.size()));
  std::vector<std::string> labels;
  std::vector<std::size_t> prod(kind.m);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    labels.push_back(cycle_notation(perms[i]));
    for (std::size_t j = 0; j < perms.size(); ++j) {
      // (s t)(x) = s(t(x))
      for (std::size_t x = 0; x < kind.m; ++x) prod[x] = perms[i][perms[j][x]];
      table[i][j] = index.at(prod);
    }
  }
  return CayleyGroup(table, std::move(labels));
}

CayleyGroup standard_group(Dihedral kind, Caps const& caps) {
  if (kind.m < 1) throw PreconditionError("dihedral group needs m >= 1");
  std::size_t const m = kind.m;
  check_order(2 * m, caps);
  // element i + m*a is r^i s^a, with s r s = r^-1
  std::vector<std::vector<Element>> table(2 * m, std::vector<Element>(2 * m));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < 2 * m; ++x) {
    std::size_t const i = x % m, a = x / m;
    labels.push_back(join_words({power_label('r', i), a ? "s" : ""}));
    for (std::size_t y = 0; y < 2 * m; ++y) {
      std::size_t const j = y % m, b = y / m;
      std::size_t const rot = a ? (i + m - j) % m : (i + j) % m;
      table[x][y] = static_cast<Element>(rot + m * (a ^ b));
    }
  }
  return CayleyGroup(table, std::move(labels));
}

SemidirectSpec SemidirectSpec::make(unsigned p, unsigned q,
                                    std::optional<unsigned> a) {
  if (!is_prime(p) || !is_prime(q)) {
    throw PreconditionError("p and q must be primes");
  }
  if (q % p != 1) {
    throw PreconditionError("q = " + std::to_string(q) + " is not 1 mod p = " +
                            std::to_string(p));
  }
  auto valid = [&](unsigned c) {
    return c > 1 && c < q && powmod(c, p, q) == 1;
  };
  if (a) {
    if (!valid(*a)) {
      throw PreconditionError("a = " + std::to_string(*a) +
                              " does not have multiplicative order p mod q");
    }
    return SemidirectSpec{p, q, *a};
  }
  for (unsigned c = 2; c < q; ++c) {
    if (valid(c)) return SemidirectSpec{p, q, c};
  }
  throw PreconditionError("no multiplier of order p mod q");
}

SemidirectSpec SemidirectSpec::parse(std::string_view text) {
  std::vector<unsigned> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const comma = text.find(',', pos);
    auto part = text.substr(pos, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) {
      part.remove_prefix(1);
    }
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) {
      part.remove_suffix(1);
    }
    unsigned v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw ParseError("bad semidirect spec \"" + std::string(text) +
                       "\" (expected p,q[,a])");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() < 2 || values.size() > 3) {
    throw ParseError("bad semidirect spec \"" + std::string(text) +
                     "\" (expected p,q[,a])");
  }
  return make(values[0], values[1],
              values.size() == 3 ? std::optional<unsigned>(values[2]) : std::nullopt);
}

std::string SemidirectSpec::to_string() const {
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(a);
}

SemidirectGroup semidirect_q_p2(SemidirectSpec const& spec) {
  // re-validate: the struct is an aggregate and may be filled by hand
  auto const s = SemidirectSpec::make(spec.p, spec.q, spec.a);
  std::size_t const p = s.p, q = s.q;
  std::size_t const order = q * p * p;
  auto index = [&](std::size_t n, std::size_t i, std::size_t j) {
    return static_cast<Element>((n * p + i) * p + j);
  };
  std::vector<std::size_t> a_pow(p);
  for (std::size_t i = 0; i < p; ++i) a_pow[i] = powmod(s.a, i, q);

  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (std::size_t n1 = 0; n1 < q; ++n1) {
    for (std::size_t i1 = 0; i1 < p; ++i1) {
      for (std::size_t j1 = 0; j1 < p; ++j1) {
        Element const e1 = index(n1, i1, j1);
        labels[e1] = join_words({power_label('z', n1), power_label('x', i1),
                                 power_label('y', j1)});
        for (std::size_t n2 = 0; n2 < q; ++n2) {
          for (std::size_t i2 = 0; i2 < p; ++i2) {
            for (std::size_t j2 = 0; j2 < p; ++j2) {
              table[e1][index(n2, i2, j2)] =
                  index((n1 + a_pow[i1] * n2) % q, (i1 + i2) % p, (j1 + j2) % p);
            }
          }
        }
      }
    }
  }
  CayleyGroup g(table, std::move(labels));
  Element const z = index(1, 0, 0);
  Element const x = index(0, 1, 0);
  Element const y = index(0, 0, 1);
  Element const xy = g.mul(x, y);
  std::vector<Element> zx{z, x}, zxy{z, xy}, xy_only{xy}, z_only{z}, x_y{x, y};
  return SemidirectGroup{s,
                         g,
                         subgroup_generated(g, z_only),
                         subgroup_generated(g, x_y),
                         subgroup_generated(g, zx),
                         subgroup_generated(g, zxy),
                         subgroup_generated(g, xy_only),
                         x,
                         y};
}

Theorem33Report theorem33_report(SemidirectSpec const& spec, Caps const& caps) {
  auto const sd = semidirect_q_p2(spec);
  auto const& g = sd.group;
  auto const chi = GroupClass::p_group(sd.spec.p);
  std::size_t const p = sd.spec.p;

  Theorem33Report out;
  out.spec = sd.spec;
  auto describe = [&](Subgroup const& h) {
    std::vector<std::string> labels;
    for (Element e : h.members()) labels.push_back(g.label(e));
    return nlohmann::json{{"order", h.size()}, {"labels", labels}};
  };

  // structural sanity of the construction
  bool faithful = true, trivial = true;
  for (Element n : sd.n.members()) {
    Element const xn = g.mul(g.mul(sd.x, n), g.inverse(sd.x));
    if (n != g.identity() && xn == n) faithful = false;
    if (g.mul(sd.y, n) != g.mul(n, sd.y)) trivial = false;
  }
  out.steps.push_back(step("N is normal of order q, x acts on N fixed-point-freely, "
                           "y centralises N",
                           is_normal(g, sd.n) && sd.n.size() == sd.spec.q &&
                               faithful && trivial));

  auto const du = subnormal_depth(g, sd.u);
  auto const dv = subnormal_depth(g, sd.v);
  out.steps.push_back(step("U = N<x> is normal in G (subnormal depth 1)",
                           is_normal(g, sd.u) && du == 1u,
                           {{"U", describe(sd.u)}}));
  out.steps.push_back(step("V = N<xy> is normal in G (subnormal depth 1)",
                           is_normal(g, sd.v) && dv == 1u,
                           {{"V", describe(sd.v)}}));
  out.steps.push_back(step("G = UV",
                           product_set(g, sd.u, sd.v).elements.size() == g.order()));

  auto const derived = derived_subgroup(g);
  out.steps.push_back(step("G' <= N", derived.is_subset_of(sd.n),
                           {{"derived", describe(derived)}}));

  std::vector<Element> y_only{sd.y};
  auto const y_group = subgroup_generated(g, y_only);
  auto const og = radical(g, chi, caps);
  out.steps.push_back(step("O_p(G) = <y>, of order p", og == y_group && og.size() == p,
                           {{"O_p(G)", describe(og)}}));
  auto const ou = radical_of(g, sd.u, chi, caps);
  auto const ov = radical_of(g, sd.v, chi, caps);
  out.steps.push_back(step("O_p(U) = 1", ou.size() == 1, {{"O_p(U)", describe(ou)}}));
  out.steps.push_back(step("O_p(V) = 1", ov.size() == 1, {{"O_p(V)", describe(ov)}}));

  auto const radical_product = check_radical_product(g, sd.u, sd.v, chi, caps);
  out.steps.push_back(step("O_p(G) != O_p(U) O_p(V)",
                           radical_product.status == Status::violated,
                           radical_product.witness));

  auto const residual_product = check_residual_product(g, sd.u, sd.v, chi, caps);
  out.steps.push_back(step("residual(G) = residual(U) residual(V) for " + chi.name(),
                           residual_product.status == Status::holds,
                           residual_product.witness));

  out.notes.push_back(
      "U and V are normal, so they are subnormal with depth 1.");
  auto const dvs = subnormal_depth(g, sd.v_statement);
  bool const uv_statement =
      product_set(g, sd.u, sd.v_statement).elements.size() == g.order();
  out.notes.push_back(
      std::string("With V = <xy> instead of N<xy>: G = UV ") +
      (uv_statement ? "still holds" : "fails") + ", and <xy> is " +
      (dvs ? "subnormal of depth " + std::to_string(*dvs) : "not subnormal") +
      ".");
  out.notes.push_back("x multiplies N by a = " + std::to_string(sd.spec.a) +
                      " (smallest valid multiplier unless given).");

  out.all_hold = std::all_of(out.steps.begin(), out.steps.end(), [](Report const& r) {
    return r.status == Status::holds;
  });
  return out;
}

nlohmann::json to_json(Theorem33Report const& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (auto const& s : r.steps) steps.push_back(to_json(s));
  return {{"p", r.spec.p},       {"q", r.spec.q},         {"a", r.spec.a},
          {"order", r.spec.q * r.spec.p * r.spec.p},
          {"steps", steps},      {"notes", r.notes},      {"all_hold", r.all_hold}};
}

nlohmann::json statement_form_comparison(SemidirectSpec const& spec, Caps const& caps) {
  auto const sd = semidirect_q_p2(spec);
  auto const& g = sd.group;
  auto const chi = GroupClass::p_group(sd.spec.p);
  auto const depth = subnormal_depth(g, sd.v_statement);
  auto const product = product_set(g, sd.u, sd.v_statement);
  return {{"V", "<xy>"},
          {"order", sd.v_statement.size()},
          {"normal", is_normal(g, sd.v_statement)},
          {"subnormal_depth", depth ? nlohmann::json(*depth) : nlohmann::json(nullptr)},
          {"G_equals_UV", product.elements.size() == g.order()},
          {"O_p(V)_order", radical_of(g, sd.v_statement, chi, caps).size()}};
}

TransGroup ng_witness(std::size_t n, Caps const& caps) {
  if (n < 2) throw PreconditionError("ng_witness needs n >= 2");
  if (n > 21 || factorial(n - 1) > caps.closure) {
    throw CapExceeded("ng_witness(" + std::to_string(n) + ") exceeds closure cap " +
                      std::to_string(caps.closure));
  }
  std::vector<Point> e(n);
  for (std::size_t x = 0; x < n; ++x) e[x] = x == 1 ? 0 : static_cast<Point>(x);

  std::vector<Point> targets{0};
  for (std::size_t x = 2; x < n; ++x) targets.push_back(static_cast<Point>(x));
  std::vector<Point> sigma = targets;  // sigma(targets[k]) = sigma_images[k]

  std::vector<Transformation> maps;
  std::vector<Point> where(n, 0);
  for (std::size_t k = 0; k < targets.size(); ++k) where[targets[k]] = static_cast<Point>(k);
  do {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = sigma[where[e[x]]];
    maps.emplace_back(std::move(images));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return require_group(maps);
}

}  // namespace ngroup
