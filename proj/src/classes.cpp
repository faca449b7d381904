#include "ngroup/classes.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "ngroup/errors.hpp"
#include "ngroup/numeric.hpp"

namespace ngroup {

namespace {

nlohmann::json describe(CayleyGroup const& g, std::span<Element const> xs) {
  nlohmann::json labels = nlohmann::json::array();
  for (Element x : xs) labels.push_back(g.label(x));
  return {{"order", xs.size()},
          {"members", std::vector<Element>(xs.begin(), xs.end())},
          {"labels", labels}};
}

nlohmann::json describe(CayleyGroup const& g, Subgroup const& h) {
  return describe(g, h.members());
}

bool is_abelian(CayleyGroup const& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

// Normal subgroups N of g with g/N in c.
std::vector<Subgroup> residual_family(CayleyGroup const& g, GroupClass const& c,
                                      Caps const& caps) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g)) {
    if (belongs(c, quotient_group(g, n).group, caps)) out.push_back(std::move(n));
  }
  return out;
}

std::optional<Report> check_product_preconditions(CayleyGroup const& g,
                                                  Subgroup const& u,
                                                  Subgroup const& v,
                                                  std::string const& claim) {
  auto const uv = product_set(g, u, v);
  if (uv.elements.size() != g.order()) {
    return Report{claim, Status::precondition_failed,
                  {{"reason", "UV != G"}, {"product", describe(g, uv.elements)}}};
  }
  auto const du = subnormal_depth(g, u);
  auto const dv = subnormal_depth(g, v);
  if (!du || !dv) {
    return Report{claim,
                  Status::precondition_failed,
                  {{"reason", "factor not subnormal"},
                   {"u_subnormal", du.has_value()},
                   {"v_subnormal", dv.has_value()}}};
  }
  return std::nullopt;
}

}  // namespace

GroupClass GroupClass::p_group(unsigned p) {
  if (!is_prime(p)) {
    throw PreconditionError(std::to_string(p) + " is not prime");
  }
  return GroupClass(Kind::p_group, p, std::to_string(p) + "-groups");
}

GroupClass GroupClass::nilpotent() {
  return GroupClass(Kind::nilpotent, 0, "nilpotent");
}

GroupClass GroupClass::non_shp_abelian() {
  return GroupClass(Kind::abelian, 0, "abelian (non-SHP control)");
}

GroupClass GroupClass::parse(std::string_view text) {
  if (text == "nilpotent") return nilpotent();
  if (text.size() > 2 && text.substr(0, 2) == "p:") {
    unsigned p = 0;
    auto const digits = text.substr(2);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || end != digits.data() + digits.size()) {
      throw ParseError("bad class \"" + std::string(text) + "\"");
    }
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
    return p_group(p);
  }
  throw ParseError("unknown class \"" + std::string(text) +
                   "\" (expected p:<prime> or nilpotent)");
}

bool belongs(GroupClass const& c, CayleyGroup const& g, Caps const& caps) {
  switch (c.kind()) {
    case GroupClass::Kind::p_group:
      return is_power_of(g.order(), c.prime());
    case GroupClass::Kind::abelian:
      return is_abelian(g);
    case GroupClass::Kind::nilpotent: {
      if (g.order() == 1) return true;
      auto const subgroups = all_subgroups(g, caps);
      for (auto p : prime_divisors(g.order())) {
        auto const sylow_order = p_part(g.order(), p);
        for (auto const& h : subgroups) {
          if (h.size() == sylow_order && !is_normal(g, h)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool belongs(GroupClass const& c, CayleyGroup const& g, Subgroup const& h,
             Caps const& caps) {
  if (c.kind() == GroupClass::Kind::p_group) {
    return is_power_of(h.size(), c.prime());
  }
  return belongs(c, subgroup_as_group(g, h).group, caps);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::violated:
      return "violated";
    case Status::precondition_failed:
      return "precondition-failed";
  }
  return "unknown";
}

nlohmann::json to_json(Report const& r) {
  return {{"claim", r.claim}, {"status", to_string(r.status)}, {"witness", r.witness}};
}

Report verify_shp_axioms(GroupClass const& c,
                         std::span<CayleyGroup const> library,
                         Caps const& caps) {
  nlohmann::json violations = nlohmann::json::array();
  for (std::size_t gi = 0; gi < library.size(); ++gi) {
    auto const& g = library[gi];
    auto const normals = normal_subgroups(g);
    if (belongs(c, g, caps)) {
      for (auto const& h : all_subgroups(g, caps)) {
        if (!belongs(c, g, h, caps)) {
          violations.push_back({{"group", gi},
                                {"axiom", "subgroup-closed"},
                                {"subgroup", describe(g, h)}});
        }
      }
      for (auto const& n : normals) {
        if (!belongs(c, quotient_group(g, n).group, caps)) {
          violations.push_back({{"group", gi},
                                {"axiom", "quotient-closed"},
                                {"normal_subgroup", describe(g, n)}});
        }
      }
    }
    std::vector<Subgroup> normal_members;
    for (auto const& n : normals) {
      if (belongs(c, g, n, caps)) normal_members.push_back(n);
    }
    for (std::size_t i = 0; i < normal_members.size(); ++i) {
      for (std::size_t j = i + 1; j < normal_members.size(); ++j) {
        auto const& u = normal_members[i];
        auto const& v = normal_members[j];
        auto const uv = product_set(g, u, v);
        if (!uv.is_subgroup || !belongs(c, g, Subgroup(g, uv.elements), caps)) {
          violations.push_back({{"group", gi},
                                {"axiom", "normal-product-closed"},
                                {"u", describe(g, u)},
                                {"v", describe(g, v)},
                                {"product", describe(g, uv.elements)}});
        }
      }
    }
  }
  Report r{"class " + c.name() +
               " is closed under subgroups, quotients and normal products",
           violations.empty() ? Status::holds : Status::violated, nullptr};
  if (!violations.empty()) r.witness = {{"violations", violations}};
  return r;
}

Subgroup residual(CayleyGroup const& g, GroupClass const& c, Caps const& caps) {
  auto const family = residual_family(g, c, caps);
  if (family.empty()) {
    throw TheoremViolation("no normal subgroup has quotient in " + c.name());
  }

  Subgroup by_intersection = family.front();
  for (auto const& n : family) by_intersection = intersect(g, by_intersection, n);

  std::vector<Subgroup> minimal;
  for (auto const& n : family) {
    bool const has_smaller = std::any_of(
        family.begin(), family.end(),
        [&](Subgroup const& m) { return m != n && m.is_subset_of(n); });
    if (!has_smaller) minimal.push_back(n);
  }
  if (minimal.size() != 1 || minimal.front() != by_intersection) {
    throw TheoremViolation("residual for " + c.name() +
                           " is not the unique minimal member of its family");
  }
  if (!belongs(c, quotient_group(g, by_intersection).group, caps)) {
    throw TheoremViolation("quotient by the residual is not in " + c.name());
  }
  return by_intersection;
}

Subgroup residual_of(CayleyGroup const& g, Subgroup const& h,
                     GroupClass const& c, Caps const& caps) {
  auto const e = subgroup_as_group(g, h);
  return transport(g, e, residual(e.group, c, caps));
}

Subgroup radical(CayleyGroup const& g, GroupClass const& c, Caps const& caps) {
  std::vector<Subgroup> family;
  for (auto& n : normal_subgroups(g)) {
    if (belongs(c, g, n, caps)) family.push_back(std::move(n));
  }
  Subgroup joined = trivial_subgroup(g);
  for (auto const& n : family) joined = join(g, joined, n);

  if (!is_normal(g, joined) || !belongs(c, g, joined, caps)) {
    throw TheoremViolation("join of normal " + c.name() +
                           "-subgroups leaves the class");
  }
  std::size_t maximal = 0;
  for (auto const& n : family) {
    bool const has_larger = std::any_of(
        family.begin(), family.end(),
        [&](Subgroup const& m) { return m != n && n.is_subset_of(m); });
    if (!has_larger) {
      ++maximal;
      if (n != joined) {
        throw TheoremViolation("radical is not the unique maximal member");
      }
    }
  }
  if (maximal != 1) {
    throw TheoremViolation("radical is not the unique maximal member");
  }
  return joined;
}

Subgroup radical_of(CayleyGroup const& g, Subgroup const& h,
                    GroupClass const& c, Caps const& caps) {
  auto const e = subgroup_as_group(g, h);
  return transport(g, e, radical(e.group, c, caps));
}

Report check_residual_product(CayleyGroup const& g, Subgroup const& u,
                              Subgroup const& v, GroupClass const& c,
                              Caps const& caps) {
  std::string const claim = "residual(G) = residual(U) residual(V) for " + c.name();
  if (auto bad = check_product_preconditions(g, u, v, claim)) return *bad;

  auto const rg = residual(g, c, caps);
  auto const ru = residual_of(g, u, c, caps);
  auto const rv = residual_of(g, v, c, caps);
  auto const prod = product_set(g, ru, rv);
  bool const equal = std::equal(prod.elements.begin(), prod.elements.end(),
                                rg.members().begin(), rg.members().end());
  return Report{claim,
                equal ? Status::holds : Status::violated,
                {{"G", describe(g, rg)},
                 {"U", describe(g, ru)},
                 {"V", describe(g, rv)},
                 {"product", describe(g, prod.elements)}}};
}

Report check_radical_product(CayleyGroup const& g, Subgroup const& u,
                             Subgroup const& v, GroupClass const& c,
                             Caps const& caps) {
  std::string const claim = "radical(G) = radical(U) radical(V) for " + c.name();
  if (auto bad = check_product_preconditions(g, u, v, claim)) return *bad;

  auto const og = radical(g, c, caps);
  auto const ou = radical_of(g, u, c, caps);
  auto const ov = radical_of(g, v, c, caps);
  auto const prod = product_set(g, ou, ov);
  bool const equal = std::equal(prod.elements.begin(), prod.elements.end(),
                                og.members().begin(), og.members().end());
  return Report{claim,
                equal ? Status::holds : Status::violated,
                {{"G", describe(g, og)},
                 {"U", describe(g, ou)},
                 {"V", describe(g, ov)},
                 {"product", describe(g, prod.elements)}}};
}

namespace {

Report join_check(CayleyGroup const& g, Subgroup const& a, Subgroup const& b,
                  GroupClass const& c, Subgroup const& rad, Caps const& caps) {
  std::string const claim = "join of subnormal " + c.name() +
                            "-subgroups lies in the radical and in the class";
  if (!subnormal_depth(g, a) || !subnormal_depth(g, b)) {
    return Report{claim, Status::precondition_failed,
                  {{"reason", "argument not subnormal"}}};
  }
  if (!belongs(c, g, a, caps) || !belongs(c, g, b, caps)) {
    return Report{claim, Status::precondition_failed,
                  {{"reason", "argument not in class"}}};
  }
  auto const ab = join(g, a, b);
  bool const ok = a.is_subset_of(rad) && b.is_subset_of(rad) &&
                  belongs(c, g, ab, caps);
  return Report{claim,
                ok ? Status::holds : Status::violated,
                {{"a", describe(g, a)},
                 {"b", describe(g, b)},
                 {"join", describe(g, ab)},
                 {"radical", describe(g, rad)}}};
}

}  // namespace

Report subnormal_join_in_class(CayleyGroup const& g, Subgroup const& a,
                               Subgroup const& b, GroupClass const& c,
                               Caps const& caps) {
  return join_check(g, a, b, c, radical(g, c, caps), caps);
}

Report residual_monotone_check(CayleyGroup const& g, GroupClass const& c,
                               Caps const& caps) {
  nlohmann::json failures = nlohmann::json::array();
  auto const rg = residual(g, c, caps);
  auto const og = radical(g, c, caps);

  for (auto const& h : all_subgroups(g, caps)) {
    auto const rh = residual_of(g, h, c, caps);
    if (!rh.is_subset_of(rg)) {
      failures.push_back({{"check", "residual(H) <= residual(G)"},
                          {"H", describe(g, h)},
                          {"residual_H", describe(g, rh)}});
    }
  }
  if (!is_characteristic(g, rg, caps)) {
    failures.push_back({{"check", "residual characteristic"},
                        {"residual", describe(g, rg)}});
  }
  if (!is_characteristic(g, og, caps)) {
    failures.push_back({{"check", "radical characteristic"},
                        {"radical", describe(g, og)}});
  }
  for (auto const& n : normal_subgroups(g)) {
    auto const q = quotient_group(g, n);
    auto const rq = residual(q.group, c, caps);
    auto const image = project(q, rg);
    if (rq != image) {
      failures.push_back({{"check", "residual(G/N) = residual(G)N/N"},
                          {"N", describe(g, n)}});
    }
  }
  Report r{"residual monotone, characteristic, quotient-compatible; radical "
           "characteristic (" + c.name() + ")",
           failures.empty() ? Status::holds : Status::violated, nullptr};
  if (!failures.empty()) r.witness = {{"failures", failures}};
  return r;
}

Report residual_product_sweep(CayleyGroup const& g, GroupClass const& c,
                              Caps const& caps) {
  std::vector<Subgroup> subnormal;
  for (auto& h : all_subgroups(g, caps)) {
    if (subnormal_depth(g, h)) subnormal.push_back(std::move(h));
  }
  auto const rg = residual(g, c, caps);
  std::vector<Subgroup> residuals;
  for (auto const& h : subnormal) residuals.push_back(residual_of(g, h, c, caps));

  std::size_t pairs = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < subnormal.size(); ++i) {
    for (std::size_t j = 0; j < subnormal.size(); ++j) {
      if (product_set(g, subnormal[i], subnormal[j]).elements.size() != g.order()) {
        continue;
      }
      ++pairs;
      auto const prod = product_set(g, residuals[i], residuals[j]);
      if (!std::equal(prod.elements.begin(), prod.elements.end(),
                      rg.members().begin(), rg.members().end())) {
        failures.push_back({{"U", describe(g, subnormal[i])},
                            {"V", describe(g, subnormal[j])},
                            {"product", describe(g, prod.elements)},
                            {"residual", describe(g, rg)}});
      }
    }
  }
  Report r{"residual(G) = residual(U) residual(V) over all subnormal "
           "factorisations (" + c.name() + ")",
           failures.empty() ? Status::holds : Status::violated,
           {{"pairs", pairs}}};
  if (!failures.empty()) r.witness["failures"] = failures;
  return r;
}

Report subnormal_join_sweep(CayleyGroup const& g, GroupClass const& c,
                            Caps const& caps) {
  auto const rad = radical(g, c, caps);
  std::vector<Subgroup> members;
  for (auto& h : all_subgroups(g, caps)) {
    if (subnormal_depth(g, h) && belongs(c, g, h, caps)) {
      members.push_back(std::move(h));
    }
  }
  std::size_t pairs = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      ++pairs;
      auto r = join_check(g, members[i], members[j], c, rad, caps);
      if (r.status != Status::holds) failures.push_back(to_json(r));
    }
  }
  Report r{"joins of subnormal " + c.name() + "-subgroups stay in the radical",
           failures.empty() ? Status::holds : Status::violated,
           {{"pairs", pairs}}};
  if (!failures.empty()) r.witness["failures"] = failures;
  return r;
}

}  // namespace ngroup
