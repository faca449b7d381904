#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngroup/caps.hpp"
#include "ngroup/cayley.hpp"
#include "ngroup/classes.hpp"
#include "ngroup/transgroup.hpp"

namespace ngroup {

struct Cyclic {
  std::size_t m;
};
struct ElementaryAbelian {
  unsigned p;
  std::size_t k;
};
struct Symmetric {
  std::size_t m;
};
/// Dihedral group of order 2m.
struct Dihedral {
  std::size_t m;
};

CayleyGroup standard_group(Cyclic kind, Caps const& caps = default_caps);
CayleyGroup standard_group(ElementaryAbelian kind, Caps const& caps = default_caps);
CayleyGroup standard_group(Symmetric kind, Caps const& caps = default_caps);
CayleyGroup standard_group(Dihedral kind, Caps const& caps = default_caps);

/// Parameters of C_q x| (C_p x C_p) where x acts on C_q as n -> a*n and y
/// acts trivially. Requires primes with q = 1 (mod p), a^p = 1 and
/// a != 1 (mod q).
struct SemidirectSpec {
  unsigned p = 0;
  unsigned q = 0;
  unsigned a = 0;

  /// Fills `a` with the smallest valid multiplier when absent. Throws
  /// PreconditionError on invalid parameters.
  static SemidirectSpec make(unsigned p, unsigned q,
                             std::optional<unsigned> a = std::nullopt);

  /// "p,q" or "p,q,a", spaces allowed. Malformed text throws ParseError,
  /// invalid parameters PreconditionError.
  static SemidirectSpec parse(std::string_view text);

  std::string to_string() const;
};

struct SemidirectGroup {
  SemidirectSpec spec;
  CayleyGroup group;
  Subgroup n;            // C_q
  Subgroup h;            // <x> x <y>
  Subgroup u;            // N<x>
  Subgroup v;            // N<xy>
  Subgroup v_statement;  // <xy>, the reading without N
  Element x;
  Element y;
};

/// Elements are pairs (n, x^i y^j) with
/// (n1, x^i1 y^j1)(n2, x^i2 y^j2) = (n1 + a^i1 n2, x^(i1+i2) y^(j1+j2)).
SemidirectGroup semidirect_q_p2(SemidirectSpec const& spec);

struct Theorem33Report {
  SemidirectSpec spec;
  std::vector<Report> steps;
  std::vector<std::string> notes;
  bool all_hold = false;
};

/// Verifies the counterexample: U, V normal (depth 1), G = UV,
/// O_p(G) = <y> of order p, O_p(U) = O_p(V) = 1, the radical product
/// inequality, the residual product equality and G' <= N.
Theorem33Report theorem33_report(SemidirectSpec const& spec,
                                 Caps const& caps = default_caps);

nlohmann::json to_json(Theorem33Report const& r);

/// U against V = <xy> (no N): order, normality, depth, G = UV and O_p(V).
nlohmann::json statement_form_comparison(SemidirectSpec const& spec,
                                         Caps const& caps = default_caps);

/// The group of maps sigma(e(x)) where e collapses 1 onto 0 and sigma runs
/// over the permutations of {0, 2, ..., n-1}. Order (n-1)!.
TransGroup ng_witness(std::size_t n, Caps const& caps = default_caps);

}  // namespace ngroup
