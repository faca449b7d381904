#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngroup/cayley.hpp"
#include "ngroup/transgroup.hpp"

namespace ngroup {

/// Brute-force reference implementations. They work on raw image lists and
/// raw subsets and share no code path with the algorithms they check.
namespace oracle {

using Map = std::vector<Point>;

Map apply_after(Map const& f, Map const& g);

/// Exists k in [1, bound] with f^(k+1) == f.
bool power_cycle_member(Map const& f, std::uint64_t bound);

/// Repeated all-pairs products until nothing new appears.
std::vector<Map> naive_closure(std::vector<Map> gens);

/// Counts maps of T_n with f(f(x)) == f(x) by scanning all n^n of them.
std::uint64_t count_idempotents(std::size_t n);

/// Every member shares the identity's kernel relation and image.
bool shares_identity_kernel_image(TransGroup const& g);

/// rho(fg) == rho(f) rho(g) and rho injective, with block maps recomputed
/// from scratch on the identity's kernel.
bool rho_is_isomorphism(TransGroup const& g);

/// Subsets of the element set that are subgroups (order <= 16).
std::vector<std::vector<Element>> subgroups_by_subsets(CayleyGroup const& g);

/// Element permutations preserving the table (order <= 8).
std::size_t count_automorphisms(CayleyGroup const& g);

/// Normal subgroups from raw subsets (order <= 16).
std::vector<std::vector<Element>> normal_subgroups_by_subsets(CayleyGroup const& g);

}  // namespace oracle

namespace acceptance {

struct Options {
  std::size_t max_n = 7;
  std::uint64_t seed = 1;
};

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The constructed groups of order <= 24 used by the class sweeps.
std::vector<CayleyGroup> library();
std::vector<std::string> library_names();

Criterion maximal_order(Options const& opt);
Criterion exhaustive_scan(Options const& opt);
Criterion membership_criterion(Options const& opt);
Criterion idempotent_census(Options const& opt);
Criterion rho_isomorphism(Options const& opt);
Criterion counterexample(Options const& opt);
Criterion residual_factorisation(Options const& opt);
Criterion lemma_suite(Options const& opt);
Criterion shared_kernel(Options const& opt);

std::vector<std::function<Criterion(Options const&)>> all_criteria();

/// "[PASS] AC1 title: detail (0.12 s)"
std::string format(Criterion const& c);
nlohmann::json to_json(Criterion const& c);

}  // namespace acceptance

}  // namespace ngroup
