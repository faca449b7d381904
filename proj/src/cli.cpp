#include "ngroup/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "ngroup/classes.hpp"
#include "ngroup/constructions.hpp"
#include "ngroup/errors.hpp"
#include "ngroup/numeric.hpp"
#include "ngroup/search.hpp"
#include "ngroup/verify.hpp"

namespace ngroup::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool one_based = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct Output {
  int code = ExitCode::ok;
  json data;
  std::string text;
};

std::string points(std::vector<Point> const& xs, bool one_based) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i] + (one_based ? 1 : 0));
  }
  return s + "}";
}

std::string group_text(TransGroup const& g, bool one_based) {
  std::ostringstream os;
  os << "order " << g.order() << " on n = " << g.degree()
     << (is_ng_group(g) ? " (NG-group)" : " (contains bijections)") << "\n"
     << "identity " << g.identity().to_string(one_based) << "\n"
     << "kernel " << g.kernel().to_string(one_based) << ", image "
     << points(g.image(), one_based) << ", quotient size " << g.kernel().block_count()
     << "\n"
     << "elements";
  for (auto const& f : g.elements()) os << " " << f.to_string(one_based);
  return os.str();
}

json perm_json(PermGroup const& p) {
  return {{"m", p.m}, {"order", p.perms.size()}, {"perms", p.perms}, {"label", p.label}};
}

std::vector<Element> parse_indices(std::string const& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      auto const v = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(static_cast<Element>(v));
    } catch (std::exception const&) {
      throw ParseError("bad element index list \"" + text + "\"");
    }
  }
  return out;
}

CayleyGroup load_group(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return cayley_from_json(json::parse(in));
  } catch (json::exception const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Subgroup indices_subgroup(CayleyGroup const& g, std::string const& text) {
  auto const idx = parse_indices(text);
  for (Element x : idx) {
    if (x >= g.order()) {
      throw PreconditionError("element index " + std::to_string(x) +
                              " outside group of order " + std::to_string(g.order()));
    }
  }
  return subgroup_generated(g, idx);
}

json subgroup_json(CayleyGroup const& g, Subgroup const& h) {
  std::vector<std::string> labels;
  for (Element x : h.members()) labels.push_back(g.label(x));
  return {{"order", h.size()},
          {"members", std::vector<Element>(h.members().begin(), h.members().end())},
          {"labels", labels}};
}

int status_code(Status s) {
  switch (s) {
    case Status::holds:
      return ExitCode::ok;
    case Status::violated:
      return ExitCode::violation;
    case Status::precondition_failed:
      return ExitCode::bad_input;
  }
  return ExitCode::internal;
}

Output cmd_membership(Globals const& gl, std::string const& text) {
  auto const f = Transformation::parse(text, gl.one_based);
  bool const member = can_be_member(f);
  auto const image = image_rank(f).image;
  auto const image2 = image_rank(compose(f, f)).image;
  Output o;
  std::vector<Transformation> gens{f};
  auto const closure = generate_closure(gens);
  auto cyclic = check_group(closure);
  bool const is_group = std::holds_alternative<TransGroup>(cyclic);
  if (is_group != member) {
    throw TheoremViolation("cyclic closure of " + f.to_string() +
                           (is_group ? " is" : " is not") + " a group but the image test says " +
                           (member ? "member" : "non-member"));
  }
  std::string const reason = member ? "Im(f)=Im(f²)" : "Im(f)≠Im(f²)";
  o.data = {{"map", f.to_string(gl.one_based)},
            {"member", member},
            {"reason", reason},
            {"image", points(image, gl.one_based)},
            {"image_of_square", points(image2, gl.one_based)},
            {"group", is_group ? group_report(std::get<TransGroup>(cyclic), gl.one_based)
                               : json(nullptr)}};
  o.text = std::string("member: ") + (member ? "true" : "false") + " (" + reason +
           ", Im f = " + points(image, gl.one_based) +
           ", Im f² = " + points(image2, gl.one_based) + ")";
  if (is_group) {
    o.text += "\ncyclic group: " + group_text(std::get<TransGroup>(cyclic), gl.one_based);
  }
  return o;
}

Output cmd_idempotents(Globals const& gl, std::size_t n) {
  auto const idem = enumerate_idempotents(n);
  auto const formula = idempotent_count_formula(n);
  Output o;
  json list = json::array();
  std::string text;
  for (auto const& e : idem) {
    list.push_back(e.to_string(gl.one_based));
    text += e.to_string(gl.one_based) + "\n";
  }
  o.data = {{"n", n}, {"count", idem.size()}, {"formula", formula}, {"idempotents", list}};
  o.text = text + "count " + std::to_string(idem.size()) + " (closed form " +
           std::to_string(formula) + ")";
  if (idem.size() != formula) o.code = ExitCode::violation;
  return o;
}

Output cmd_hclass(Globals const& gl, std::string const& text) {
  auto const e = Transformation::parse(text, gl.one_based);
  auto const g = h_class_group(e);
  auto const hat = rho(g);
  Output o;
  o.data = group_report(g, gl.one_based);
  o.data["rho"] = perm_json(hat);
  o.text = group_text(g, gl.one_based) + "\nrho: symmetric group on " +
           std::to_string(hat.m) + " blocks, order " + std::to_string(hat.perms.size());
  return o;
}

Output cmd_max_ng(Globals const& gl, std::size_t n) {
  auto const r = max_ng_order(n);
  Output o;
  o.data = {{"n", n},
            {"max_ng_order", r.order},
            {"expected", factorial(n - 1)},
            {"idempotents_examined", r.idempotents},
            {"witness", group_report(r.witness, gl.one_based)}};
  o.text = "max NG order for n = " + std::to_string(n) + ": " + std::to_string(r.order) +
           " = (n-1)! over " + std::to_string(r.idempotents) +
           " non-bijective idempotents\nwitness " + group_text(r.witness, gl.one_based);
  return o;
}

Output cmd_scan(Globals const& gl, std::size_t n, bool bounded) {
  auto const census = exhaustive_ng_scan(n, bounded);
  Output o;
  o.data = to_json(census, gl.one_based);
  std::ostringstream os;
  os << (bounded ? "bounded" : "full") << " scan, n = " << n << "\n";
  std::size_t groups = 0, failures = 0;
  for (auto const& pool : census.pools) {
    groups += pool.groups.size();
    failures += pool.hclass_failures;
    os << "  partition " << pool.partition.to_string(gl.one_based) << ": pool "
       << pool.pool.size() << ", " << pool.subsets_checked << " subsets, "
       << pool.groups.size() << " groups\n";
  }
  os << groups << " groups, max NG order " << census.max_ng_order << " (H-class route "
     << census.hclass_max_order << ")";
  o.text = os.str();
  std::uint64_t const bound = n >= 1 ? factorial(n - 1) : 1;
  if (failures != 0 || census.max_ng_order > bound || census.hclass_max_order > bound) {
    o.code = ExitCode::violation;
  }
  return o;
}

Output cmd_witness(Globals const& gl, std::size_t n) {
  auto const g = ng_witness(n);
  auto const hat = rho(g);
  Output o;
  o.data = group_report(g, gl.one_based);
  o.data["rho"] = perm_json(hat);
  o.text = group_text(g, gl.one_based) + "\nrho: order " + std::to_string(hat.perms.size()) +
           " on " + std::to_string(hat.m) + " blocks";
  if (!is_ng_group(g) || g.order() != factorial(n - 1) || hat.perms.size() != g.order()) {
    o.code = ExitCode::violation;
  }
  return o;
}

Output cmd_rho(Globals const& gl, std::vector<std::string> const& texts) {
  std::vector<Transformation> maps;
  for (auto const& t : texts) maps.push_back(Transformation::parse(t, gl.one_based));
  auto result = check_group(maps);
  Output o;
  if (auto* r = std::get_if<GroupRejection>(&result)) {
    o.code = ExitCode::bad_input;
    o.data = {{"group", false},
              {"axiom", to_string(r->axiom)},
              {"left", r->left ? json(r->left->to_string(gl.one_based)) : json(nullptr)},
              {"right", r->right ? json(r->right->to_string(gl.one_based)) : json(nullptr)},
              {"message", r->message}};
    o.text = "not a group (" + to_string(r->axiom) + "): " + r->message;
    return o;
  }
  auto const& g = std::get<TransGroup>(result);
  auto const hat = rho(g);
  o.data = group_report(g, gl.one_based);
  o.data["rho"] = perm_json(hat);
  std::ostringstream os;
  os << group_text(g, gl.one_based) << "\nrho onto " << hat.perms.size()
     << " permutations of " << hat.m << " blocks:";
  for (std::size_t i = 0; i < g.order(); ++i) {
    os << "\n  " << g.elements()[i].to_string(gl.one_based) << " -> [";
    auto const& p = hat.perms[hat.label[i]];
    for (std::size_t b = 0; b < p.size(); ++b) os << (b ? "," : "") << p[b];
    os << "]";
  }
  o.text = os.str();
  return o;
}

Output cmd_semidirect(Globals const&, std::string const& text) {
  auto const sd = semidirect_q_p2(SemidirectSpec::parse(text));
  auto const& g = sd.group;
  Output o;
  o.data = {{"spec", sd.spec.to_string()},
            {"group", to_json(g)},
            {"N", subgroup_json(g, sd.n)},
            {"H", subgroup_json(g, sd.h)},
            {"U", subgroup_json(g, sd.u)},
            {"V", subgroup_json(g, sd.v)},
            {"x", sd.x},
            {"y", sd.y}};
  o.text = "C_" + std::to_string(sd.spec.q) + " x| (C_" + std::to_string(sd.spec.p) +
           " x C_" + std::to_string(sd.spec.p) + "), a = " + std::to_string(sd.spec.a) +
           ", order " + std::to_string(g.order()) + "; |N| = " +
           std::to_string(sd.n.size()) + ", |U| = " + std::to_string(sd.u.size()) +
           ", |V| = " + std::to_string(sd.v.size()) + ", x = " + std::to_string(sd.x) +
           ", y = " + std::to_string(sd.y);
  return o;
}

Output cmd_thm33(Globals const&, std::string const& text, bool statement_form) {
  auto const spec = SemidirectSpec::parse(text);
  auto const report = theorem33_report(spec);
  Output o;
  o.data = to_json(report);
  if (statement_form) o.data["statement_form"] = statement_form_comparison(spec);
  std::ostringstream os;
  os << "G = C_" << report.spec.q << " x| (C_" << report.spec.p << " x C_" << report.spec.p
     << "), a = " << report.spec.a << "\n";
  for (auto const& s : report.steps) {
    os << "  [" << to_string(s.status) << "] " << s.claim;
    if (s.witness.is_object()) {
      for (auto const& key : {"O_p(G)", "O_p(U)", "O_p(V)"}) {
        if (s.witness.contains(key)) os << " |" << key << "| = " << s.witness[key]["order"];
      }
      if (s.witness.contains("product")) {
        os << " |product| = " << s.witness["product"]["order"];
      }
    }
    os << "\n";
  }
  for (auto const& note : report.notes) os << "  note: " << note << "\n";
  if (statement_form) {
    auto const& sf = o.data["statement_form"];
    os << "  V = <xy>: order " << sf["order"] << ", normal " << sf["normal"]
       << ", subnormal depth " << sf["subnormal_depth"] << ", G = UV " << sf["G_equals_UV"]
       << ", |O_p(V)| = " << sf["O_p(V)_order"] << "\n";
  }
  os << (report.all_hold ? "all checks hold" : "VIOLATION");
  o.text = os.str();
  if (!report.all_hold) o.code = ExitCode::violation;
  return o;
}

Output cmd_residual_radical(Globals const&, bool want_residual, std::string const& path,
                            std::string const& cls) {
  auto const g = load_group(path);
  auto const c = GroupClass::parse(cls);
  auto const h = want_residual ? residual(g, c) : radical(g, c);
  Output o;
  o.data = {{"class", c.name()},
            {want_residual ? "residual" : "radical", subgroup_json(g, h)}};
  std::string text = std::string(want_residual ? "residual" : "radical") + " for " +
                     c.name() + ": order " + std::to_string(h.size()) + " {";
  for (std::size_t i = 0; i < h.size(); ++i) {
    text += (i ? ", " : "") + g.label(h.members()[i]);
  }
  o.text = text + "}";
  return o;
}

Output cmd_check_thm32(Globals const&, std::string const& path, std::string const& u_text,
                       std::string const& v_text, std::string const& cls) {
  auto const g = load_group(path);
  auto const c = GroupClass::parse(cls);
  auto const r = check_residual_product(g, indices_subgroup(g, u_text),
                                        indices_subgroup(g, v_text), c);
  Output o;
  o.data = to_json(r);
  o.text = "[" + to_string(r.status) + "] " + r.claim;
  o.code = status_code(r.status);
  return o;
}

Output cmd_verify_all(Globals const& gl, std::size_t max_n) {
  acceptance::Options opt{max_n, gl.seed};
  auto const criteria = acceptance::all_criteria();
  std::vector<acceptance::Criterion> results(criteria.size());
  unsigned const threads = std::max(1u, gl.threads);
  for (std::size_t start = 0; start < criteria.size(); start += threads) {
    std::vector<std::future<acceptance::Criterion>> batch;
    for (std::size_t i = start; i < std::min(criteria.size(), start + threads); ++i) {
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                 criteria[i], opt));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }
  Output o;
  json list = json::array();
  std::string text;
  bool all = true;
  for (auto const& c : results) {
    all = all && c.passed;
    list.push_back(acceptance::to_json(c));
    text += acceptance::format(c) + "\n";
  }
  o.data = {{"criteria", list}, {"passed", all}, {"max_n", max_n}, {"seed", gl.seed}};
  o.text = text + (all ? "all criteria pass" : "FAILED");
  if (!all) o.code = ExitCode::violation;
  return o;
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groups of non-bijective transformations and SHP-class residuals"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Emit JSON");
  app.add_flag("--one-based", gl.one_based, "Read and render carrier points as 1..n");
  app.add_option("--seed", gl.seed, "Seed for randomized sweeps");
  app.add_option("--threads", gl.threads, "Worker threads for verify-all")
      ->check(CLI::Range(1u, 256u));

  std::string map_text, spec_text, path, class_text, u_text, v_text;
  std::vector<std::string> maps;
  std::size_t n = 0, max_n = 7;
  bool bounded = false;

  auto* membership = app.add_subcommand("membership", "Can the map lie in some group?");
  membership->add_option("map", map_text, "Image list, e.g. [0,0,1]")->required();
  auto* idempotents = app.add_subcommand("idempotents", "List the idempotents of T_n");
  idempotents->add_option("n", n)->required()->check(CLI::PositiveNumber);
  auto* hclass = app.add_subcommand("hclass", "Maximal group at an idempotent");
  hclass->add_option("map", map_text)->required();
  auto* maxng = app.add_subcommand("max-ng", "Largest NG-group order on n points");
  maxng->add_option("n", n)->required();
  auto* scan = app.add_subcommand("scan", "Exhaustive kernel-pool subset scan");
  scan->add_option("n", n)->required()->check(CLI::PositiveNumber);
  scan->add_flag("--bounded", bounded, "Only subsets of size <= (n-1)!+1");
  auto* witness = app.add_subcommand("witness", "The order-(n-1)! NG-group");
  witness->add_option("n", n)->required();
  auto* rho_cmd = app.add_subcommand("rho", "Check a group and map it onto the quotient");
  // Maps are taken raw: CLI11 would split "[0,0,2]" at the commas.
  rho_cmd->allow_extras();
  rho_cmd->footer("maps: one image list per argument, e.g. [0,0,2] [2,2,0]");
  auto* semidirect = app.add_subcommand("semidirect", "Build C_q x| (C_p x C_p)");
  semidirect->add_option("spec", spec_text, "p,q[,a]")->required();
  auto* thm33 = app.add_subcommand("thm33", "Radical counterexample report");
  thm33->add_option("spec", spec_text, "p,q[,a]")->required();
  bool statement_form = false;
  thm33->add_flag("--statement-form", statement_form, "Also evaluate V = <xy> without N");
  auto* residual_cmd = app.add_subcommand("residual", "Residual of a group table");
  residual_cmd->add_option("group", path, "group.json")->required();
  residual_cmd->add_option("--class", class_text, "p:<prime> or nilpotent")->required();
  auto* radical_cmd = app.add_subcommand("radical", "Radical of a group table");
  radical_cmd->add_option("group", path, "group.json")->required();
  radical_cmd->add_option("--class", class_text, "p:<prime> or nilpotent")->required();
  auto* thm32 = app.add_subcommand("check-thm32", "Residual of a subnormal product");
  thm32->add_option("group", path, "group.json")->required();
  thm32->add_option("U", u_text, "generator indices, e.g. 0,3")->required();
  thm32->add_option("V", v_text, "generator indices")->required();
  thm32->add_option("--class", class_text, "p:<prime> or nilpotent")->required();
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--max-n", max_n, "Largest n for the transformation sweeps")
      ->check(CLI::Range(2, 7));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  Output o;
  try {
    if (*membership) o = cmd_membership(gl, map_text);
    else if (*idempotents) o = cmd_idempotents(gl, n);
    else if (*hclass) o = cmd_hclass(gl, map_text);
    else if (*maxng) o = cmd_max_ng(gl, n);
    else if (*scan) o = cmd_scan(gl, n, bounded);
    else if (*witness) o = cmd_witness(gl, n);
    else if (*rho_cmd) {
      maps = rho_cmd->remaining();
      if (maps.empty()) {
        err << "rho: at least one map is required\n";
        return ExitCode::usage;
      }
      o = cmd_rho(gl, maps);
    }
    else if (*semidirect) o = cmd_semidirect(gl, spec_text);
    else if (*thm33) o = cmd_thm33(gl, spec_text, statement_form);
    else if (*residual_cmd) o = cmd_residual_radical(gl, true, path, class_text);
    else if (*radical_cmd) o = cmd_residual_radical(gl, false, path, class_text);
    else if (*thm32) o = cmd_check_thm32(gl, path, u_text, v_text, class_text);
    else if (*verify) o = cmd_verify_all(gl, max_n);
  } catch (TheoremViolation const& e) {
    err << "theorem violation: " << e.what() << "\n";
    if (gl.json) out << json{{"error", "theorem-violation"}, {"message", e.what()}}.dump() << "\n";
    return ExitCode::violation;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::parse_error;
  } catch (CapExceeded const& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return ExitCode::cap_exceeded;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_input;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitCode::internal;
  }

  if (gl.json) {
    out << o.data.dump() << "\n";
  } else {
    out << o.text << "\n";
  }
  return o.code;
}

}  // namespace ngroup::cli
