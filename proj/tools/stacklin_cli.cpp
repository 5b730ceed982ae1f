#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "stacklin/errors.hpp"
#include "stacklin/io.hpp"
#include "stacklin/linser.hpp"
#include "stacklin/mckay.hpp"
#include "stacklin/moduli.hpp"
#include "stacklin/stability.hpp"
#include "stacklin/toric.hpp"

using namespace stacklin;

namespace {

struct Options {
  std::string fan;
  std::string cox;
  std::string quiver;
  std::string collection;
  std::string theta;
  std::string action;
  std::string support;
  std::string format = "json";
  bool trust_projective = false;
  std::size_t max_vars = kMaxMorphismVariables;
};

struct Space {
  CoxSpace x;
  bool from_fan = false;
};

Space load_space(const Options& o) {
  if (o.fan.empty() == o.cox.empty()) fail_validation("MissingInput", "--fan", "give exactly one of --fan and --cox");
  Space s;
  if (!o.fan.empty()) {
    s.x = cox_space(parse_fan(load_json(o.fan)));
    s.from_fan = true;
  } else {
    s.x = parse_cox(load_json(o.cox));
  }
  s.x.projective_asserted = o.trust_projective;
  return s;
}

std::vector<IntVec> load_collection(const Options& o, const CoxSpace& x) {
  if (o.collection.empty()) fail_validation("MissingInput", "--collection", "a collection of line bundles is required");
  return parse_collection(o.collection, x.pic);
}

void require_complete(const Space& s) {
  if (s.from_fan && !s.x.complete) fail_validation("NotComplete", "--fan", "the fan is not complete");
}

// A quiver given directly, or the quiver of sections of a collection.
LabelledQuiver load_quiver(const Options& o) {
  if (!o.quiver.empty()) return parse_quiver(load_json(o.quiver));
  const Space s = load_space(o);
  require_complete(s);
  return quiver_of_sections(s.x, load_collection(o, s.x));
}

IntVec load_theta(const Options& o, const LabelledQuiver& q, bool use_default) {
  if (o.theta.empty()) {
    if (use_default) return default_theta(q);
    fail_validation("MissingInput", "--theta", "a weight is required");
  }
  IntVec theta = parse_int_list(o.theta, "--theta");
  validate_weight(theta, q.num_vertices());
  return theta;
}

AbelianAction load_action(const Options& o) {
  if (o.action.empty()) fail_validation("MissingInput", "--action", "an action file is required");
  return parse_action(load_json(o.action));
}

std::vector<std::string> monomials(const std::vector<IntVec>& exponents, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& e : exponents) out.push_back(render_monomial(e, names));
  return out;
}

Json groebner_json(const std::vector<Binomial>& gens, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& b : gens) out.push_back(render(b, names));
  return out;
}

Json fan_check(const Options& o) {
  const Space s = load_space(o);
  Json cones = Json::array();
  for (auto c : s.x.maximal_cones()) cones.push_back(support_json(c));
  return Json{{"num_vars", s.x.num_vars},
              {"pic", group_json(s.x.pic)},
              {"degrees", to_json(s.x.degrees)},
              {"maximal_cones", cones},
              {"complete", s.from_fan ? Json(s.x.complete) : Json(nullptr)},
              {"projective_asserted", s.x.projective_asserted}};
}

Json sections_report(const Options& o) {
  const Space s = load_space(o);
  const auto names = variable_names("x", s.x.num_vars);
  Json out = Json::array();
  for (const auto& cls : load_collection(o, s.x)) {
    const auto secs = sections(s.x, cls);
    Json entry{{"class", to_json(cls)}, {"count", secs.size()}, {"sections", monomials(secs, names)}};
    entry["basepoint_free"] = secs.empty() ? Json(false) : Json(is_basepoint_free(s.x, cls));
    out.push_back(entry);
  }
  return Json{{"classes", out}};
}

Json quiver_build(const Options& o) {
  const Space s = load_space(o);
  require_complete(s);
  const auto q = quiver_of_sections(s.x, load_collection(o, s.x));
  const Lattice r = refinement_lattice(q);
  const PicKernel kernel = pic_kernel(q, s.x.pic);
  Json out = quiver_json(q);
  out["div"] = to_json(q.division().row_vectors());
  out["psi"] = monomials(psi_map(q), variable_names("x", s.x.num_vars));
  out["refinement_basis"] = to_json(r.basis_vectors());
  out["ker_pic_basis"] = to_json(kernel.integral.basis_vectors());
  out["ker_pic_in_R"] = r.contains(kernel.integral);
  out["ker_pic_rational_in_R_rational"] = r.saturation().contains(kernel.rational);
  return out;
}

Support load_support(const Options& o, const LabelledQuiver& q) {
  if (o.support.empty()) return full_support(q.num_arrows());
  Support s = 0;
  for (const auto& i : parse_int_list(o.support, "--support")) {
    if (i < 0 || i >= static_cast<long>(q.num_arrows())) fail_validation("BadIndex", "--support", "arrow index out of range");
    s |= Support{1} << i.get_ui();
  }
  return s;
}

Json stability_status(const Options& o) {
  const auto q = load_quiver(o);
  const IntVec theta = load_theta(o, q, false);
  const Lattice r = refinement_lattice(q);
  const Support s = load_support(o, q);
  return Json{{"theta", to_json(theta)},
              {"support", support_json(s)},
              {"status", to_string(git_status(q, r, theta, s, 0, true))},
              {"filtration_status", to_string(filtration_status(q, r, theta, s))}};
}

Json stability_generic(const Options& o) {
  const auto q = load_quiver(o);
  const IntVec theta = load_theta(o, q, false);
  return Json{{"theta", to_json(theta)}, {"generic", is_generic(q, refinement_lattice(q), theta)}};
}

Json moduli_report(const LabelledQuiver& q, const IntVec& theta) {
  const Lattice r = refinement_lattice(q);
  Json out = moduli_json(moduli_presentation(q, r, theta));
  out["theta"] = to_json(theta);
  const auto display = unstable_ideal_display(q, r, theta);
  const auto y_names = variable_names("y", q.num_arrows());
  const auto z_names = variable_names("z", r.rank());
  Json generators = Json::array();
  for (std::size_t i = 0; i < display.y_exponents.size(); ++i) {
    const std::string y = render_monomial(display.y_exponents[i], y_names);
    const std::string z = render_monomial(display.z_exponents[i], z_names);
    generators.push_back(z == "1" ? y : (y == "1" ? z : y + "*" + z));
  }
  Json supports = Json::array();
  for (auto m : display.minimal_supports) supports.push_back(support_json(m));
  out["unstable_ideal"] = Json{{"multiple", display.multiple}, {"generators", generators}, {"minimal_supports", supports}};
  return out;
}

Json moduli_present(const Options& o) {
  const auto q = load_quiver(o);
  return moduli_report(q, load_theta(o, q, false));
}

void check_var_limit(const Options& o, const CoxSpace& x) {
  if (o.max_vars > kMaxMorphismVariables)
    fail_validation("BadLimit", "--max-vars", "at most " + std::to_string(kMaxMorphismVariables));
  if (x.num_vars > o.max_vars) fail_computation("TooManyVariables", "more Cox variables than --max-vars");
}

struct Linear {
  Space s;
  std::vector<IntVec> collection;
  LabelledQuiver q;
};

Linear load_linear(const Options& o) {
  Linear l{load_space(o), {}, {}};
  require_complete(l.s);
  l.collection = load_collection(o, l.s.x);
  l.q = quiver_of_sections(l.s.x, l.collection);
  return l;
}

Json linser_map(const Options& o) {
  const auto l = load_linear(o);
  return Json{{"psi", monomials(psi_map(l.q), variable_names("x", l.s.x.num_vars))}, {"labels", to_json(psi_map(l.q))}};
}

Json linser_morphism(const Options& o) {
  const auto l = load_linear(o);
  check_var_limit(o, l.s.x);
  const IntVec theta = load_theta(o, l.q, true);
  const auto check = is_morphism(l.s.x, l.q, theta);
  return Json{{"theta", to_json(theta)},
              {"morphism", check.morphism},
              {"witness", check.witness ? support_json(*check.witness) : Json(nullptr)}};
}

Json linser_bpf(const Options& o) {
  const auto l = load_linear(o);
  check_var_limit(o, l.s.x);
  const auto cert = bpf_certificate(l.s.x, l.collection, l.q);
  Json pairs = Json::array();
  for (const auto& [i, j] : cert.bpf_pairs) pairs.push_back(Json::array({i, j}));
  Json out{{"rank_collection", cert.rank_collection},
           {"rank_bpf", cert.rank_bpf},
           {"bpf_pairs", pairs},
           {"conclusive", cert.conclusive},
           {"attempts", cert.attempts}};
  out["theta"] = cert.theta ? to_json(*cert.theta) : Json(nullptr);
  if (!cert.conclusive) {
    const IntVec theta = default_theta(l.q);
    const Lattice r = refinement_lattice(l.q);
    out["direct"] = Json{{"theta", to_json(theta)},
                         {"generic", is_generic(l.q, r, theta)},
                         {"morphism", is_morphism(l.s.x, l.q, theta).morphism}};
  }
  return out;
}

Json linser_representable(const Options& o) {
  const auto l = load_linear(o);
  const auto rep = is_representable(l.s.x, l.collection);
  return Json{{"representable", rep.representable},
              {"failing_cone", rep.failing_cone ? support_json(*rep.failing_cone) : Json(nullptr)}};
}

Json linser_image(const Options& o) {
  const auto l = load_linear(o);
  const auto ideal = image_ideal(l.q, refinement_lattice(l.q));
  return Json{{"variables", ideal.names},
              {"generators", groebner_json(saturate_generators(ideal), ideal.names)}};
}

Json linser_moduli(const Options& o) {
  const auto l = load_linear(o);
  check_var_limit(o, l.s.x);
  const IntVec theta = load_theta(o, l.q, true);
  Json out = moduli_report(l.q, theta);
  out["psi"] = monomials(psi_map(l.q), variable_names("x", l.s.x.num_vars));
  out["morphism"] = is_morphism(l.s.x, l.q, theta).morphism;
  return out;
}

Json mckay_build(const Options& o) {
  const auto a = load_action(o);
  const auto q = mckay_quiver(a);
  Json out = quiver_json(q);
  out["order"] = q.num_vertices();
  out["rank_R"] = refinement_lattice(q).rank();
  out["R_equals_ker_pic"] = verify_r_equals_ker_pic(a);
  out["character_group"] = group_json(character_group(a));
  return out;
}

Json mckay_basis(const Options& o) {
  const auto a = load_action(o);
  return Json{{"bbar", to_json(bbar(a))}, {"basis", to_json(canonical_basis(a))}};
}

Json mckay_wallcross(const Options& o) {
  const auto a = load_action(o);
  const auto r = wall_cross(a);
  Json fixed = Json::array();
  for (auto s : r.hilb_fixed_points) fixed.push_back(support_json(s));
  return Json{{"theta1", to_json(r.theta1)},
              {"theta2", to_json(r.theta2)},
              {"basis", to_json(r.basis)},
              {"z_all_nonzero_verified", r.z_all_nonzero_verified},
              {"residual_group", group_json(r.residual_group)},
              {"chart_arrows", r.chart_arrows},
              {"theta1_semistable_faces", r.theta1_semistable_faces},
              {"theta2_semistable_faces", r.theta2_semistable_faces},
              {"hilb_fixed_points", fixed},
              {"fixed_point_count", r.hilb_fixed_points.size()},
              {"walls", walls_json(r.walls)},
              {"wall_count", r.walls.size()}};
}

Json mckay_clusters(const Options& o) {
  const auto a = load_action(o);
  const std::vector<std::string> names{"x", "y", "z"};
  Json clusters = Json::array();
  for (const auto& c : gcluster_oracle(a)) {
    Json ideal = Json::array();
    for (const auto& g : c.generators) ideal.push_back(render_monomial(g, names));
    Json staircase = Json::array();
    for (const auto& m : c.staircase) staircase.push_back(render_monomial(m, names));
    clusters.push_back(Json{{"ideal", ideal}, {"staircase", staircase}});
  }
  return Json{{"count", clusters.size()}, {"clusters", clusters}};
}

void add_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--fan", o.fan, "stacky fan JSON");
  cmd->add_option("--cox", o.cox, "graded Cox presentation JSON");
  cmd->add_option("--quiver", o.quiver, "labelled quiver JSON");
  cmd->add_option("--collection", o.collection, "line bundles, e.g. O,O(1),O(2)");
  cmd->add_option("--theta", o.theta, "weight in vertex coordinates, e.g. -3,2,1");
  cmd->add_option("--action", o.action, "abelian action JSON");
  cmd->add_option("--support", o.support, "arrow indices, e.g. 0,2");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--trust-projective", o.trust_projective, "assert the coarse space is projective");
  cmd->add_option("--max-vars", o.max_vars, "cap on Cox variables for exhaustive scans");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stacky linear series and McKay wall crossing"};
  app.require_subcommand(1);
  Options o;
  std::function<Json(const Options&)> job;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Json (*fn)(const Options&)) {
    auto* cmd = parent->add_subcommand(name, help);
    add_options(cmd, o);
    cmd->callback([&job, fn] { job = fn; });
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->require_subcommand(1);
    return cmd;
  };

  auto* fan = group("fan", "stacky fan checks");
  leaf(fan, "check", "validate a fan or Cox presentation", fan_check);
  auto* sec = app.add_subcommand("sections", "torus-invariant sections of each class");
  add_options(sec, o);
  sec->callback([&] { job = sections_report; });
  auto* quiver = group("quiver", "quivers of sections");
  leaf(quiver, "build", "quiver of sections of a collection", quiver_build);
  auto* stability = group("stability", "refined stability");
  leaf(stability, "status", "status of one arrow support", stability_status);
  leaf(stability, "generic", "whether a weight is generic", stability_generic);
  auto* moduli = group("moduli", "moduli presentations");
  leaf(moduli, "present", "toric presentation of the moduli stack", moduli_present);
  auto* linser = group("linser", "linear series to the moduli stack");
  leaf(linser, "map", "coordinate monomials of the map", linser_map);
  leaf(linser, "morphism", "whether the map is a morphism", linser_morphism);
  leaf(linser, "bpf", "base-point-free certificate", linser_bpf);
  leaf(linser, "representable", "representability at every cone", linser_representable);
  leaf(linser, "image", "binomial ideal of the image", linser_image);
  leaf(linser, "moduli", "moduli presentation of the target", linser_moduli);
  auto* mckay = group("mckay", "McKay quivers and wall crossing");
  leaf(mckay, "build", "McKay quiver", mckay_build);
  leaf(mckay, "basis", "basis of R inside Bbar", mckay_basis);
  leaf(mckay, "wallcross", "wall crossing between the two chambers", mckay_wallcross);
  leaf(mckay, "clusters", "monomial G-clusters", mckay_clusters);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Json report = job(o);
    if (o.format == "text")
      std::cout << render_text(report);
    else
      std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    const bool validation = e.kind() == ErrorKind::validation;
    const Json err{{"error", Json{{"kind", validation ? "validation" : "computation"},
                                  {"code", e.code()},
                                  {"field", e.field()},
                                  {"message", e.what()}}}};
    if (o.format == "text")
      std::cerr << "error: " << e.what() << "\n";
    else
      std::cout << err.dump(2) << "\n";
    return validation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
