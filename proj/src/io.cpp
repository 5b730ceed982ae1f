#include "stacklin/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "stacklin/errors.hpp"

namespace stacklin {
namespace {

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) fail_validation("MissingField", field + key, "required field is missing");
  return j.at(key);
}

const Json& array_at(const Json& j, const std::string& field) {
  if (!j.is_array()) fail_validation("NotAnArray", field, "expected a JSON array");
  return j;
}

std::size_t parse_index(const Json& j, const std::string& field) {
  const Int x = parse_int(j, field);
  if (x < 0 || !x.fits_ulong_p()) fail_validation("BadIndex", field, "expected a nonnegative index");
  return x.get_ui();
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [&](const Json& x) {
    if (!x.is_array()) return false;
    for (const auto& e : x)
      if (e.is_object() || (e.is_array() && !e.empty() && (e[0].is_array() || e[0].is_object()))) return false;
    return true;
  };
  auto inline_array = [&](const Json& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += ", ";
      if (x[i].is_array()) {
        s += "(";
        for (std::size_t k = 0; k < x[i].size(); ++k) s += (k ? "," : "") + scalar(x[i][k]);
        s += ")";
      } else {
        s += scalar(x[i]);
      }
    }
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !flat(value))) {
        out << pad << key << ":\n";
        render(out, value, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_array() ? inline_array(value) : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_object() || (j[i].is_array() && !flat(j[i]))) {
        out << pad << "- [" << i << "]\n";
        render(out, j[i], indent + 1);
      } else {
        out << pad << "- " << (j[i].is_array() ? inline_array(j[i]) : scalar(j[i])) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_validation("Unreadable", path, "cannot open input file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail_validation("BadJson", path, e.what());
  }
}

Int parse_int(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<unsigned long>())) : Int(j.get<long>());
  if (j.is_string()) {
    const std::string s = trim(j.get<std::string>());
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0) fail_validation("BadInteger", field, "not a decimal integer: " + s);
    return x;
  }
  fail_validation("BadInteger", field, "expected an integer");
}

IntVec parse_vector(const Json& j, const std::string& field) {
  IntVec out;
  const auto& a = array_at(j, field);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_int(a[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

StackyFan parse_fan(const Json& j) {
  if (!j.is_object()) fail_validation("NotAnObject", "fan", "expected a JSON object");
  StackyFan fan;
  fan.rank = parse_index(member(j, "rank", ""), "rank");
  const auto& rays = array_at(member(j, "rays", ""), "rays");
  for (std::size_t i = 0; i < rays.size(); ++i) fan.rays.push_back(parse_vector(rays[i], "rays[" + std::to_string(i) + "]"));
  const auto& cones = array_at(member(j, "max_cones", ""), "max_cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string field = "max_cones[" + std::to_string(i) + "]";
    std::vector<std::size_t> cone;
    const auto& c = array_at(cones[i], field);
    for (std::size_t k = 0; k < c.size(); ++k) cone.push_back(parse_index(c[k], field + "[" + std::to_string(k) + "]"));
    fan.max_cones.push_back(std::move(cone));
  }
  if (fan.rays.empty()) fail_validation("EmptyFan", "rays", "a fan needs at least one ray");
  if (fan.max_cones.empty()) fail_validation("EmptyFan", "max_cones", "a fan needs at least one cone");
  return fan;
}

CoxSpace parse_cox(const Json& j) {
  if (!j.is_object()) fail_validation("NotAnObject", "cox", "expected a JSON object");
  const std::size_t n = parse_index(member(j, "num_vars", ""), "num_vars");
  const auto& pic = member(j, "pic", "");
  const std::size_t free_rank = parse_index(member(pic, "free_rank", "pic."), "pic.free_rank");
  const IntVec torsion = parse_vector(member(pic, "torsion", "pic."), "pic.torsion");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    const std::string field = "pic.torsion[" + std::to_string(i) + "]";
    if (torsion[i] < 2) fail_validation("BadInvariantFactors", field, "torsion orders must be at least 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0) fail_validation("BadInvariantFactors", field, "each order must divide the next");
  }
  const auto& deg = array_at(member(j, "deg", ""), "deg");
  if (deg.size() != n) fail_validation("DimensionMismatch", "deg", "one degree per variable");
  std::vector<IntVec> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(parse_vector(deg[i], "deg[" + std::to_string(i) + "]"));
  const auto& irr = array_at(member(j, "irrelevant", ""), "irrelevant");
  std::vector<Support> irrelevant;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    const std::string field = "irrelevant[" + std::to_string(i) + "]";
    Support s = 0;
    const auto& m = array_at(irr[i], field);
    for (std::size_t k = 0; k < m.size(); ++k) {
      const std::size_t v = parse_index(m[k], field + "[" + std::to_string(k) + "]");
      if (v >= n) fail_validation("BadIndex", field, "variable index out of range");
      s |= Support{1} << v;
    }
    irrelevant.push_back(s);
  }
  AbelianGroup group(free_rank, torsion, IntMatrix(free_rank + torsion.size(), 0));
  return cox_space_from_data(std::move(group), std::move(degrees), std::move(irrelevant));
}

LabelledQuiver parse_quiver(const Json& j) {
  if (!j.is_object()) fail_validation("NotAnObject", "quiver", "expected a JSON object");
  LabelledQuiver q;
  q.label_rank = parse_index(member(j, "label_rank", ""), "label_rank");
  const auto& vertices = array_at(member(j, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    q.vertices.push_back(parse_vector(vertices[i], "vertices[" + std::to_string(i) + "]"));
  const auto& arrows = array_at(member(j, "arrows", ""), "arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string field = "arrows[" + std::to_string(i) + "].";
    Arrow a;
    a.tail = parse_index(member(arrows[i], "tail", field), field + "tail");
    a.head = parse_index(member(arrows[i], "head", field), field + "head");
    a.label = parse_vector(member(arrows[i], "label", field), field + "label");
    q.arrows.push_back(std::move(a));
  }
  validate(q);
  return q;
}

AbelianAction parse_action(const Json& j) {
  if (!j.is_object()) fail_validation("NotAnObject", "action", "expected a JSON object");
  AbelianAction a;
  a.invariant_factors = parse_vector(member(j, "invariant_factors", ""), "invariant_factors");
  const auto& weights = array_at(member(j, "weights", ""), "weights");
  for (std::size_t i = 0; i < weights.size(); ++i)
    a.weights.push_back(parse_vector(weights[i], "weights[" + std::to_string(i) + "]"));
  if (j.contains("require_sl")) {
    if (!j.at("require_sl").is_boolean()) fail_validation("NotABoolean", "require_sl", "expected true or false");
    a.require_sl = j.at("require_sl").get<bool>();
  }
  validate(a);
  return a;
}

IntVec parse_int_list(const std::string& text, const std::string& field) {
  IntVec out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(Json(item), field));
  if (out.empty()) fail_validation("BadInteger", field, "expected a comma-separated list of integers");
  return out;
}

std::vector<IntVec> parse_collection(const std::string& text, const AbelianGroup& pic) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail_validation("BadCollection", "collection", "unbalanced parentheses");
    if (c == ',' && depth == 0) {
      items.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) fail_validation("BadCollection", "collection", "unbalanced parentheses");
  items.push_back(trim(current));

  std::vector<IntVec> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string field = "collection[" + std::to_string(i) + "]";
    const std::string& s = items[i];
    IntVec cls;
    if (s == "O") {
      cls = pic.zero();
    } else if (s.size() > 3 && s.starts_with("O(") && s.back() == ')') {
      cls = parse_int_list(s.substr(2, s.size() - 3), field);
      if (cls.size() < pic.free_rank() || cls.size() > pic.coordinates())
        fail_validation("DimensionMismatch", field, "expected " + std::to_string(pic.coordinates()) + " Pic coordinates");
      cls.resize(pic.coordinates());
    } else {
      fail_validation("BadCollection", field, "expected O or O(a,b,...), got '" + s + "'");
    }
    out.push_back(pic.reduce(cls));
  }
  return out;
}

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const std::vector<IntVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json support_json(Support s) {
  Json out = Json::array();
  for (auto i : members(s)) out.push_back(i);
  return out;
}

Json group_json(const AbelianGroup& g) {
  return Json{{"description", g.describe()}, {"free_rank", g.free_rank()}, {"torsion", to_json(g.torsion())}};
}

Json quiver_json(const LabelledQuiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back(Json{{"tail", a.tail}, {"head", a.head}, {"label", to_json(a.label)}});
  return Json{{"label_rank", q.label_rank}, {"vertices", to_json(q.vertices)}, {"arrows", arrows}};
}

Json moduli_json(const ModuliPresentation& m) {
  Json unstable = Json::array();
  for (auto s : m.unstable_supports) unstable.push_back(support_json(s));
  std::vector<IntVec> sorted = m.arrow_weights;
  std::sort(sorted.begin(), sorted.end());
  Json out{{"quotient_group", group_json(m.gamma)},
           {"coordinate_weights", to_json(m.arrow_weights)},
           {"weights_sorted", to_json(sorted)},
           {"theta_class", to_json(m.theta_class)},
           {"unstable_supports", unstable},
           {"theta_delta", to_json(m.theta_delta)},
           {"tautological", to_json(m.tautological)}};
  out["recognised"] = m.weighted_projective ? Json(m.recognised()) : Json(nullptr);
  return out;
}

Json walls_json(const std::vector<Wall>& walls) {
  Json out = Json::array();
  for (const auto& w : walls)
    out.push_back(Json{{"parameter", w.parameter.get_str()}, {"theta", to_json(w.theta)}, {"normals", to_json(w.normals)}});
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace stacklin
