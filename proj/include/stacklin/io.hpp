#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stacklin/abelian_group.hpp"
#include "stacklin/binomial.hpp"
#include "stacklin/mckay.hpp"
#include "stacklin/moduli.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/toric.hpp"

namespace stacklin {

// std::map-backed, so keys are emitted in sorted order.
using Json = nlohmann::json;

Json load_json(const std::string& path);

// Integers may be JSON numbers or decimal strings.
Int parse_int(const Json& j, const std::string& field);
IntVec parse_vector(const Json& j, const std::string& field);

StackyFan parse_fan(const Json& j);
// {"num_vars", "pic": {"free_rank", "torsion"}, "deg", "irrelevant"}
CoxSpace parse_cox(const Json& j);
// {"label_rank", "vertices": [[...]], "arrows": [{"tail", "head", "label"}]}
LabelledQuiver parse_quiver(const Json& j);
// {"invariant_factors", "weights", "require_sl"}
AbelianAction parse_action(const Json& j);

// "-3,2,1"
IntVec parse_int_list(const std::string& text, const std::string& field);
// "O,O(1),O(2,1)": classes in Pic coordinates; omitted trailing torsion
// coordinates are zero.
std::vector<IntVec> parse_collection(const std::string& text, const AbelianGroup& pic);

Json to_json(const Int& x);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const std::vector<IntVec>& vs);
Json support_json(Support s);
Json group_json(const AbelianGroup& g);
Json quiver_json(const LabelledQuiver& q);
Json moduli_json(const ModuliPresentation& m);
Json walls_json(const std::vector<Wall>& walls);

// Indented "key: value" rendering for humans.
std::string render_text(const Json& j);

}  // namespace stacklin
