#include "ballmodal/io.hpp"

#include <json.hpp>
#include <sstream>

#include "ballmodal/error.hpp"

namespace ballmodal {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed document at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InputError(where + ": missing field '" + name + "'");
  }
  return obj.at(name);
}

std::string text_of(const json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a string");
  return value.get<std::string>();
}

Formula formula_of(const json& value, const std::string& where) {
  const std::string text = text_of(value, where);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Formula> formulas_of(const json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected a list");
  std::vector<Formula> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(formula_of(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Frame frame_of(const json& doc) {
  const json& worlds = field(doc, "worlds", "frame");
  if (!worlds.is_array() || worlds.empty()) {
    throw InputError("worlds: expected a non-empty list of names");
  }
  std::vector<std::string> names;
  for (const auto& w : worlds) names.push_back(text_of(w, "worlds"));

  const json& lattices = field(doc, "lattices", "frame");
  if (!lattices.is_object()) throw InputError("lattices: expected an object");
  std::vector<Lattice> labels;
  for (const auto& name : names) {
    if (!lattices.contains(name)) {
      throw InputError("lattices: no lattice for world '" + name + "'");
    }
    const std::string l = text_of(lattices.at(name), "lattices." + name);
    auto lattice = lattice_from_name(l);
    if (!lattice) throw InputError("lattices." + name + ": unknown lattice '" + l + "'");
    labels.push_back(*lattice);
  }
  for (const auto& [key, _] : lattices.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw InputError("lattices: unknown world '" + key + "'");
    }
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& list = doc.at("edges");
    if (!list.is_array()) throw InputError("edges: expected a list of pairs");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) {
        throw InputError(where + ": expected [from, to]");
      }
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        const std::string name = text_of(list[i][k], where);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw InputError(where + ": unknown world '" + name + "'");
        ends[k] = static_cast<std::size_t>(it - names.begin());
      }
      edges.emplace_back(ends[0], ends[1]);
    }
  }
  return Frame(std::move(names), std::move(labels), edges);
}

ordered_json frame_json(const Frame& frame) {
  ordered_json doc;
  doc["worlds"] = frame.names();
  ordered_json lattices = ordered_json::object();
  for (std::size_t w = 0; w < frame.size(); ++w) {
    lattices[frame.name(w)] = to_string(frame.lattice(w));
  }
  doc["lattices"] = lattices;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : frame.edges()) {
    edges.push_back({frame.name(a), frame.name(b)});
  }
  doc["edges"] = edges;
  return doc;
}

}  // namespace

Frame frame_from_json(std::string_view text) {
  return frame_of(parse_document(text));
}

Model model_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Ultrafilter uf;
  if (doc.contains("ultrafilter")) {
    const std::string name = text_of(doc.at("ultrafilter"), "ultrafilter");
    auto parsed = ultrafilter_from_name(name);
    if (!parsed) throw InputError("ultrafilter: unknown generator '" + name + "'");
    uf = *parsed;
  }
  Model model(frame_of(doc), uf);
  if (doc.contains("valuation")) {
    const json& valuation = doc.at("valuation");
    if (!valuation.is_object()) throw InputError("valuation: expected an object");
    for (const auto& [world, vars] : valuation.items()) {
      auto w = model.frame().index_of(world);
      if (!w) throw InputError("valuation: unknown world '" + world + "'");
      if (!vars.is_object()) {
        throw InputError("valuation." + world + ": expected an object");
      }
      for (const auto& [var, value] : vars.items()) {
        const std::string where = "valuation." + world + "." + var;
        const std::string name = text_of(value, where);
        auto element = element_from_name(name);
        if (!element) throw InputError(where + ": unknown element '" + name + "'");
        try {
          model.assign(*w, var, *element);
        } catch (const InputError& e) {
          throw InputError(where + ": " + e.what());
        }
      }
    }
  }
  return model;
}

std::string frame_to_json(const Frame& frame) {
  return frame_json(frame).dump(2);
}

std::string model_to_json(const Model& model) {
  ordered_json doc = frame_json(model.frame());
  doc["ultrafilter"] = to_string(model.ultrafilter());
  ordered_json valuation = ordered_json::object();
  const auto vars = model.variables();
  for (std::size_t w = 0; w < model.frame().size(); ++w) {
    ordered_json row = ordered_json::object();
    for (const auto& v : vars) {
      if (auto value = model.value(w, v)) row[v] = to_string(*value);
    }
    valuation[model.frame().name(w)] = row;
  }
  doc["valuation"] = valuation;
  return doc.dump(2);
}

Derivation derivation_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Derivation d;
  if (doc.contains("name")) d.name = text_of(doc.at("name"), "name");
  const json& steps = field(doc, "steps", "proof");
  if (!steps.is_array()) throw InputError("steps: expected a list");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "steps[" + std::to_string(i) + "]";
    const json& s = steps[i];
    DerivationStep step{
        {{}, formula_of(field(s, "conclusion", where), where + ".conclusion")},
        Rule::Premise,
        {},
        std::nullopt};
    if (s.contains("premises")) {
      for (auto& f : formulas_of(s.at("premises"), where + ".premises")) {
        step.judgment.premises.insert(std::move(f));
      }
    }
    const std::string tag = text_of(field(s, "rule", where), where + ".rule");
    auto rule = rule_from_name(tag);
    if (!rule) throw InputError(where + ".rule: unknown rule '" + tag + "'");
    step.rule = *rule;
    if (s.contains("cites")) {
      const json& cites = s.at("cites");
      if (!cites.is_array()) throw InputError(where + ".cites: expected a list");
      for (const auto& c : cites) {
        if (!c.is_number_unsigned()) {
          throw InputError(where + ".cites: expected step indices");
        }
        step.cites.push_back(c.get<std::size_t>());
      }
    }
    if (s.contains("params")) {
      const json& p = s.at("params");
      if (!p.is_object()) throw InputError(where + ".params: expected an object");
      StepParams params;
      if (p.contains("lambda")) {
        params.lambda = formulas_of(p.at("lambda"), where + ".params.lambda");
      }
      if (p.contains("gamma")) {
        params.gamma = formulas_of(p.at("gamma"), where + ".params.gamma");
      }
      if (p.contains("phi")) params.phi = formula_of(p.at("phi"), where + ".params.phi");
      step.params = std::move(params);
    }
    d.steps.push_back(std::move(step));
  }
  return d;
}

std::string derivation_to_json(const Derivation& d) {
  ordered_json doc;
  if (!d.name.empty()) doc["name"] = d.name;
  ordered_json steps = ordered_json::array();
  for (const auto& step : d.steps) {
    ordered_json s;
    ordered_json premises = ordered_json::array();
    for (const auto& p : step.judgment.premises) premises.push_back(print(p));
    s["premises"] = premises;
    s["conclusion"] = print(step.judgment.conclusion);
    s["rule"] = to_string(step.rule);
    s["cites"] = step.cites;
    if (step.params) {
      ordered_json params;
      auto list = [](const std::vector<Formula>& fs) {
        ordered_json out = ordered_json::array();
        for (const auto& f : fs) out.push_back(print(f));
        return out;
      };
      params["lambda"] = list(step.params->lambda);
      params["gamma"] = list(step.params->gamma);
      if (step.params->phi) params["phi"] = print(*step.params->phi);
      s["params"] = params;
    }
    steps.push_back(s);
  }
  doc["steps"] = steps;
  return doc.dump(2);
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string correspondence_csv(const CorrespondenceReport& report) {
  std::ostringstream out;
  out << "frame_encoding,property_holds,formula_valid,witness,ultrafilter\n";
  for (const auto& m : report.mismatches) {
    const bool property_holds =
        m.direction == MismatchDirection::PropertyHoldsFormulaInvalid;
    out << csv_field(frame_encoding(m.frame)) << ','
        << (property_holds ? "true" : "false") << ','
        << (property_holds ? "false" : "true") << ',' << csv_field(m.witness)
        << ',' << to_string(m.ultrafilter) << '\n';
  }
  return out.str();
}

}  // namespace ballmodal
