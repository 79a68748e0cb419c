#include "maxitive/document.hpp"

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "maxitive/errors.hpp"

namespace maxitive {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
}

void require_known_fields(const json& doc, std::initializer_list<std::string_view> allowed) {
  for (const auto& item : doc.items()) {
    bool known = false;
    for (std::string_view field : allowed) {
      if (item.key() == field) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown field", item.key());
  }
}

const json& require_field(const json& doc, const std::string& field) {
  if (!doc.is_object()) throw ParseError("document must be an object", "$");
  auto it = doc.find(field);
  if (it == doc.end()) throw ParseError("missing field", field);
  return *it;
}

Space space_from(const json& doc) {
  const json& atoms = require_field(doc, "atoms");
  if (!atoms.is_array()) throw ParseError("atoms must be an array of labels", "atoms");
  std::vector<std::string> labels;
  for (const json& atom : atoms) {
    if (!atom.is_string()) throw ParseError("atom labels must be strings", "atoms");
    labels.push_back(atom.get<std::string>());
  }
  try {
    return Space(labels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), "atoms");
  }
}

ExtRat value_from(const json& value, const std::string& location) {
  if (!value.is_string()) throw MalformedValue(value.dump(), location);
  std::optional<ExtRat> parsed = ExtRat::parse(value.get<std::string>());
  if (!parsed) throw MalformedValue(value.get<std::string>(), location);
  return *parsed;
}

std::map<std::string, ExtRat> value_map(const json& doc, const std::string& field) {
  const json& obj = require_field(doc, field);
  if (!obj.is_object()) throw ParseError(field + " must map labels to value-strings", field);
  std::map<std::string, ExtRat> out;
  for (const auto& item : obj.items()) {
    out.emplace(item.key(), value_from(item.value(), field + "." + item.key()));
  }
  return out;
}

SetFunction table_from(const json& doc, const Space& space) {
  const json& table = require_field(doc, "table");
  if (!table.is_object()) throw ParseError("table must map set-strings to value-strings", "table");
  std::vector<std::optional<ExtRat>> slots(space.subset_count());
  for (const auto& item : table.items()) {
    SubsetId set = parse_set_string(space, item.key());
    auto& slot = slots[set.mask()];
    if (slot) throw ParseError("duplicate set", "table." + item.key());
    slot = value_from(item.value(), "table." + item.key());
  }
  std::vector<ExtRat> values;
  values.reserve(slots.size());
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    if (!slots[mask]) throw IncompleteTable(space.set_string(SubsetId(mask)));
    values.push_back(std::move(*slots[mask]));
  }
  return SetFunction(space, std::move(values));
}

json labels_json(const Space& space) {
  json out = json::array();
  for (int a = 0; a < space.atom_count(); ++a) out.push_back(space.label(a));
  return out;
}

json atom_values_json(const Space& space, std::span<const ExtRat> values) {
  json out = json::object();
  for (int a = 0; a < space.atom_count(); ++a) {
    out[space.label(a)] = values[static_cast<std::size_t>(a)].str();
  }
  return out;
}

std::string finish(json doc) { return doc.dump(2) + "\n"; }

}  // namespace

ParsedMeasure parse_measure(const std::string& text) {
  json doc = parse_json(text);
  Space space = space_from(doc);
  const json& kind = require_field(doc, "kind");
  if (!kind.is_string()) throw ParseError("kind must be a string", "kind");
  std::string k = kind.get<std::string>();
  if (k == "maxitive") {
    require_known_fields(doc, {"atoms", "kind", "atom_values"});
    return MaxitiveMeasure::from_atoms(std::move(space), value_map(doc, "atom_values"));
  }
  if (k == "additive") {
    require_known_fields(doc, {"atoms", "kind", "atom_values"});
    return AdditiveMeasure::from_atoms(std::move(space), value_map(doc, "atom_values"));
  }
  if (k == "table") {
    require_known_fields(doc, {"atoms", "kind", "table"});
    return table_from(doc, space);
  }
  throw ParseError("kind must be \"maxitive\", \"additive\" or \"table\"", "kind");
}

Density parse_density(const std::string& text) {
  json doc = parse_json(text);
  Space space = space_from(doc);
  require_known_fields(doc, {"atoms", "values"});
  return Density::from_atoms(std::move(space), value_map(doc, "values"));
}

std::string to_document(const MaxitiveMeasure& tau) {
  json doc;
  doc["atoms"] = labels_json(tau.space());
  doc["kind"] = "maxitive";
  doc["atom_values"] = atom_values_json(tau.space(), tau.atom_values());
  return finish(std::move(doc));
}

std::string to_document(const AdditiveMeasure& m) {
  json doc;
  doc["atoms"] = labels_json(m.space());
  doc["kind"] = "additive";
  doc["atom_values"] = atom_values_json(m.space(), m.atom_values());
  return finish(std::move(doc));
}

std::string to_document(const SetFunction& f) {
  const Space& space = f.space();
  json table = json::object();
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    table[space.set_string(SubsetId(mask))] = f(SubsetId(mask)).str();
  }
  json doc;
  doc["atoms"] = labels_json(space);
  doc["kind"] = "table";
  doc["table"] = std::move(table);
  return finish(std::move(doc));
}

std::string to_document(const Density& c) {
  json doc;
  doc["atoms"] = labels_json(c.space());
  doc["values"] = atom_values_json(c.space(), c.values());
  return finish(std::move(doc));
}

SubsetId parse_set_string(const Space& space, std::string_view text) {
  if (text.empty()) return space.empty_set();
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return space.subset_of_labels(parts);
}

const Space& space_of(const ParsedMeasure& measure) {
  return std::visit([](const auto& m) -> const Space& { return m.space(); }, measure);
}

}  // namespace maxitive
