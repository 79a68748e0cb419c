#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/set_function.hpp"

namespace maxitive {

/// What a measure document denotes. Kind "maxitive"/"additive" arrive in
/// canonical form; kind "table" is a raw set function the caller still
/// has to validate.
using ParsedMeasure = std::variant<MaxitiveMeasure, AdditiveMeasure, SetFunction>;

/// Parses a measure document:
///   {"atoms": ["a","b"], "kind": "maxitive", "atom_values": {"a": "1/2", "b": "1"}}
///   {"atoms": ["a","b"], "kind": "table", "table": {"": "0", "a": "1", "b": "1", "a,b": "1"}}
/// Values are the exact tokens "p/q", a bare nonnegative integer, or "inf";
/// a table must enumerate all 2^n sets.
ParsedMeasure parse_measure(const std::string& text);

/// {"atoms": ["a","b"], "values": {"a": "0", "b": "7/2"}}
Density parse_density(const std::string& text);

std::string to_document(const MaxitiveMeasure& tau);
std::string to_document(const AdditiveMeasure& m);
std::string to_document(const SetFunction& f);
std::string to_document(const Density& c);

/// Comma-joined labels, "" for the empty set; order irrelevant.
SubsetId parse_set_string(const Space& space, std::string_view text);

const Space& space_of(const ParsedMeasure& measure);

}  // namespace maxitive
