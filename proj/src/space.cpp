#include "maxitive/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace maxitive {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptyLabelList();
  if (labels_.size() > static_cast<std::size_t>(kMaxAtoms)) throw TooManyAtoms(labels_.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    // Labels are joined with commas in set strings, so they must be
    // nonempty and comma-free to stay parseable.
    if (label.empty() || label.find(',') != std::string::npos)
      throw std::invalid_argument("atom label \"" + label + "\" must be nonempty and contain no comma");
    if (!seen.insert(label).second) throw DuplicateLabel(label);
  }
}

std::optional<int> Space::atom_index(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

SubsetId Space::singleton(int atom) const {
  if (atom < 0 || atom >= atom_count()) throw std::out_of_range("atom index out of range");
  return SubsetId(1u << atom);
}

SubsetId Space::subset_of_labels(std::span<const std::string> names) const {
  std::uint32_t mask = 0;
  for (const auto& name : names) {
    const auto idx = atom_index(name);
    if (!idx) throw UnknownAtom(name, "set description");
    mask |= 1u << *idx;
  }
  return SubsetId(mask);
}

std::vector<std::string> Space::labels_of(SubsetId set) const {
  if (!contains(set)) throw std::out_of_range("subset mask out of range for this space");
  std::vector<std::string> out;
  for_each_atom(set, [&](int atom) { out.push_back(labels_[static_cast<std::size_t>(atom)]); });
  return out;
}

std::string Space::set_string(SubsetId set) const {
  if (!contains(set)) throw std::out_of_range("subset mask out of range for this space");
  std::string out;
  for_each_atom(set, [&](int atom) {
    if (!out.empty()) out += ',';
    out += labels_[static_cast<std::size_t>(atom)];
  });
  return out;
}

}  // namespace maxitive
