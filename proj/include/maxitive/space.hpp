#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxitive/errors.hpp"

namespace maxitive {

/// A measurable set of a finite space, encoded as an atom bitmask: bit i
/// is set exactly when atom i belongs to the set. Numeric mask order is
/// the tie-breaking order used by every witness-producing checker.
class SubsetId {
public:
  constexpr SubsetId() = default;
  constexpr explicit SubsetId(std::uint32_t mask) : mask_(mask) {}

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool is_empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int atom) const noexcept { return (mask_ >> atom) & 1u; }
  constexpr int cardinality() const noexcept { return std::popcount(mask_); }

  constexpr SubsetId union_with(SubsetId other) const noexcept { return SubsetId(mask_ | other.mask_); }
  constexpr SubsetId intersect(SubsetId other) const noexcept { return SubsetId(mask_ & other.mask_); }
  constexpr SubsetId minus(SubsetId other) const noexcept { return SubsetId(mask_ & ~other.mask_); }
  constexpr bool subset_of(SubsetId other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint_from(SubsetId other) const noexcept { return (mask_ & other.mask_) == 0; }

  friend constexpr auto operator<=>(SubsetId, SubsetId) noexcept = default;

private:
  std::uint32_t mask_ = 0;
};

/// Calls fn(atom index) for every atom in the set, ascending.
template <typename Fn>
void for_each_atom(SubsetId set, Fn&& fn) {
  for (std::uint32_t m = set.mask(); m != 0; m &= m - 1) {
    fn(std::countr_zero(m));
  }
}

/// Finite measurable space: an ordered list of distinct atom labels. The
/// sigma-algebra is always the full power set, so measurable sets are
/// exactly the 2^n subset masks.
class Space {
public:
  static constexpr int kMaxAtoms = 16;

  /// Throws EmptyLabelList, TooManyAtoms or DuplicateLabel.
  explicit Space(std::vector<std::string> labels);

  int atom_count() const noexcept { return static_cast<int>(labels_.size()); }
  std::uint32_t subset_count() const noexcept { return 1u << labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(int atom) const { return labels_.at(static_cast<std::size_t>(atom)); }
  std::optional<int> atom_index(std::string_view label) const;

  constexpr SubsetId empty_set() const noexcept { return SubsetId(0); }
  SubsetId full_set() const noexcept { return SubsetId(subset_count() - 1); }
  SubsetId singleton(int atom) const;
  bool contains(SubsetId set) const noexcept { return set.mask() < subset_count(); }

  /// Throws UnknownAtom; duplicate labels simply collapse into the mask.
  SubsetId subset_of_labels(std::span<const std::string> names) const;
  std::vector<std::string> labels_of(SubsetId set) const;

  /// Comma-joined labels in atom order; "" for the empty set.
  std::string set_string(SubsetId set) const;

  friend bool operator==(const Space&, const Space&) = default;

private:
  std::vector<std::string> labels_;
};

}  // namespace maxitive
