#pragma once

#include <vector>

#include "maxitive/extrat.hpp"
#include "maxitive/space.hpp"

namespace maxitive {

/// Unvalidated candidate measure: one exact value per measurable set.
/// This is the container arbitrary tables arrive in; is_maxitive /
/// is_additive decide whether they may be promoted to a real measure.
class SetFunction {
public:
  /// table[mask] is the value on SubsetId(mask); size must be 2^n.
  SetFunction(Space space, std::vector<ExtRat> table);
  static SetFunction constant(Space space, const ExtRat& value);

  const Space& space() const noexcept { return space_; }
  const ExtRat& operator()(SubsetId set) const { return table_.at(set.mask()); }
  void set(SubsetId set, ExtRat value) { table_.at(set.mask()) = std::move(value); }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
  Space space_;
  std::vector<ExtRat> table_;
};

}  // namespace maxitive
