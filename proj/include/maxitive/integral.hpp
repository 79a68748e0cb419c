#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "maxitive/extrat.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/space.hpp"

namespace maxitive {

/// A measurable map E -> [0, inf], stored by its value on each atom.
class Density {
public:
  Density(Space space, std::vector<ExtRat> values);
  static Density from_atoms(Space space, const std::map<std::string, ExtRat>& values);

  const Space& space() const noexcept { return space_; }
  const ExtRat& operator()(int atom) const { return values_.at(static_cast<std::size_t>(atom)); }
  std::span<const ExtRat> values() const noexcept { return values_; }

  /// {c > t} as a subset mask; t may be any extended value.
  SubsetId strictly_above(const ExtRat& t) const;
  /// {c >= v}.
  SubsetId at_least(const ExtRat& v) const;

  /// A copy with the given atom's value replaced.
  Density with_value(int atom, ExtRat value) const;

  friend bool operator==(const Density&, const Density&) = default;

private:
  Space space_;
  std::vector<ExtRat> values_;
};

/// A finite nonnegative cut level for the threshold sets {c > t}.
class Threshold {
public:
  explicit Threshold(ExtRat t);
  const ExtRat& value() const noexcept { return t_; }

private:
  ExtRat t_;
};

/// One term of the defining supremum: t * nu(B n {c > t}).
ExtRat shilkret_term(const Density& c, const MaxitiveMeasure& nu, SubsetId b, const Threshold& t);

/// Shilkret integral of c over B with respect to nu: the supremum over
/// finite t >= 0 of t * nu(B n {c > t}). On a finite space this equals
/// the closed form max over atoms a of B of c(a) * nu({a}), which is
/// what this evaluates; shilkret_oracle walks the definition instead.
ExtRat shilkret_integral(const Density& c, const MaxitiveMeasure& nu, SubsetId b);

/// Definitional evaluation of the same supremum. Each distinct finite
/// value v of c on B contributes its left limit v * nu(B n {c >= v});
/// an atom with c = inf and positive nu makes the supremum infinite.
ExtRat shilkret_oracle(const Density& c, const MaxitiveMeasure& nu, SubsetId b);

/// Essential supremum of c over B with respect to m, realized as the
/// Shilkret integral against the induced two-valued measure delta_m.
/// Equals max{c(a) : a in B, m({a}) > 0} with empty max = 0.
ExtRat essential_supremum(const Density& c, const AdditiveMeasure& m, SubsetId b);

}  // namespace maxitive
