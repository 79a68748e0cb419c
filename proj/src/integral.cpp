#include "maxitive/integral.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxitive {

namespace {

void check_inputs(const Space& a, const Space& b, SubsetId set) {
  if (a != b) throw SpaceMismatch();
  if (!a.contains(set)) throw std::out_of_range("subset mask out of range for this space");
}

}  // namespace

Density::Density(Space space, std::vector<ExtRat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(space_.atom_count()))
    throw std::invalid_argument("need exactly one density value per atom");
}

Density Density::from_atoms(Space space, const std::map<std::string, ExtRat>& values) {
  for (const auto& [label, value] : values) {
    if (!space.atom_index(label)) throw UnknownAtom(label, "density values");
  }
  std::vector<ExtRat> ordered;
  ordered.reserve(static_cast<std::size_t>(space.atom_count()));
  for (const auto& label : space.labels()) {
    const auto it = values.find(label);
    if (it == values.end()) throw MissingAtomValue(label);
    ordered.push_back(it->second);
  }
  return Density(std::move(space), std::move(ordered));
}

SubsetId Density::strictly_above(const ExtRat& t) const {
  std::uint32_t mask = 0;
  for (std::size_t atom = 0; atom < values_.size(); ++atom) {
    if (values_[atom] > t) mask |= 1u << atom;
  }
  return SubsetId(mask);
}

SubsetId Density::at_least(const ExtRat& v) const {
  std::uint32_t mask = 0;
  for (std::size_t atom = 0; atom < values_.size(); ++atom) {
    if (values_[atom] >= v) mask |= 1u << atom;
  }
  return SubsetId(mask);
}

Density Density::with_value(int atom, ExtRat value) const {
  Density copy = *this;
  copy.values_.at(static_cast<std::size_t>(atom)) = std::move(value);
  return copy;
}

Threshold::Threshold(ExtRat t) : t_(std::move(t)) {
  if (t_.is_infinite()) throw std::domain_error("thresholds must be finite");
}

ExtRat shilkret_term(const Density& c, const MaxitiveMeasure& nu, SubsetId b, const Threshold& t) {
  check_inputs(c.space(), nu.space(), b);
  return t.value() * nu(b.intersect(c.strictly_above(t.value())));
}

ExtRat shilkret_integral(const Density& c, const MaxitiveMeasure& nu, SubsetId b) {
  check_inputs(c.space(), nu.space(), b);
  ExtRat best;
  for_each_atom(b, [&](int atom) {
    const ExtRat term = c(atom) * nu(nu.space().singleton(atom));
    if (best < term) best = term;
  });
  return best;
}

ExtRat shilkret_oracle(const Density& c, const MaxitiveMeasure& nu, SubsetId b) {
  check_inputs(c.space(), nu.space(), b);

  // t * nu(B n {c > t}) is nondecreasing on each interval between
  // consecutive values of c on B, so its supremum is the best of the
  // left limits v * nu(B n {c >= v}) over the distinct finite values v.
  std::vector<ExtRat> cuts;
  bool unbounded = false;
  for_each_atom(b, [&](int atom) {
    const ExtRat& v = c(atom);
    if (v.is_finite()) {
      cuts.push_back(v);
    } else if (nu(nu.space().singleton(atom)).is_positive()) {
      unbounded = true;  // t * nu grows without bound in t
    }
  });
  if (unbounded) return ExtRat::infinity();

  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  ExtRat best;
  for (const ExtRat& v : cuts) {
    const ExtRat contribution = v * nu(b.intersect(c.at_least(v)));
    if (best < contribution) best = contribution;
  }
  return best;
}

ExtRat essential_supremum(const Density& c, const AdditiveMeasure& m, SubsetId b) {
  check_inputs(c.space(), m.space(), b);
  return shilkret_integral(c, induced_delta(m), b);
}

}  // namespace maxitive
