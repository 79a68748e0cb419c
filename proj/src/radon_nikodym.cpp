#include "maxitive/radon_nikodym.hpp"

#include <stdexcept>

namespace maxitive {

AcWitness::AcWitness(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu, SubsetId set)
    : set_(set) {
  if (tau.space() != nu.space()) throw SpaceMismatch();
  if (!nu(set).is_zero() || !tau(set).is_positive())
    throw std::logic_error("AcWitness must be nu-null and tau-positive");
}

AcVerdict absolutely_continuous(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu) {
  if (tau.space() != nu.space()) throw SpaceMismatch();
  for (int atom = 0; atom < tau.space().atom_count(); ++atom) {
    if (nu.atom_value(atom).is_zero() && tau.atom_value(atom).is_positive()) {
      return {false, AcWitness(tau, nu, tau.space().singleton(atom))};
    }
  }
  return {true, std::nullopt};
}

Density density(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu) {
  if (tau.space() != nu.space()) throw SpaceMismatch();
  const Space& space = tau.space();

  for (int atom = 0; atom < space.atom_count(); ++atom) {
    if (nu.atom_value(atom).is_infinite()) throw NotSigmaFinite(space.label(atom));
  }
  const AcVerdict ac = absolutely_continuous(tau, nu);
  if (!ac.ok) {
    throw NotAbsolutelyContinuous(*ac.witness, space.set_string(ac.witness->set()));
  }

  std::vector<ExtRat> values;
  values.reserve(static_cast<std::size_t>(space.atom_count()));
  for (int atom = 0; atom < space.atom_count(); ++atom) {
    const ExtRat& t = tau.atom_value(atom);
    const ExtRat& n = nu.atom_value(atom);
    if (n.is_zero()) {
      values.emplace_back(0u);  // canonical choice on nu-null atoms
    } else {
      values.push_back(t / n);  // t = inf propagates to c = inf
    }
  }
  Density c(space, std::move(values));

  if (!verify_density(tau, nu, c).ok)
    throw std::logic_error("density construction failed its defining identity");
  return c;
}

DensityVerdict verify_density(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu,
                              const Density& c) {
  if (tau.space() != nu.space() || tau.space() != c.space()) throw SpaceMismatch();
  for (std::uint32_t mask = 0; mask < tau.space().subset_count(); ++mask) {
    const SubsetId b(mask);
    if (shilkret_integral(c, nu, b) != tau(b)) return {false, b};
  }
  return {true, std::nullopt};
}

bool densities_agree_ae(const Density& c1, const Density& c2, const MaxitiveMeasure& nu) {
  if (c1.space() != c2.space() || c1.space() != nu.space()) throw SpaceMismatch();
  for (int atom = 0; atom < nu.space().atom_count(); ++atom) {
    if (nu.atom_value(atom).is_positive() && c1(atom) != c2(atom)) return false;
  }
  return true;
}

}  // namespace maxitive
