#pragma once

#include <optional>

#include "maxitive/errors.hpp"
#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"

namespace maxitive {

/// A counterexample to absolute continuity: a set that is nu-null but
/// tau-positive. The constructor re-checks both facts, so a constructed
/// witness is always genuine.
class AcWitness {
public:
  AcWitness(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu, SubsetId set);
  SubsetId set() const noexcept { return set_; }

private:
  SubsetId set_;
};

struct AcVerdict {
  bool ok = false;
  std::optional<AcWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// tau << nu: every nu-null set is tau-null. On an atomic space this
/// reduces to the singletons; the least violating singleton is returned
/// as witness.
AcVerdict absolutely_continuous(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu);

class NotAbsolutelyContinuous : public Error {
public:
  explicit NotAbsolutelyContinuous(AcWitness witness, const std::string& set_string)
      : Error("tau is not absolutely continuous with respect to nu: nu(" + set_string +
              ") = 0 but tau is positive there"),
        witness_(witness) {}
  const AcWitness& witness() const noexcept { return witness_; }

private:
  AcWitness witness_;
};

/// The Radon-Nikodym density of tau with respect to nu: a map c with
/// tau(B) equal to the Shilkret integral of c over B against nu, for
/// every B. Requires nu atom-finite (NotSigmaFinite) and tau << nu
/// (NotAbsolutelyContinuous). The value on nu-null atoms is fixed to 0,
/// which makes the output canonical; the defining identity is
/// re-verified over all 2^n sets before returning.
Density density(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu);

struct DensityVerdict {
  bool ok = false;
  std::optional<SubsetId> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Exhaustively checks tau(B) = integral of c over B d(nu) on all 2^n
/// sets; on failure reports the least failing set.
DensityVerdict verify_density(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu, const Density& c);

/// c1 = c2 nu-almost everywhere, i.e. they agree on every nu-positive atom.
bool densities_agree_ae(const Density& c1, const Density& c2, const MaxitiveMeasure& nu);

}  // namespace maxitive
