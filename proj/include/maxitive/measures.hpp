#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxitive/extrat.hpp"
#include "maxitive/set_function.hpp"
#include "maxitive/space.hpp"

namespace maxitive {

/// Maxitive measure in canonical form: stored by its values on atoms,
/// with tau(B) = max of the atom values over B and tau(empty) = 0. On a
/// finite power set this is exactly the sigma-maxitive property.
class MaxitiveMeasure {
public:
  MaxitiveMeasure(Space space, std::vector<ExtRat> atom_values);

  /// Throws MissingAtomValue for an absent atom, UnknownAtom for a stray key.
  static MaxitiveMeasure from_atoms(Space space, const std::map<std::string, ExtRat>& atom_values);

  /// Promotes a validated table. Throws std::invalid_argument if the
  /// table is not maxitive; callers should run is_maxitive first.
  static MaxitiveMeasure from_table(const SetFunction& table);

  ExtRat operator()(SubsetId set) const;
  const Space& space() const noexcept { return space_; }
  const ExtRat& atom_value(int atom) const { return atom_values_.at(static_cast<std::size_t>(atom)); }
  std::span<const ExtRat> atom_values() const noexcept { return atom_values_; }
  SetFunction to_set_function() const;

  friend bool operator==(const MaxitiveMeasure&, const MaxitiveMeasure&) = default;

private:
  Space space_;
  std::vector<ExtRat> atom_values_;
};

/// Additive measure in canonical form: m(B) = sum of atom values over B.
class AdditiveMeasure {
public:
  AdditiveMeasure(Space space, std::vector<ExtRat> atom_values);
  static AdditiveMeasure from_atoms(Space space, const std::map<std::string, ExtRat>& atom_values);
  static AdditiveMeasure from_table(const SetFunction& table);

  ExtRat operator()(SubsetId set) const;
  const Space& space() const noexcept { return space_; }
  const ExtRat& atom_value(int atom) const { return atom_values_.at(static_cast<std::size_t>(atom)); }
  std::span<const ExtRat> atom_values() const noexcept { return atom_values_; }
  SetFunction to_set_function() const;

  friend bool operator==(const AdditiveMeasure&, const AdditiveMeasure&) = default;

private:
  Space space_;
  std::vector<ExtRat> atom_values_;
};

template <typename M>
concept MeasureLike = requires(const M& m, SubsetId b) {
  { m(b) } -> std::convertible_to<ExtRat>;
  { m.space() } -> std::convertible_to<const Space&>;
};

struct PairWitness {
  SubsetId first;
  SubsetId second;
  friend bool operator==(PairWitness, PairWitness) = default;
};

/// Outcome of a table check: ok, or the lexicographically least
/// violating pair of sets (by mask, first component dominant).
struct TableVerdict {
  bool ok = false;
  std::optional<PairWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// True iff f(empty) = 0 and f(A u B) = max(f(A), f(B)) for all pairs.
/// A failed empty-set condition is reported as the pair (empty, empty).
TableVerdict is_maxitive(const SetFunction& f);

/// True iff f(empty) = 0 and f(A u B) = f(A) + f(B) for all disjoint pairs.
TableVerdict is_additive(const SetFunction& f);

/// tau(E) = 1.
bool is_normed(const MaxitiveMeasure& tau);

/// The range of tau over all 2^n sets is exactly {0, 1}. The empty set
/// supplies 0, so this holds iff every atom value is 0 or 1 and at least
/// one atom value is 1.
bool is_two_valued(const MaxitiveMeasure& tau);

/// The two-valued measure induced by m: delta_m(B) = 1 iff m(B) > 0.
MaxitiveMeasure induced_delta(const AdditiveMeasure& m);

/// Principal sigma-ideal: all subsets of a generator. On a finite power
/// set every sigma-ideal has this form.
class Ideal {
public:
  Ideal(Space space, SubsetId generator);

  const Space& space() const noexcept { return space_; }
  SubsetId generator() const noexcept { return generator_; }
  bool contains(SubsetId set) const noexcept { return set.subset_of(generator_); }

  /// All members, ascending by mask.
  std::vector<SubsetId> members() const;

private:
  Space space_;
  SubsetId generator_;
};

/// A set L' in the ideal with mu(S \ L') = 0 for every member S. On a
/// finite space the generator itself always works and is returned.
SubsetId principal_witness(const MeasureLike auto& mu, const Ideal& ideal) {
  if (mu.space() != ideal.space()) throw SpaceMismatch();
  return ideal.generator();
}

namespace detail {
int max_disjoint_positive_family_impl(const Space& space, const std::vector<ExtRat>& set_values);
}

/// Maximum cardinality of a pairwise-disjoint family of sets of positive
/// measure. Found by brute force over disjoint families (cross-checked
/// against the count of positive atoms) up to 10 atoms, by the closed
/// form alone beyond that.
int max_disjoint_positive_family(const MeasureLike auto& mu) {
  const Space& space = mu.space();
  std::vector<ExtRat> values(space.subset_count());
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    values[mask] = mu(SubsetId(mask));
  }
  return detail::max_disjoint_positive_family_impl(space, values);
}

}  // namespace maxitive
