#include "maxitive/measures.hpp"

#include <stdexcept>

namespace maxitive {

namespace {

std::vector<ExtRat> values_from_map(const Space& space,
                                    const std::map<std::string, ExtRat>& atom_values) {
  for (const auto& [label, value] : atom_values) {
    if (!space.atom_index(label)) throw UnknownAtom(label, "atom values");
  }
  std::vector<ExtRat> values;
  values.reserve(static_cast<std::size_t>(space.atom_count()));
  for (const auto& label : space.labels()) {
    const auto it = atom_values.find(label);
    if (it == atom_values.end()) throw MissingAtomValue(label);
    values.push_back(it->second);
  }
  return values;
}

void check_size(const Space& space, const std::vector<ExtRat>& atom_values) {
  if (atom_values.size() != static_cast<std::size_t>(space.atom_count()))
    throw std::invalid_argument("need exactly one value per atom");
}

}  // namespace

MaxitiveMeasure::MaxitiveMeasure(Space space, std::vector<ExtRat> atom_values)
    : space_(std::move(space)), atom_values_(std::move(atom_values)) {
  check_size(space_, atom_values_);
}

MaxitiveMeasure MaxitiveMeasure::from_atoms(Space space,
                                            const std::map<std::string, ExtRat>& atom_values) {
  auto values = values_from_map(space, atom_values);
  return MaxitiveMeasure(std::move(space), std::move(values));
}

MaxitiveMeasure MaxitiveMeasure::from_table(const SetFunction& table) {
  if (!is_maxitive(table).ok)
    throw std::invalid_argument("table is not maxitive; run is_maxitive for a witness");
  const Space& space = table.space();
  std::vector<ExtRat> values;
  values.reserve(static_cast<std::size_t>(space.atom_count()));
  for (int atom = 0; atom < space.atom_count(); ++atom) {
    values.push_back(table(space.singleton(atom)));
  }
  return MaxitiveMeasure(space, std::move(values));
}

ExtRat MaxitiveMeasure::operator()(SubsetId set) const {
  if (!space_.contains(set)) throw std::out_of_range("subset mask out of range for this space");
  ExtRat best;  // tau(empty) = 0
  for_each_atom(set, [&](int atom) {
    const ExtRat& v = atom_values_[static_cast<std::size_t>(atom)];
    if (best < v) best = v;
  });
  return best;
}

SetFunction MaxitiveMeasure::to_set_function() const {
  std::vector<ExtRat> table;
  table.reserve(space_.subset_count());
  for (std::uint32_t mask = 0; mask < space_.subset_count(); ++mask) {
    table.push_back((*this)(SubsetId(mask)));
  }
  return SetFunction(space_, std::move(table));
}

AdditiveMeasure::AdditiveMeasure(Space space, std::vector<ExtRat> atom_values)
    : space_(std::move(space)), atom_values_(std::move(atom_values)) {
  check_size(space_, atom_values_);
}

AdditiveMeasure AdditiveMeasure::from_atoms(Space space,
                                            const std::map<std::string, ExtRat>& atom_values) {
  auto values = values_from_map(space, atom_values);
  return AdditiveMeasure(std::move(space), std::move(values));
}

AdditiveMeasure AdditiveMeasure::from_table(const SetFunction& table) {
  if (!is_additive(table).ok)
    throw std::invalid_argument("table is not additive; run is_additive for a witness");
  const Space& space = table.space();
  std::vector<ExtRat> values;
  values.reserve(static_cast<std::size_t>(space.atom_count()));
  for (int atom = 0; atom < space.atom_count(); ++atom) {
    values.push_back(table(space.singleton(atom)));
  }
  return AdditiveMeasure(space, std::move(values));
}

ExtRat AdditiveMeasure::operator()(SubsetId set) const {
  if (!space_.contains(set)) throw std::out_of_range("subset mask out of range for this space");
  ExtRat total;
  for_each_atom(set, [&](int atom) { total = total + atom_values_[static_cast<std::size_t>(atom)]; });
  return total;
}

SetFunction AdditiveMeasure::to_set_function() const {
  std::vector<ExtRat> table;
  table.reserve(space_.subset_count());
  for (std::uint32_t mask = 0; mask < space_.subset_count(); ++mask) {
    table.push_back((*this)(SubsetId(mask)));
  }
  return SetFunction(space_, std::move(table));
}

TableVerdict is_maxitive(const SetFunction& f) {
  const std::uint32_t count = f.space().subset_count();
  if (!f(SubsetId(0)).is_zero())
    return {false, PairWitness{SubsetId(0), SubsetId(0)}};

  // Fast path: on a power set, pairwise maxitivity is equivalent to the
  // table being the max of its singleton values. Only when that fails do
  // we pay for the quadratic scan that yields the least witness.
  bool canonical = true;
  for (std::uint32_t mask = 0; canonical && mask < count; ++mask) {
    ExtRat expected;
    for_each_atom(SubsetId(mask), [&](int atom) {
      const ExtRat& v = f(f.space().singleton(atom));
      if (expected < v) expected = v;
    });
    canonical = f(SubsetId(mask)) == expected;
  }
  if (canonical) return {true, std::nullopt};

  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      const SubsetId sa(a), sb(b);
      if (f(sa.union_with(sb)) != max(f(sa), f(sb)))
        return {false, PairWitness{sa, sb}};
    }
  }
  return {true, std::nullopt};  // unreachable: a non-canonical table has a violating pair
}

TableVerdict is_additive(const SetFunction& f) {
  const std::uint32_t count = f.space().subset_count();
  if (!f(SubsetId(0)).is_zero())
    return {false, PairWitness{SubsetId(0), SubsetId(0)}};

  bool canonical = true;
  for (std::uint32_t mask = 0; canonical && mask < count; ++mask) {
    ExtRat expected;
    for_each_atom(SubsetId(mask), [&](int atom) {
      expected = expected + f(f.space().singleton(atom));
    });
    canonical = f(SubsetId(mask)) == expected;
  }
  if (canonical) return {true, std::nullopt};

  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      const SubsetId sa(a), sb(b);
      if (!sa.disjoint_from(sb)) continue;
      if (f(sa.union_with(sb)) != f(sa) + f(sb))
        return {false, PairWitness{sa, sb}};
    }
  }
  return {true, std::nullopt};
}

bool is_normed(const MaxitiveMeasure& tau) { return tau(tau.space().full_set()) == ExtRat(1u); }

bool is_two_valued(const MaxitiveMeasure& tau) {
  const ExtRat one(1u);
  bool saw_one = false;
  for (const ExtRat& v : tau.atom_values()) {
    if (v == one) {
      saw_one = true;
    } else if (!v.is_zero()) {
      return false;
    }
  }
  return saw_one;
}

MaxitiveMeasure induced_delta(const AdditiveMeasure& m) {
  std::vector<ExtRat> values;
  values.reserve(m.atom_values().size());
  for (const ExtRat& v : m.atom_values()) {
    values.emplace_back(v.is_positive() ? 1u : 0u);
  }
  return MaxitiveMeasure(m.space(), std::move(values));
}

Ideal::Ideal(Space space, SubsetId generator) : space_(std::move(space)), generator_(generator) {
  if (!space_.contains(generator)) throw std::out_of_range("ideal generator out of range for this space");
}

std::vector<SubsetId> Ideal::members() const {
  std::vector<SubsetId> out;
  const std::uint32_t g = generator_.mask();
  // (s - g) & g walks the subsets of g in ascending mask order.
  std::uint32_t s = 0;
  do {
    out.push_back(SubsetId(s));
    s = (s - g) & g;
  } while (s != 0);
  return out;
}

namespace detail {

int max_disjoint_positive_family_impl(const Space& space, const std::vector<ExtRat>& set_values) {
  const int positive_atoms = [&] {
    int count = 0;
    for (int atom = 0; atom < space.atom_count(); ++atom) {
      if (set_values[space.singleton(atom).mask()].is_positive()) ++count;
    }
    return count;
  }();

  // Beyond 10 atoms the subset DP (3^n states) stops being a desk-scale
  // brute force; the closed form stands on its own there.
  if (space.atom_count() > 10) return positive_atoms;

  const std::uint32_t count = space.subset_count();
  std::vector<int> best(count, 0);
  for (std::uint32_t avail = 1; avail < count; ++avail) {
    // Families restricted to atoms of `avail`: pick a first set S, recurse
    // on what is left.
    int b = 0;
    for (std::uint32_t s = avail; s != 0; s = (s - 1) & avail) {
      if (set_values[s].is_positive()) {
        const int candidate = 1 + best[avail & ~s];
        if (candidate > b) b = candidate;
      }
    }
    best[avail] = b;
  }

  const int brute = best[count - 1];
  if (brute != positive_atoms)
    throw std::logic_error("max_disjoint_positive_family: brute force disagrees with closed form");
  return brute;
}

}  // namespace detail

}  // namespace maxitive
