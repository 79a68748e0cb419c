#pragma once

#include <functional>
#include <span>
#include <vector>

#include "maxitive/extrat.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/space.hpp"

namespace maxitive {

/// A finite partition of the whole space into nonempty, pairwise
/// disjoint blocks.
class Partition {
public:
  Partition(Space space, std::vector<SubsetId> blocks);

  const Space& space() const noexcept { return space_; }
  std::span<const SubsetId> blocks() const noexcept { return blocks_; }

private:
  Space space_;
  std::vector<SubsetId> blocks_;
};

/// Enumerates every set partition of the atoms, in the lexicographic
/// order of their restricted-growth strings; blocks are ordered by first
/// appearance. Visits Bell(n) partitions, so it refuses to run beyond
/// 10 atoms (throws PartitionEnumerationTooLarge).
void for_each_partition(const Space& space, const std::function<void(const Partition&)>& fn);

/// The disjoint variation of tau: the least additive measure dominating
/// it. On a finite space the defining supremum over partitions is
/// attained at the partition into singletons, so the atom values of the
/// result are exactly tau's singleton values.
AdditiveMeasure disjoint_variation(const MaxitiveMeasure& tau);

/// Evaluates the defining supremum directly: the maximum over all set
/// partitions pi of E of the sum of tau(B n B') over blocks B' of pi.
/// Same enumeration ceiling as for_each_partition.
ExtRat variation_oracle(const MaxitiveMeasure& tau, SubsetId b);

}  // namespace maxitive
