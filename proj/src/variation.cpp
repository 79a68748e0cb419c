#include "maxitive/variation.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxitive {

namespace {

constexpr int kPartitionAtomLimit = 10;  // Bell(10) = 115975

}  // namespace

Partition::Partition(Space space, std::vector<SubsetId> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  std::uint32_t seen = 0;
  for (const SubsetId block : blocks_) {
    if (block.is_empty()) throw std::invalid_argument("partition blocks must be nonempty");
    if (!space_.contains(block)) throw std::out_of_range("partition block out of range for this space");
    if ((seen & block.mask()) != 0) throw std::invalid_argument("partition blocks must be disjoint");
    seen |= block.mask();
  }
  if (seen != space_.full_set().mask())
    throw std::invalid_argument("partition blocks must cover the space");
}

void for_each_partition(const Space& space, const std::function<void(const Partition&)>& fn) {
  const int n = space.atom_count();
  if (n > kPartitionAtomLimit) throw PartitionEnumerationTooLarge(n);

  // Restricted-growth strings: rgs[0] = 0 and rgs[i] <= 1 + max(prefix).
  // Lexicographic successor: bump the rightmost position that may grow,
  // reset everything after it to 0.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> blocks;
  while (true) {
    blocks.clear();
    for (int atom = 0; atom < n; ++atom) {
      const auto block = static_cast<std::size_t>(rgs[static_cast<std::size_t>(atom)]);
      if (block == blocks.size()) blocks.push_back(0);
      blocks[block] |= 1u << atom;
    }
    std::vector<SubsetId> ids;
    ids.reserve(blocks.size());
    for (const std::uint32_t mask : blocks) ids.push_back(SubsetId(mask));
    fn(Partition(space, std::move(ids)));

    int i = n - 1;
    for (; i >= 1; --i) {
      const int prefix_max =
          *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i < 1) return;
    rgs[static_cast<std::size_t>(i)] += 1;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
}

AdditiveMeasure disjoint_variation(const MaxitiveMeasure& tau) {
  std::vector<ExtRat> values;
  values.reserve(tau.atom_values().size());
  for (int atom = 0; atom < tau.space().atom_count(); ++atom) {
    values.push_back(tau(tau.space().singleton(atom)));
  }
  return AdditiveMeasure(tau.space(), std::move(values));
}

ExtRat variation_oracle(const MaxitiveMeasure& tau, SubsetId b) {
  if (!tau.space().contains(b)) throw std::out_of_range("subset mask out of range for this space");
  ExtRat best;
  for_each_partition(tau.space(), [&](const Partition& pi) {
    ExtRat total;
    for (const SubsetId block : pi.blocks()) {
      total = total + tau(b.intersect(block));
    }
    if (best < total) best = total;
  });
  return best;
}

}  // namespace maxitive
