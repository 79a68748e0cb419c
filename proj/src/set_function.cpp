#include "maxitive/set_function.hpp"

#include <stdexcept>
#include <utility>

namespace maxitive {

SetFunction::SetFunction(Space space, std::vector<ExtRat> table)
    : space_(std::move(space)), table_(std::move(table)) {
  if (table_.size() != space_.subset_count()) {
    throw std::invalid_argument("table must have one entry per subset");
  }
}

SetFunction SetFunction::constant(Space space, const ExtRat& value) {
  std::vector<ExtRat> table(space.subset_count(), value);
  return SetFunction(std::move(space), std::move(table));
}

}  // namespace maxitive
