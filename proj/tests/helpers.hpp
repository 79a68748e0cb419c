#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "maxitive/harness.hpp"
#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/space.hpp"

namespace test_util {

using namespace maxitive;

inline ExtRat V(std::string_view token) {
  auto value = ExtRat::parse(token);
  REQUIRE_MESSAGE(value.has_value(), "bad token: " << token);
  return *value;
}

inline std::vector<ExtRat> values(const std::vector<std::string>& tokens) {
  std::vector<ExtRat> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back(V(token));
  return out;
}

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

inline MaxitiveMeasure MM(const std::vector<std::string>& tokens) {
  return MaxitiveMeasure(Space(letters(static_cast<int>(tokens.size()))), values(tokens));
}

inline AdditiveMeasure AM(const std::vector<std::string>& tokens) {
  return AdditiveMeasure(Space(letters(static_cast<int>(tokens.size()))), values(tokens));
}

inline Density DD(const std::vector<std::string>& tokens) {
  return Density(Space(letters(static_cast<int>(tokens.size()))), values(tokens));
}

/// Random atom values off a small mixed grid, infinity included unless
/// told otherwise. Deterministic via TrialRng.
inline std::vector<ExtRat> random_values(TrialRng& rng, int n, bool allow_infinite = true) {
  static const std::vector<std::string> grid = {"0", "1/3", "1/2", "1", "2", "7"};
  std::vector<ExtRat> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (allow_infinite && rng.chance(1, 8)) {
      out.push_back(ExtRat::infinity());
    } else {
      out.push_back(V(grid[rng.below(grid.size())]));
    }
  }
  return out;
}

}  // namespace test_util
