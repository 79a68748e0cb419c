#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/harness.hpp"
#include "maxitive/integral.hpp"

using namespace maxitive;
using test_util::AM;
using test_util::DD;
using test_util::letters;
using test_util::MM;
using test_util::V;

TEST_CASE("density threshold sets") {
  Density c = DD({"3", "1/2", "7"});
  CHECK(c.strictly_above(V("1/2")) == SubsetId(0b101));
  CHECK(c.strictly_above(V("0")) == SubsetId(0b111));
  CHECK(c.strictly_above(V("7")) == SubsetId(0));
  CHECK(c.at_least(V("1/2")) == SubsetId(0b111));
  CHECK(c.at_least(V("3")) == SubsetId(0b101));
  CHECK(DD({"inf", "0"}).strictly_above(V("1000000")) == SubsetId(0b01));
}

TEST_CASE("threshold values must be finite") {
  CHECK(Threshold(V("3/2")).value() == V("3/2"));
  CHECK_THROWS_AS(Threshold(ExtRat::infinity()), std::domain_error);
}

TEST_CASE("shilkret_term evaluates one candidate of the supremum") {
  Density c = DD({"3", "1/2", "7"});
  MaxitiveMeasure nu = MM({"1", "2", "0"});
  SubsetId everything(0b111);
  CHECK(shilkret_term(c, nu, everything, Threshold(V("1"))) == V("1"));      // {c>1} = {a,c}, nu = max(1,0)
  CHECK(shilkret_term(c, nu, everything, Threshold(V("1/4"))) == V("1/2"));  // {c>1/4} = E, nu = 2
  CHECK(shilkret_term(c, nu, everything, Threshold(V("0"))) == V("0"));
  CHECK(shilkret_term(c, nu, everything, Threshold(V("5"))) == V("0"));      // {c>5} = {c}, nu({c}) = 0
}

TEST_CASE("shilkret integral, closed form and oracle, on the worked example") {
  Density c = DD({"3", "1/2", "7"});
  MaxitiveMeasure nu = MM({"1", "2", "0"});
  SubsetId everything(0b111);
  CHECK(shilkret_integral(c, nu, everything) == V("3"));
  CHECK(shilkret_oracle(c, nu, everything) == V("3"));
  CHECK(shilkret_integral(c, nu, SubsetId(0b110)) == V("1"));  // {b,c}
  CHECK(shilkret_oracle(c, nu, SubsetId(0b110)) == V("1"));
  CHECK(shilkret_integral(c, nu, SubsetId(0)) == V("0"));

  MaxitiveMeasure zero = MM({"0", "0", "0"});
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CHECK(shilkret_integral(c, zero, SubsetId(mask)) == V("0"));
    CHECK(shilkret_oracle(c, zero, SubsetId(mask)) == V("0"));
  }
}

TEST_CASE("constant densities integrate to their value against normed measures") {
  Density c = DD({"5/7", "5/7", "5/7"});
  MaxitiveMeasure nu = MM({"1/2", "1", "0"});
  CHECK(shilkret_integral(c, nu, SubsetId(0b111)) == V("5/7"));
  CHECK(shilkret_oracle(c, nu, SubsetId(0b111)) == V("5/7"));
}

TEST_CASE("infinite density values follow 0 times infinity = 0") {
  CHECK(shilkret_integral(DD({"inf"}), MM({"1/2"}), SubsetId(1)).is_infinite());
  CHECK(shilkret_oracle(DD({"inf"}), MM({"1/2"}), SubsetId(1)).is_infinite());
  CHECK(shilkret_integral(DD({"inf"}), MM({"0"}), SubsetId(1)) == V("0"));
  CHECK(shilkret_oracle(DD({"inf"}), MM({"0"}), SubsetId(1)) == V("0"));
  // infinite measure with zero density likewise contributes nothing
  CHECK(shilkret_integral(DD({"0"}), MM({"inf"}), SubsetId(1)) == V("0"));
  CHECK(shilkret_oracle(DD({"0"}), MM({"inf"}), SubsetId(1)) == V("0"));
  CHECK(shilkret_integral(DD({"2"}), MM({"inf"}), SubsetId(1)).is_infinite());
}

TEST_CASE("inputs must share a space") {
  CHECK_THROWS_AS(shilkret_integral(DD({"1", "1"}), MM({"1"}), SubsetId(1)), SpaceMismatch);
  CHECK_THROWS_AS(essential_supremum(DD({"1"}), AM({"1", "1"}), SubsetId(1)), SpaceMismatch);
}

TEST_CASE("oracle equivalence, exhaustive on small grids") {
  // n = 2 with the richer grid
  {
    Space space(letters(2));
    std::vector<ExtRat> grid = {V("0"), V("1/2"), V("1"), V("3"), ExtRat::infinity()};
    for (const ExtRat& c0 : grid)
      for (const ExtRat& c1 : grid)
        for (const ExtRat& n0 : grid)
          for (const ExtRat& n1 : grid) {
            Density c(space, {c0, c1});
            MaxitiveMeasure nu(space, {n0, n1});
            for (std::uint32_t mask = 0; mask < 4; ++mask) {
              CHECK(shilkret_integral(c, nu, SubsetId(mask)) ==
                    shilkret_oracle(c, nu, SubsetId(mask)));
            }
          }
  }
  // n = 4 with a coarse grid
  {
    Space space(letters(4));
    std::vector<ExtRat> grid = {V("0"), V("1"), ExtRat::infinity()};
    std::vector<ExtRat> cv(4), nv(4);
    for (int ci = 0; ci < 81; ++ci)
      for (int ni = 0; ni < 81; ++ni) {
        int cc = ci, nn = ni;
        for (int k = 0; k < 4; ++k, cc /= 3, nn /= 3) {
          cv[static_cast<std::size_t>(k)] = grid[static_cast<std::size_t>(cc % 3)];
          nv[static_cast<std::size_t>(k)] = grid[static_cast<std::size_t>(nn % 3)];
        }
        Density c(space, cv);
        MaxitiveMeasure nu(space, nv);
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
          CHECK(shilkret_integral(c, nu, SubsetId(mask)) ==
                shilkret_oracle(c, nu, SubsetId(mask)));
        }
      }
  }
}

TEST_CASE("oracle equivalence, randomized up to six atoms") {
  TrialRng rng(21, 0);
  for (int round = 0; round < 300; ++round) {
    int n = 1 + static_cast<int>(rng.below(6));
    Space space(letters(n));
    Density c(space, test_util::random_values(rng, n));
    MaxitiveMeasure nu(space, test_util::random_values(rng, n));
    for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
      CHECK(shilkret_integral(c, nu, SubsetId(mask)) == shilkret_oracle(c, nu, SubsetId(mask)));
    }
  }
}

TEST_CASE("structural laws of the integral") {
  TrialRng rng(22, 0);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng.below(5));
    Space space(letters(n));
    Density c(space, test_util::random_values(rng, n));
    MaxitiveMeasure nu(space, test_util::random_values(rng, n));
    SubsetId a(static_cast<std::uint32_t>(rng.below(space.subset_count())));
    SubsetId b(static_cast<std::uint32_t>(rng.below(space.subset_count())));

    // monotone in the set
    if (a.subset_of(b)) CHECK(shilkret_integral(c, nu, a) <= shilkret_integral(c, nu, b));

    // maxitive in the set
    CHECK(shilkret_integral(c, nu, a.union_with(b)) ==
          max(shilkret_integral(c, nu, a), shilkret_integral(c, nu, b)));

    // monotone in the density
    Density c_up = c;
    for (int atom = 0; atom < n; ++atom) {
      if (rng.chance(1, 2)) c_up = c_up.with_value(atom, c_up(atom) + V("1/3"));
    }
    CHECK(shilkret_integral(c, nu, b) <= shilkret_integral(c_up, nu, b));

    // positively homogeneous for finite k > 0
    ExtRat k = (round % 3 == 0) ? V("1/2") : (round % 3 == 1) ? V("2") : V("7/3");
    std::vector<ExtRat> scaled;
    for (int atom = 0; atom < n; ++atom) scaled.push_back(k * c(atom));
    CHECK(shilkret_integral(Density(space, scaled), nu, b) == k * shilkret_integral(c, nu, b));

    // indicator identity: integral of 1_C over B is nu(B n C)
    SubsetId cset(static_cast<std::uint32_t>(rng.below(space.subset_count())));
    std::vector<ExtRat> indicator(static_cast<std::size_t>(n), V("0"));
    for_each_atom(cset, [&](int atom) { indicator[static_cast<std::size_t>(atom)] = V("1"); });
    CHECK(shilkret_integral(Density(space, indicator), nu, b) == nu(b.intersect(cset)));
  }
}

TEST_CASE("essential supremum ignores null atoms") {
  Density c = DD({"1/2", "1", "99"});
  AdditiveMeasure m = AM({"1/2", "1", "0"});
  CHECK(essential_supremum(c, m, SubsetId(0b111)) == V("1"));
  CHECK(essential_supremum(c, m, SubsetId(0)) == V("0"));
  CHECK(essential_supremum(c, AM({"0", "0", "0"}), SubsetId(0b111)) == V("0"));

  TrialRng rng(23, 0);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng.below(4));
    Space space(letters(n));
    Density cc(space, test_util::random_values(rng, n));
    AdditiveMeasure mm(space, test_util::random_values(rng, n));
    for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
      SubsetId b(mask);
      ExtRat bound = V("0");
      ExtRat expected = V("0");
      bool all_positive = true;
      for_each_atom(b, [&](int atom) {
        bound = max(bound, cc(atom));
        if (mm(space.singleton(atom)).is_positive()) {
          expected = max(expected, cc(atom));
        } else {
          all_positive = false;
        }
      });
      ExtRat got = essential_supremum(cc, mm, b);
      CHECK(got == expected);
      CHECK(got <= bound);
      if (all_positive) CHECK(got == bound);
    }
  }
}
