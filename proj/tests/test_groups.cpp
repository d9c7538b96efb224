// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chancomp/groups.hpp"

using namespace chancomp;

TEST_CASE("Pauli closure modulo phase has order four") {
  auto table = group_closure({pauli_x(), pauli_y(), pauli_z()});
  REQUIRE(table.has_value());
  CHECK(table->elements.size() == 4);
  CHECK(table->diameter == 1);
  LengthStats stats = length_statistics(*table);
  CHECK(stats.mean == doctest::Approx(0.75));
  CHECK(stats.counts[0] == 1);
  CHECK(stats.counts[1] == 3);
}

TEST_CASE("cyclic group from a single phase generator") {
  ComplexMatrix s = identity(2);
  s(1, 1) = Complex(0.0, 1.0);  // order 4 modulo phase
  auto table = group_closure({s});
  REQUIRE(table.has_value());
  CHECK(table->elements.size() == 4);
  // generators and adjoints both have length one; the square has length two
  LengthStats stats = length_statistics(*table);
  CHECK(stats.diameter == 2);
  CHECK(stats.mean == doctest::Approx(1.0));
}

TEST_CASE("closure bails out on infinite groups") {
  ComplexMatrix s = identity(2);
  s(1, 1) = std::exp(Complex(0.0, 1.0));  // irrational rotation
  CHECK(!group_closure({s}, 64).has_value());
}

TEST_CASE("mean_word_length of resource sets") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_x(), pauli_y(), pauli_z()};
  auto mwl = mean_word_length(symmetrize(r));
  REQUIRE(mwl.has_value());
  CHECK(*mwl == doctest::Approx(0.75));

  ResourceSet cont;
  cont.kind = ResourceSet::Kind::Continuous;
  cont.dim = 2;
  cont.elements = {pauli_z()};
  CHECK(!mean_word_length(cont).has_value());
}

TEST_CASE("expected length equals mean word length for cyclic groups") {
  // Z_4 as a cyclic permutation
  CommutativeLengthCheck z4 = verify_expected_length_commutative({{1, 2, 3, 0}});
  CHECK(z4.order == 4);
  CHECK(z4.mean_length == doctest::Approx(1.0));
  CHECK(z4.diameter == 2);
  CHECK(z4.width <= 1e-9);
  CHECK(z4.estimate.lower == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("expected length identity on S3 with adjacent transpositions") {
  CommutativeLengthCheck s3 =
      verify_expected_length_commutative({{1, 0, 2}, {0, 2, 1}});
  CHECK(s3.order == 6);
  CHECK(s3.diameter == 3);
  CHECK(s3.mean_length == doctest::Approx(1.5));
  CHECK(s3.width <= 1e-9);
  CHECK(s3.estimate.lower == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("permutation input validation") {
  CHECK_THROWS_AS(verify_expected_length_commutative({{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(verify_expected_length_commutative({}), InputError);
}

TEST_CASE("averaging channel respects the word-length bound") {
  auto table = group_closure({pauli_x(), pauli_y(), pauli_z()});
  REQUIRE(table.has_value());
  std::vector<double> f(table->elements.size(), 1.0 / double(table->elements.size()));
  AveragingBoundReport rep = averaging_channel_bound(*table, f);
  CHECK(rep.holds);
  CHECK(rep.length_average == doctest::Approx(0.75));
  CHECK(rep.estimate.upper <= rep.length_average + 1e-9);
  CHECK(rep.estimate.lower <= rep.estimate.upper + 1e-9);
}
