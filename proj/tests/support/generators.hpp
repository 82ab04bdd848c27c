// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Hand-rolled random generators for property tests. Every generator draws
// from an explicitly seeded engine so failures reproduce.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "courant/scalar.hpp"

namespace courant::testing {

using Rng = std::mt19937_64;

inline Scalar x(std::size_t i) { return Scalar::coordinate(i); }

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng) {
  long num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  return Rational(num, uniform(rng, 1, 3));
}

struct ScalarShape {
  std::size_t coordinates = 2;
  unsigned max_degree = 2;
  std::size_t max_terms = 4;
  /// Names of formal function symbols whose jets (order <= 1) may appear.
  std::vector<std::string> functions;
  /// Names of formal parameters that may appear.
  std::vector<std::string> parameters;
};

inline Scalar random_monomial(Rng& rng, const ScalarShape& shape) {
  const auto degree = static_cast<unsigned>(uniform(rng, 0, shape.max_degree));
  Scalar m(1);
  const std::size_t extra = shape.functions.size() + shape.parameters.size();
  const std::size_t pool = shape.coordinates + extra;
  if (pool == 0) return m;
  for (unsigned d = 0; d < degree; ++d) {
    const auto pick = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool) - 1));
    if (pick < shape.coordinates) {
      m *= x(pick);
    } else if (pick < shape.coordinates + shape.parameters.size()) {
      m *= Scalar::parameter(shape.parameters[pick - shape.coordinates]);
    } else {
      Scalar f = Scalar::function(shape.functions[pick - shape.coordinates - shape.parameters.size()]);
      if (shape.coordinates > 0 && uniform(rng, 0, 1) == 1) {
        f = f.differentiate(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(shape.coordinates) - 1)));
      }
      m *= f;
    }
  }
  return m;
}

inline Scalar random_scalar(Rng& rng, const ScalarShape& shape) {
  Scalar out;
  const auto terms = uniform(rng, 0, static_cast<long>(shape.max_terms));
  for (long t = 0; t < terms; ++t) out += random_monomial(rng, shape).scaled(small_rational(rng));
  return out;
}

}  // namespace courant::testing
