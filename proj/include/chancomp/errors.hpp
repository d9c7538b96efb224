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

#pragma once

#include <stdexcept>
#include <string>

namespace chancomp {

/// Bad caller input: wrong dimensions, non-finite entries, invalid options.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A map failed complete-positivity / trace-preservation validation.
struct CptpError : std::runtime_error {
  CptpError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};

/// Numerical rank is unstable under tolerance perturbation.
struct ConditioningError : std::runtime_error {
  explicit ConditioningError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An iterative solver did not reach its target accuracy.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chancomp
