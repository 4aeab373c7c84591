// Copyright 2026 The cqecsim Authors
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

namespace cqec {

/// A simulated quantity left its physically valid range (trace, positivity,
/// imaginary residue). Usually a sign that dt is too coarse.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State norm or density-matrix trace collapsed below what renormalization
/// can recover. Aborts the owning trajectory.
class DegenerateStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Invalid run configuration: bad rates, too-coarse time step, unknown key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cqec
