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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqec/linalg.hpp"

namespace cqec {

/// One entry of the syndrome-sign switching map: which feedback channel to
/// drive and which smoothed record R_i supplies its amplitude.
struct FeedbackRule {
  int channel;  // index into StabilizerCode::feedbacks
  int filter;   // index of the driving smoothed record
  friend bool operator==(const FeedbackRule&, const FeedbackRule&) = default;
};

/// Declarative description of one error-correction setup: error operators
/// E_k, measured generators M_l, feedback operators F_k, the initial
/// codeword, and the sign-pattern -> feedback-channel switching map.
///
/// The switch table is data, not logic: entry j lists the channels driven
/// when the generator sign pattern has index j, where bit l of j is set iff
/// generator l reads -1. The all-plus pattern (index 0) must map to no
/// feedback.
struct StabilizerCode {
  std::string name;
  int n_qubits = 0;
  std::vector<PauliString> errors;       // E_k
  std::vector<double> error_rates;       // per-error rate multipliers, default 1
  std::vector<PauliString> generators;   // M_l
  std::vector<PauliString> feedbacks;    // F_k
  Vector initial_codeword;
  std::vector<std::vector<FeedbackRule>> switch_table;  // size 2^m

  int n_errors() const { return static_cast<int>(errors.size()); }
  int n_generators() const { return static_cast<int>(generators.size()); }
  int n_feedbacks() const { return static_cast<int>(feedbacks.size()); }
  Eigen::Index dim() const { return Eigen::Index{1} << n_qubits; }

  /// Index into switch_table for a +-1 sign pattern (one sign per generator).
  std::size_t pattern_index(std::span<const int> signs) const;
};

/// One-qubit toy setup: protect |0>, errors X, measure Z, feedback X.
StabilizerCode toy_code();

/// Three-qubit bit-flip code: |000>, errors {XII, IXI, IIX}, generators
/// {ZZI, IZZ}, corrections per the syndrome table.
StabilizerCode bitflip_code();

/// Lookup by CLI name: "toy" or "bitflip3". Throws ConfigError otherwise.
StabilizerCode code_by_name(std::string_view name);

/// Switch-table rules active for a sign pattern.
std::span<const FeedbackRule> active_rules(const StabilizerCode& code,
                                           std::span<const int> signs);

/// Channel indices active for a sign pattern (total over all 2^m patterns).
std::vector<int> active_channels(const StabilizerCode& code,
                                 std::span<const int> signs);

}  // namespace cqec
