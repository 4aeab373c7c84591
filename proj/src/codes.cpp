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

#include "cqec/codes.hpp"

#include <stdexcept>

namespace cqec {

std::size_t StabilizerCode::pattern_index(std::span<const int> signs) const {
  if (signs.size() != generators.size()) {
    throw std::invalid_argument(
        "sign pattern length does not match generator count");
  }
  std::size_t index = 0;
  for (std::size_t l = 0; l < signs.size(); ++l) {
    if (signs[l] < 0) index |= std::size_t{1} << l;
  }
  return index;
}

StabilizerCode toy_code() {
  StabilizerCode code;
  code.name = "toy";
  code.n_qubits = 1;
  code.errors = {PauliString{"X"}};
  code.error_rates = {1.0};
  code.generators = {PauliString{"Z"}};
  code.feedbacks = {PauliString{"X"}};
  code.initial_codeword = basis_state(2, 0);  // |0>
  code.switch_table = {
      {},          // (+1): in the codespace, no feedback
      {{0, 0}},    // (-1): drive X with R
  };
  return code;
}

StabilizerCode bitflip_code() {
  StabilizerCode code;
  code.name = "bitflip3";
  code.n_qubits = 3;
  code.errors = {PauliString{"XII"}, PauliString{"IXI"}, PauliString{"IIX"}};
  code.error_rates = {1.0, 1.0, 1.0};
  code.generators = {PauliString{"ZZI"}, PauliString{"IZZ"}};
  code.feedbacks = {PauliString{"XII"}, PauliString{"IXI"}, PauliString{"IIX"}};
  code.initial_codeword = basis_state(8, 0);  // |000>
  // Pattern bit l set iff R_l < 0. Channel 1 (IXI) is driven by R_1, the
  // pattern where both generators flip.
  code.switch_table = {
      {},          // (+1, +1): no error
      {{0, 0}},    // (-1, +1): flip on qubit 1, XII driven by R_1
      {{2, 1}},    // (+1, -1): flip on qubit 3, IIX driven by R_2
      {{1, 0}},    // (-1, -1): flip on qubit 2, IXI driven by R_1
  };
  return code;
}

StabilizerCode code_by_name(std::string_view name) {
  if (name == "toy") return toy_code();
  if (name == "bitflip3") return bitflip_code();
  throw ConfigError("unknown code '" + std::string(name) +
                    "' (valid: toy, bitflip3)");
}

std::span<const FeedbackRule> active_rules(const StabilizerCode& code,
                                           std::span<const int> signs) {
  return code.switch_table.at(code.pattern_index(signs));
}

std::vector<int> active_channels(const StabilizerCode& code,
                                 std::span<const int> signs) {
  std::vector<int> channels;
  for (const auto& rule : active_rules(code, signs)) {
    channels.push_back(rule.channel);
  }
  return channels;
}

}  // namespace cqec
