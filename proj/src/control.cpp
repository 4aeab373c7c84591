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

#include "cqec/control.hpp"

#include <cmath>
#include <stdexcept>

namespace cqec {

RecordFilter::RecordFilter(double decay_rate, double window, double dt,
                           double kappa, bool early_feedback)
    : rate_(decay_rate), dt_(dt), early_feedback_(early_feedback) {
  if (decay_rate <= 0 || window <= 0 || dt <= 0 || kappa <= 0) {
    throw std::invalid_argument("filter parameters must be positive");
  }
  window_size_ = static_cast<int>(std::lround(window / dt));
  if (window_size_ < 1) window_size_ = 1;
  decay_step_ = std::exp(-decay_rate * dt);
  tail_weight_ = std::exp(-decay_rate * (window_size_ - 1) * dt);
  partial_scale_ = 2.0 * kappa / decay_rate;
  norm_ = partial_scale_ * (1.0 - std::exp(-decay_rate * window));
  buffer_.assign(window_size_, 0.0);
}

double RecordFilter::update(double dq) {
  if (filled_ == window_size_) {
    const double oldest = buffer_[head_];
    sum_ = decay_step_ * (sum_ - tail_weight_ * oldest) + dq;
  } else {
    sum_ = decay_step_ * sum_ + dq;
    ++filled_;
  }
  buffer_[head_] = dq;
  head_ = (head_ + 1) % window_size_;

  double norm = norm_;
  if (early_feedback_ && filled_ < window_size_) {
    norm = partial_scale_ * (1.0 - std::exp(-rate_ * filled_ * dt_));
  }
  value_ = sum_ / norm;
  return value_;
}

ConditioningSignals conditioning(const StabilizerCode& code,
                                 std::span<const double> r_values,
                                 bool warming, double threshold) {
  if (static_cast<int>(r_values.size()) != code.n_generators()) {
    throw std::invalid_argument(
        "conditioning: one smoothed record per generator required");
  }
  if (threshold < 0.0 || threshold >= 1.0) {
    throw std::invalid_argument("conditioning: threshold must be in [0, 1)");
  }
  ConditioningSignals out;
  out.g.assign(code.n_feedbacks(), 0.0);
  out.active.assign(code.n_feedbacks(), false);
  if (warming) return out;

  std::vector<int> signs(r_values.size());
  for (std::size_t l = 0; l < r_values.size(); ++l) {
    signs[l] = r_values[l] < -threshold ? -1 : +1;
  }
  for (const auto& rule : active_rules(code, signs)) {
    out.g[rule.channel] = r_values[rule.filter];
    out.active[rule.channel] = true;
  }
  return out;
}

}  // namespace cqec
