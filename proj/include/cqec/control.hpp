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
#include <vector>

#include "cqec/codes.hpp"

namespace cqec {

/// Exponentially weighted sliding window over the last M = round(T/dt)
/// record increments:
///
///   R = (1/N) * sum_{j=0}^{M-1} e^{-r j dt} dQ[latest - j],
///   N = (2 kappa / r) (1 - e^{-r T}),
///
/// i.e. a discretized convolution of the record with a decaying exponential.
/// N scales R so that a clean record from a +-1 generator eigenstate reads
/// close to +-1. The window is updated in O(1) per step via the recursion
/// S' = e^{-r dt} (S - w_tail * oldest) + dQ, with the ring buffer supplying
/// the expiring increment.
///
/// Until M increments have been seen the filter reports warming(). By
/// default the partial sum is still divided by the full-window N; with
/// early_feedback the normalization is recomputed for the partial window so
/// feedback can act before t = T.
///
/// Anything with `double update(double)` can stand in as a smoothing filter;
/// only this exponential window ships.
class RecordFilter {
 public:
  /// decay_rate r and window T in the units of 1/dt; kappa is the
  /// measurement strength entering the record normalization.
  RecordFilter(double decay_rate, double window, double dt, double kappa,
               bool early_feedback = false);

  /// Push one record increment; returns the smoothed value R.
  double update(double dq);

  /// Smoothed value after the last update (0 before any).
  double value() const { return value_; }

  /// True until the window has filled once.
  bool warming() const { return filled_ < window_size_; }

  int window_size() const { return window_size_; }
  double normalization() const { return norm_; }

 private:
  double decay_step_;    // e^{-r dt}
  double tail_weight_;   // e^{-r (M-1) dt}
  double norm_;          // full-window N
  double partial_scale_; // (2 kappa / r), for early-feedback renormalization
  double rate_, dt_;
  bool early_feedback_;
  int window_size_;
  int filled_ = 0;
  int head_ = 0;  // next write position; the oldest sample once full
  double sum_ = 0.0;
  double value_ = 0.0;
  std::vector<double> buffer_;
};

/// Per-channel feedback amplitudes G_k produced by the sign-based switching
/// rules. Inactive channels carry G_k = 0.
struct ConditioningSignals {
  std::vector<double> g;
  std::vector<bool> active;
};

/// Applies the code's switch table to the smoothed records: a generator
/// counts as flipped when R_l < -threshold (sign of an exact zero reads +1),
/// and each active channel takes its amplitude from its designated driving
/// record. While `warming` is set all channels stay at zero.
ConditioningSignals conditioning(const StabilizerCode& code,
                                 std::span<const double> r_values,
                                 bool warming, double threshold = 0.0);

}  // namespace cqec
