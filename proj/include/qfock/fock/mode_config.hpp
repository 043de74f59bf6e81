/*
 * Copyright 2026 The qfock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qfock {

/// Index of a basis state in the mixed-radix (lexicographic) enumeration.
using StateIndex = std::uint32_t;

/// Truncated Fock space of `modes` oscillators, each occupation in 0..cutoff.
///
/// States are numbered lexicographically by occupation tuple with the first
/// mode most significant, so numeric order is basis order. Mode indices on
/// this class are 0-based; every operator constructor takes 1-based modes.
class ModeConfig {
 public:
  /// Throws ConfigError unless modes >= 1, 1 <= cutoff <= 255 and the
  /// dimension (cutoff+1)^modes stays below 2^24.
  ModeConfig(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return dim_; }

  /// Occupation of 0-based mode k in state s.
  int occ(StateIndex s, int k) const {
    return (*table_)[static_cast<std::size_t>(s) * modes_ + k];
  }
  std::span<const std::uint8_t> occupations(StateIndex s) const {
    return {table_->data() + static_cast<std::size_t>(s) * modes_,
            static_cast<std::size_t>(modes_)};
  }
  /// Index distance between states differing by one quantum in mode k.
  StateIndex stride(int k) const { return strides_[k]; }

  /// Throws IndexError on wrong length or out-of-range occupations.
  StateIndex index(std::span<const int> occupations) const;

  /// "|2,0,1>".
  std::string label(StateIndex s) const;

  friend bool operator==(const ModeConfig& a, const ModeConfig& b) {
    return a.modes_ == b.modes_ && a.cutoff_ == b.cutoff_;
  }

 private:
  int modes_;
  int cutoff_;
  std::size_t dim_;
  std::vector<StateIndex> strides_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

/// Throws ShapeError unless a == b.
void require_same_config(const ModeConfig& a, const ModeConfig& b);

}  // namespace qfock
