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


#include "qfock/fock/mode_config.hpp"

#include "qfock/error.hpp"

namespace qfock {

ModeConfig::ModeConfig(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (modes < 1) throw ConfigError("mode count must be at least 1");
  if (cutoff < 1 || cutoff > 255) {
    throw ConfigError("cutoff must lie in 1..255");
  }
  std::size_t dim = 1;
  for (int k = 0; k < modes; ++k) {
    dim *= static_cast<std::size_t>(cutoff) + 1;
    if (dim >= (std::size_t{1} << 24)) {
      throw ConfigError("basis dimension (cutoff+1)^modes is too large");
    }
  }
  dim_ = dim;
  strides_.assign(modes, 1);
  for (int k = modes - 2; k >= 0; --k) {
    strides_[k] = strides_[k + 1] * static_cast<StateIndex>(cutoff + 1);
  }
  auto table = std::make_shared<std::vector<std::uint8_t>>(dim * modes);
  for (std::size_t s = 0; s < dim; ++s) {
    std::size_t rest = s;
    for (int k = modes - 1; k >= 0; --k) {
      (*table)[s * modes + k] = static_cast<std::uint8_t>(rest % (cutoff + 1));
      rest /= cutoff + 1;
    }
  }
  table_ = std::move(table);
}

StateIndex ModeConfig::index(std::span<const int> occupations) const {
  if (static_cast<int>(occupations.size()) != modes_) {
    throw IndexError("state has " + std::to_string(occupations.size()) +
                     " occupations, expected " + std::to_string(modes_));
  }
  StateIndex s = 0;
  for (int k = 0; k < modes_; ++k) {
    const int n = occupations[k];
    if (n < 0 || n > cutoff_) {
      throw IndexError("occupation " + std::to_string(n) + " of mode " +
                       std::to_string(k + 1) + " outside 0.." +
                       std::to_string(cutoff_));
    }
    s += static_cast<StateIndex>(n) * strides_[k];
  }
  return s;
}

std::string ModeConfig::label(StateIndex s) const {
  std::string out = "|";
  for (int k = 0; k < modes_; ++k) {
    if (k > 0) out += ',';
    out += std::to_string(occ(s, k));
  }
  return out + ">";
}

void require_same_config(const ModeConfig& a, const ModeConfig& b) {
  if (!(a == b)) {
    throw ShapeError("operators live on different mode configurations");
  }
}

}  // namespace qfock
