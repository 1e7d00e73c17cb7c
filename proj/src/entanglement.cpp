// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/entanglement.hpp"

#include <algorithm>

#include "hexstar/parallel.hpp"

namespace hexstar {

EntanglementScan scan_entanglement(const ComplexState& state, double tolerance) {
  const ComplexState full = embed(state);
  constexpr int kMasks = (1 << (kSites - 1)) - 1;
  EntanglementScan out;
  out.masks.resize(kMasks);
  out.ranks.resize(kMasks);
  parallel_for(kMasks, [&](int k) {
    out.masks[k] = static_cast<std::uint32_t>(k + 1);
    out.ranks[k] = schmidt_number(full, Bipartition{out.masks[k]}, tolerance);
  });
  const auto it = std::min_element(out.ranks.begin(), out.ranks.end());
  out.min_rank = *it;
  out.argmin_mask = out.masks[it - out.ranks.begin()];
  return out;
}

}  // namespace hexstar
