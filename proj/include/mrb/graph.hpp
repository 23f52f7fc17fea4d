// Copyright 2026 The mrb Authors
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

#ifndef MRB_GRAPH_HPP
#define MRB_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace mrb {

/// Undirected device connectivity graph. Edges are stored canonically as
/// (a, b) with a < b, sorted, without duplicates.
class ConnectivityGraph {
  public:
    ConnectivityGraph() = default;

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    ConnectivityGraph(uint32_t num_sites, std::vector<std::pair<uint32_t, uint32_t>> edges);

    /// rows x cols grid with nearest-neighbor edges; site id = row * cols + col.
    static ConnectivityGraph square_lattice(uint32_t rows, uint32_t cols);

    /// 0 - 1 - 2 - ... - (n-1).
    static ConnectivityGraph path(uint32_t num_sites);

    uint32_t num_sites() const {
        return n_;
    }

    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const {
        return edges_;
    }

    const std::vector<uint32_t>& neighbors(uint32_t site) const;

    bool has_edge(uint32_t a, uint32_t b) const;

    /// BFS hop distances from `site`; unreachable sites get UINT32_MAX.
    std::vector<uint32_t> distances_from(uint32_t site) const;

    /// Subgraph induced by `sites` (must be distinct and in range), with
    /// vertices relabeled 0..k-1 in ascending order of the original ids.
    ConnectivityGraph induced(const std::vector<uint32_t>& sites) const;

  private:
    uint32_t n_ = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;
    std::vector<std::vector<uint32_t>> adjacency_;
};

}  // namespace mrb

#endif
