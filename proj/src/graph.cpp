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

#include "mrb/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace mrb {

ConnectivityGraph::ConnectivityGraph(
    uint32_t num_sites, std::vector<std::pair<uint32_t, uint32_t>> edges)
    : n_(num_sites), adjacency_(num_sites) {
    for (auto& [a, b] : edges) {
        if (a >= num_sites || b >= num_sites) {
            throw std::invalid_argument("graph edge endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph must not contain self-loops");
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
}

ConnectivityGraph ConnectivityGraph::square_lattice(uint32_t rows, uint32_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("lattice dimensions must be positive");
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t r = 0; r < rows; r++) {
        for (uint32_t c = 0; c < cols; c++) {
            const uint32_t site = r * cols + c;
            if (c + 1 < cols) {
                edges.push_back({site, site + 1});
            }
            if (r + 1 < rows) {
                edges.push_back({site, site + cols});
            }
        }
    }
    return ConnectivityGraph(rows * cols, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::path(uint32_t num_sites) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t q = 0; q + 1 < num_sites; q++) {
        edges.push_back({q, q + 1});
    }
    return ConnectivityGraph(num_sites, std::move(edges));
}

const std::vector<uint32_t>& ConnectivityGraph::neighbors(uint32_t site) const {
    if (site >= n_) {
        throw std::out_of_range("graph site index out of range");
    }
    return adjacency_[site];
}

bool ConnectivityGraph::has_edge(uint32_t a, uint32_t b) const {
    if (a >= n_ || b >= n_) {
        return false;
    }
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<uint32_t> ConnectivityGraph::distances_from(uint32_t site) const {
    if (site >= n_) {
        throw std::out_of_range("graph site index out of range");
    }
    std::vector<uint32_t> dist(n_, std::numeric_limits<uint32_t>::max());
    std::deque<uint32_t> frontier{site};
    dist[site] = 0;
    while (!frontier.empty()) {
        const uint32_t v = frontier.front();
        frontier.pop_front();
        for (uint32_t w : adjacency_[v]) {
            if (dist[w] == std::numeric_limits<uint32_t>::max()) {
                dist[w] = dist[v] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

ConnectivityGraph ConnectivityGraph::induced(const std::vector<uint32_t>& sites) const {
    std::vector<uint32_t> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("induced subgraph sites must be distinct");
    }
    std::unordered_map<uint32_t, uint32_t> relabel;
    for (uint32_t i = 0; i < sorted.size(); i++) {
        if (sorted[i] >= n_) {
            throw std::invalid_argument("induced subgraph site out of range");
        }
        relabel[sorted[i]] = i;
    }
    std::vector<std::pair<uint32_t, uint32_t>> sub_edges;
    for (const auto& [a, b] : edges_) {
        const auto ia = relabel.find(a);
        const auto ib = relabel.find(b);
        if (ia != relabel.end() && ib != relabel.end()) {
            sub_edges.push_back({ia->second, ib->second});
        }
    }
    return ConnectivityGraph(static_cast<uint32_t>(sorted.size()), std::move(sub_edges));
}

}  // namespace mrb
