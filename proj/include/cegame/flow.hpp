// Copyright 2026 The cegame Authors
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

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace cegame::flow {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double capacity = 0.0;
  double cost = 0.0;
  double flow = 0.0;
};

// Directed network with real capacities and costs. Parallel edges are
// allowed. The flow lives on the edges; residual structure is derived on
// demand through ResidualGraph.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t num_nodes, std::size_t source, std::size_t sink);

  std::size_t add_edge(std::size_t from, std::size_t to, double capacity, double cost = 0.0);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  void set_flow(std::size_t id, double value) { edges_[id].flow = value; }
  void add_flow(std::size_t id, double delta) { edges_[id].flow += delta; }
  void clear_flow();

  double cost() const;
  // Net flow leaving the source.
  double value() const;
  // Largest conservation or capacity breach of the current flow.
  double flow_violation() const;
  // Total capacity of edges leaving the source.
  double source_capacity() const;

 private:
  std::size_t num_nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Edge> edges_;
};

// One arc of the residual graph. A forward arc pushes more flow on `edge`,
// a backward arc cancels flow already on it.
struct ResidualArc {
  std::size_t from = 0;
  std::size_t to = 0;
  double residual = 0.0;
  double cost = 0.0;
  std::size_t edge = 0;
  bool forward = true;
};

// Residual view over a network. Arcs with residual capacity at most `eps`
// are absent.
class ResidualGraph {
 public:
  explicit ResidualGraph(const FlowNetwork& net, double eps = 1e-9);

  std::size_t num_nodes() const { return net_->num_nodes(); }
  const FlowNetwork& network() const { return *net_; }
  double eps() const { return eps_; }

  template <typename Fn>
  void for_each_arc(Fn&& fn) const {
    for (std::size_t id = 0; id < net_->edges().size(); ++id) {
      const Edge& e = net_->edge(id);
      if (e.capacity - e.flow > eps_) fn(ResidualArc{e.from, e.to, e.capacity - e.flow, e.cost, id, true});
      if (e.flow > eps_) fn(ResidualArc{e.to, e.from, e.flow, -e.cost, id, false});
    }
  }

  std::vector<ResidualArc> arcs() const;

 private:
  const FlowNetwork* net_;
  double eps_;
};

// Pushes `amount` along a residual arc of `net`.
void push(FlowNetwork& net, const ResidualArc& arc, double amount);

// Maximum source-to-sink flow by BFS augmenting paths, starting from zero
// flow. Returns the flow value; per-edge flows are left on `net`.
double max_flow(FlowNetwork& net, double eps = 1e-9);

// Minimum-cost flow among flows that saturate every edge leaving the source.
// Starts from the network's current flow when that flow is already feasible
// and saturating, otherwise from a maximum flow. Negative residual cycles
// are then cancelled until none is left. Returns the total cost.
// Throws InfeasibleError when the source edges cannot be saturated.
double min_cost_flow(FlowNetwork& net, double eps = 1e-9);

// Single-source shortest path distances over residual arcs (costs may be
// negative). Unreachable nodes get +infinity. Throws NegativeCycleDetected
// if relaxation does not settle.
std::vector<double> shortest_paths(const ResidualGraph& residual, std::size_t source);

// A cycle of residual arcs with negative total cost, if one exists.
std::optional<std::vector<ResidualArc>> find_negative_cycle(const ResidualGraph& residual,
                                                            double cost_eps = 1e-12);

}  // namespace cegame::flow
