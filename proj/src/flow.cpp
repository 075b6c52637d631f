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

#include "cegame/flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "cegame/errors.hpp"

namespace cegame::flow {

FlowNetwork::FlowNetwork(std::size_t num_nodes, std::size_t source, std::size_t sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {}

std::size_t FlowNetwork::add_edge(std::size_t from, std::size_t to, double capacity, double cost) {
  edges_.push_back({from, to, std::max(0.0, capacity), cost, 0.0});
  return edges_.size() - 1;
}

void FlowNetwork::clear_flow() {
  for (auto& e : edges_) e.flow = 0.0;
}

double FlowNetwork::cost() const {
  double total = 0.0;
  for (const auto& e : edges_) total += e.flow * e.cost;
  return total;
}

double FlowNetwork::value() const {
  double total = 0.0;
  for (const auto& e : edges_) {
    if (e.from == source_) total += e.flow;
    if (e.to == source_) total -= e.flow;
  }
  return total;
}

double FlowNetwork::source_capacity() const {
  double total = 0.0;
  for (const auto& e : edges_) {
    if (e.from == source_) total += e.capacity;
  }
  return total;
}

double FlowNetwork::flow_violation() const {
  std::vector<double> balance(num_nodes_, 0.0);
  double worst = 0.0;
  for (const auto& e : edges_) {
    worst = std::max({worst, -e.flow, e.flow - e.capacity});
    balance[e.from] -= e.flow;
    balance[e.to] += e.flow;
  }
  for (std::size_t v = 0; v < num_nodes_; ++v) {
    if (v != source_ && v != sink_) worst = std::max(worst, std::abs(balance[v]));
  }
  return worst;
}

ResidualGraph::ResidualGraph(const FlowNetwork& net, double eps) : net_(&net), eps_(eps) {}

std::vector<ResidualArc> ResidualGraph::arcs() const {
  std::vector<ResidualArc> out;
  for_each_arc([&](const ResidualArc& arc) { out.push_back(arc); });
  return out;
}

void push(FlowNetwork& net, const ResidualArc& arc, double amount) {
  const Edge& e = net.edge(arc.edge);
  if (arc.forward) {
    net.set_flow(arc.edge, std::min(e.capacity, e.flow + amount));
  } else {
    net.set_flow(arc.edge, std::max(0.0, e.flow - amount));
  }
}

double max_flow(FlowNetwork& net, double eps) {
  net.clear_flow();
  const std::size_t n = net.num_nodes();
  const std::size_t s = net.source();
  const std::size_t t = net.sink();
  if (s == t) return 0.0;

  // Arc 2k is edge k forward, 2k+1 its reverse.
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t id = 0; id < net.edges().size(); ++id) {
    adjacency[net.edge(id).from].push_back(2 * id);
    adjacency[net.edge(id).to].push_back(2 * id + 1);
  }
  auto residual = [&](std::size_t arc) {
    const Edge& e = net.edge(arc / 2);
    return arc % 2 == 0 ? e.capacity - e.flow : e.flow;
  };
  auto head = [&](std::size_t arc) {
    const Edge& e = net.edge(arc / 2);
    return arc % 2 == 0 ? e.to : e.from;
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n);
  double total = 0.0;
  while (true) {
    std::fill(parent.begin(), parent.end(), kNone);
    std::deque<std::size_t> queue{s};
    std::vector<bool> seen(n, false);
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t arc : adjacency[u]) {
        const std::size_t v = head(arc);
        if (seen[v] || residual(arc) <= eps) continue;
        seen[v] = true;
        parent[v] = arc;
        queue.push_back(v);
      }
    }
    if (!seen[t]) break;

    double bottleneck = kInfinity;
    for (std::size_t v = t; v != s;) {
      const std::size_t arc = parent[v];
      bottleneck = std::min(bottleneck, residual(arc));
      v = arc % 2 == 0 ? net.edge(arc / 2).from : net.edge(arc / 2).to;
    }
    for (std::size_t v = t; v != s;) {
      const std::size_t arc = parent[v];
      const Edge& e = net.edge(arc / 2);
      if (arc % 2 == 0) {
        net.set_flow(arc / 2, residual(arc) == bottleneck ? e.capacity : e.flow + bottleneck);
        v = e.from;
      } else {
        net.set_flow(arc / 2, residual(arc) == bottleneck ? 0.0 : e.flow - bottleneck);
        v = e.to;
      }
    }
    total += bottleneck;
  }
  return total;
}

std::optional<std::vector<ResidualArc>> find_negative_cycle(const ResidualGraph& residual,
                                                            double cost_eps) {
  const std::size_t n = residual.num_nodes();
  const auto arcs = residual.arcs();
  if (n == 0 || arcs.empty()) return std::nullopt;

  // Every node starts at distance zero, as if joined to a virtual root.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<double> dist(n, 0.0);
  std::vector<std::size_t> parent(n, kNone);
  std::size_t last = kNone;
  for (std::size_t round = 0; round <= n; ++round) {
    last = kNone;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const auto& arc = arcs[k];
      const double candidate = dist[arc.from] + arc.cost;
      if (candidate < dist[arc.to] - cost_eps) {
        dist[arc.to] = candidate;
        parent[arc.to] = k;
        last = arc.to;
      }
    }
    if (last == kNone) return std::nullopt;
  }

  // `last` was relaxed in round n, so walking n parents lands on a cycle.
  std::size_t v = last;
  for (std::size_t i = 0; i < n; ++i) v = arcs[parent[v]].from;
  std::vector<ResidualArc> cycle;
  const std::size_t start = v;
  do {
    const auto& arc = arcs[parent[v]];
    cycle.push_back(arc);
    v = arc.from;
  } while (v != start && cycle.size() <= n);
  std::reverse(cycle.begin(), cycle.end());

  double total = 0.0;
  for (const auto& arc : cycle) total += arc.cost;
  if (v != start || !(total < -cost_eps)) return std::nullopt;
  return cycle;
}

double min_cost_flow(FlowNetwork& net, double eps) {
  const double demand = net.source_capacity();
  const double slack = eps * std::max(1.0, demand);
  bool usable = net.flow_violation() <= slack;
  if (usable) {
    for (const auto& e : net.edges()) {
      if (e.from == net.source() && e.flow < e.capacity - slack) usable = false;
    }
  }
  if (!usable) {
    const double value = max_flow(net, eps);
    if (value < demand - slack) {
      throw InfeasibleError("min_cost_flow: source edges cannot be saturated");
    }
  }

  const std::size_t limit = 100000;
  for (std::size_t round = 0; round < limit; ++round) {
    const ResidualGraph residual(net, eps);
    const auto cycle = find_negative_cycle(residual);
    if (!cycle) return net.cost();
    double bottleneck = kInfinity;
    for (const auto& arc : *cycle) bottleneck = std::min(bottleneck, arc.residual);
    for (const auto& arc : *cycle) {
      if (arc.residual == bottleneck) {
        net.set_flow(arc.edge, arc.forward ? net.edge(arc.edge).capacity : 0.0);
      } else {
        push(net, arc, bottleneck);
      }
    }
  }
  throw NumericDegeneracy("min_cost_flow: cycle cancelling did not converge");
}

std::vector<double> shortest_paths(const ResidualGraph& residual, std::size_t source) {
  const std::size_t n = residual.num_nodes();
  std::vector<double> dist(n, kInfinity);
  if (source >= n) return dist;
  dist[source] = 0.0;
  const auto arcs = residual.arcs();

  auto improves = [](double candidate, double current) {
    return candidate < current - 1e-12 * std::max(1.0, std::abs(candidate));
  };
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& arc : arcs) {
      if (dist[arc.from] == kInfinity) continue;
      const double candidate = dist[arc.from] + arc.cost;
      if (improves(candidate, dist[arc.to])) {
        dist[arc.to] = candidate;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  throw NegativeCycleDetected("shortest_paths: negative cycle reachable from the source");
}

}  // namespace cegame::flow
