#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyforge {

// Simple digraph: at most one arc per ordered pair, no loops. Vertices 0..p-1.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int p) : p_(p), adj_(size_t(p) * size_t(p), 0) {
    if (p < 0) throw std::invalid_argument("negative order");
  }

  int order() const { return p_; }
  int num_arcs() const { return int(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  bool has_arc(int u, int v) const {
    check(u);
    check(v);
    return adj_[size_t(u) * size_t(p_) + size_t(v)] != 0;
  }

  void add_arc(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("loops are forbidden in digraphs");
    if (has_arc(u, v)) return;
    adj_[size_t(u) * size_t(p_) + size_t(v)] = 1;
    arcs_.push_back({u, v});
    std::sort(arcs_.begin(), arcs_.end());
  }

  bool is_acyclic() const {
    std::vector<int> indeg(size_t(p_), 0);
    for (auto [u, v] : arcs_) ++indeg[size_t(v)];
    std::vector<int> q;
    for (int v = 0; v < p_; ++v)
      if (indeg[size_t(v)] == 0) q.push_back(v);
    size_t seen = 0;
    while (seen < q.size()) {
      int u = q[seen++];
      for (int v = 0; v < p_; ++v)
        if (has_arc(u, v) && --indeg[size_t(v)] == 0) q.push_back(v);
    }
    return int(q.size()) == p_;
  }

  // Vertices reachable from s, including s itself.
  std::vector<char> reachable_from(int s) const {
    check(s);
    std::vector<char> seen(size_t(p_), 0);
    std::vector<int> q{s};
    seen[size_t(s)] = 1;
    while (!q.empty()) {
      int u = q.back();
      q.pop_back();
      for (int v = 0; v < p_; ++v)
        if (has_arc(u, v) && !seen[size_t(v)]) {
          seen[size_t(v)] = 1;
          q.push_back(v);
        }
    }
    return seen;
  }

  // True when the identity labelling is already topological (u < v on arcs).
  bool is_topologically_labelled() const {
    for (auto [u, v] : arcs_)
      if (u >= v) return false;
    return true;
  }

  // Relabels along a topological order so i -> j implies i < j; records the
  // permutation old->new when asked. Throws on directed cycles.
  Digraph topological_relabel(std::vector<int>* old_to_new = nullptr) const {
    std::vector<int> indeg(size_t(p_), 0);
    for (auto [u, v] : arcs_) ++indeg[size_t(v)];
    std::vector<int> order;
    std::vector<char> done(size_t(p_), 0);
    for (int step = 0; step < p_; ++step) {
      int pick = -1;
      for (int v = 0; v < p_; ++v)
        if (!done[size_t(v)] && indeg[size_t(v)] == 0) {
          pick = v;
          break;
        }
      if (pick < 0) throw std::invalid_argument("digraph has a directed cycle");
      done[size_t(pick)] = 1;
      order.push_back(pick);
      for (int v = 0; v < p_; ++v)
        if (has_arc(pick, v)) --indeg[size_t(v)];
    }
    std::vector<int> newlab(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) newlab[size_t(order[size_t(i)])] = i;
    if (old_to_new) *old_to_new = newlab;
    Digraph d(p_);
    for (auto [u, v] : arcs_) d.add_arc(newlab[size_t(u)], newlab[size_t(v)]);
    return d;
  }

  // Identify u and v into one vertex (arc sets merged); the caller checks
  // acyclicity of the result. Produces order p-1.
  Digraph identify(int u, int v) const {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("identify needs distinct vertices");
    int keep = std::min(u, v), gone = std::max(u, v);
    std::vector<int> map(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) map[size_t(i)] = i < gone ? i : (i == gone ? keep : i - 1);
    Digraph d(p_ - 1);
    for (auto [a, b] : arcs_) {
      int x = map[size_t(a)], y = map[size_t(b)];
      if (x != y) d.add_arc(x, y);  // duplicate arcs merge; 2-cycles are caught by is_acyclic
    }
    return d;
  }

  bool has_two_cycle() const {
    for (auto [u, v] : arcs_)
      if (has_arc(v, u)) return true;
    return false;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.p_ == b.p_ && a.arcs_ == b.arcs_;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= p_) throw std::invalid_argument("vertex out of range");
  }
  int p_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<char> adj_;
};

}  // namespace polyforge
