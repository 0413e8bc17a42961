#pragma once

// Abstract model of the tree of SL_2(Q_p) with a Busemann height, built
// without any lattice arithmetic. Every vertex has exactly one neighbor one
// level down and p neighbors one level up (the orientation the height
// <(1,-1), retraction> induces around the standard lattice).

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace tree_oracle {

struct TreeBall {
  std::vector<int> height;
  std::vector<int> depth;
  std::vector<std::pair<int, int>> edges;
};

inline TreeBall tree_ball(int p, int radius) {
  TreeBall t;
  // came_up[v]: v was reached from its down neighbor.
  std::vector<bool> came_up{false};
  t.height.push_back(0);
  t.depth.push_back(0);
  for (std::size_t v = 0; v < t.height.size(); ++v) {
    if (t.depth[v] == radius) continue;
    int ups = p;
    bool down = true;
    if (v != 0) {
      if (came_up[v]) {
        down = false;
      } else {
        ups = p - 1;
      }
    }
    auto add = [&](int dh, bool up) {
      const int id = static_cast<int>(t.height.size());
      t.height.push_back(t.height[v] + dh);
      t.depth.push_back(t.depth[v] + 1);
      came_up.push_back(up);
      t.edges.emplace_back(static_cast<int>(v), id);
    };
    if (down) add(-1, false);
    for (int i = 0; i < ups; ++i) add(+1, true);
  }
  return t;
}

struct Components {
  std::vector<int> label;  // -1 outside the set
  int count = 0;
};

/// Connected components of the induced subgraph on deep vertices (depth at
/// most radius-1) with height in [lo, hi].
inline Components annulus(const TreeBall& t, int radius, int lo, int hi) {
  const std::size_t n = t.height.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto inside = [&](int v) {
    const auto i = static_cast<std::size_t>(v);
    return t.depth[i] <= radius - 1 && t.height[i] >= lo && t.height[i] <= hi;
  };
  for (auto [a, b] : t.edges) {
    if (inside(a) && inside(b)) parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  Components c;
  c.label.assign(n, -1);
  std::vector<int> roots;
  for (std::size_t v = 0; v < n; ++v) {
    if (!inside(static_cast<int>(v))) continue;
    const int r = find(static_cast<int>(v));
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      it = roots.end() - 1;
    }
    c.label[v] = static_cast<int>(it - roots.begin());
  }
  c.count = static_cast<int>(roots.size());
  return c;
}

/// Rank of the image of reduced H_0 under the inclusion small -> large.
inline int image_rank(const Components& small, const Components& large) {
  std::set<int> hit;
  for (std::size_t v = 0; v < small.label.size(); ++v) {
    if (small.label[v] >= 0) hit.insert(large.label[v]);
  }
  return hit.empty() ? 0 : static_cast<int>(hit.size()) - 1;
}

}  // namespace tree_oracle
