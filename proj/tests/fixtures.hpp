#pragma once

#include <string>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"

namespace fixtures {

using raag::Graph;

inline std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

inline Graph::Ptr pentagon() {
  return Graph::make(labels(5), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

inline Graph::Ptr complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::make(labels(n), e);
}

inline Graph::Ptr discrete(int n) { return Graph::make(labels(n), {}); }

inline Graph::Ptr path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::make(labels(n), e);
}

inline Graph::Ptr edge_plus_point() { return Graph::make(labels(3), {{0, 1}}); }

inline Graph::Ptr two_edges() { return Graph::make(labels(4), {{0, 1}, {2, 3}}); }

inline Graph::Ptr pentagon_plus_point() {
  return Graph::make(labels(6), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// v1 adjacent to v2, v3, v4; no other edges.
inline Graph::Ptr star4() { return Graph::make(labels(4), {{0, 1}, {0, 2}, {0, 3}}); }

// Runs f and reports the raag::Error code it threw ("<none>" if it returned,
// "<other>" for foreign exceptions).
template <class F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const raag::Error& e) {
    return e.code();
  } catch (...) {
    return "<other>";
  }
  return "<none>";
}

template <class F>
std::string error_message_of(F&& f) {
  try {
    f();
  } catch (const raag::Error& e) {
    return e.what();
  } catch (...) {
    return "<other>";
  }
  return "<none>";
}

}  // namespace fixtures
