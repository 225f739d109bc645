#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"

namespace testing_util {

inline lly::Graph graph_of(std::initializer_list<std::pair<lly::VertexId, lly::VertexId>> edges) {
  std::vector<std::pair<lly::VertexId, lly::VertexId>> list(edges);
  return lly::Graph::from_edges(list);
}

inline lly::Rational q(long p, long d = 1) { return lly::make_rational(p, d); }

/// Random connected graphs shared by the property tests.
inline std::vector<std::uint64_t> corpus_seeds(std::size_t count, std::uint64_t base = 1000) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(base + i);
  return out;
}

}  // namespace testing_util
