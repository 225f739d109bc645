#include <gtest/gtest.h>

#include "lly/embedding.hpp"
#include "lly/families.hpp"
#include "lly/io.hpp"

using lly::InputFormat;
using lly::parse_graph;

TEST(Io, ParsesEdgeList) {
  auto p = parse_graph("1 2\n2 3\n3 1\n", InputFormat::edgelist);
  EXPECT_EQ(p.graph.vertex_count(), 3u);
  EXPECT_EQ(p.graph.edge_count(), 3u);
  EXPECT_FALSE(p.rotation.has_value());
}

TEST(Io, SkipsCommentsAndBlankLines) {
  auto p = parse_graph("# triangle\n\n1 2\n  # again\n2 3\n3 1\n", InputFormat::edgelist);
  EXPECT_EQ(p.graph.edge_count(), 3u);
}

TEST(Io, ParsesRotationWithTwoTriangularFaces) {
  auto p = parse_graph("1: 2 3\n2: 3 1\n3: 1 2\n", InputFormat::rotation);
  ASSERT_TRUE(p.rotation.has_value());
  auto faces = lly::trace_faces(p.graph, *p.rotation);
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 3u);
  EXPECT_EQ(faces[1].size(), 3u);
}

TEST(Io, ReportsOffendingLine) {
  try {
    parse_graph("1 2\n1 1\n", InputFormat::edgelist);
    FAIL() << "self-loop accepted";
  } catch (const lly::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  auto line_of = [](const char* text, InputFormat fmt) -> std::size_t {
    try {
      parse_graph(text, fmt);
    } catch (const lly::ParseError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of("1 2\n2 1\n", InputFormat::edgelist), 2u);
  EXPECT_EQ(line_of("1 2 3\n", InputFormat::edgelist), 1u);
  EXPECT_EQ(line_of("1 x\n", InputFormat::edgelist), 1u);
  EXPECT_EQ(line_of("1 2\n3 4\n", InputFormat::edgelist), 0u);
  EXPECT_EQ(line_of("1: 2\n2: 1 3\n3: 1\n", InputFormat::rotation), 2u);
  EXPECT_EQ(line_of("1: 2\n2: 1\n1: 2\n", InputFormat::rotation), 3u);
}

TEST(Io, RejectsAsymmetricRotation) {
  EXPECT_THROW(parse_graph("1: 2 3\n2: 1\n3: 2\n", InputFormat::rotation), lly::ParseError);
}

TEST(Io, RoundTripsFamilies) {
  for (auto fam : {lly::figure1(), lly::prism(5), lly::icosahedron(), lly::hypercube(3)}) {
    auto edges = parse_graph(lly::write_edgelist(fam.graph), InputFormat::edgelist);
    EXPECT_EQ(edges.graph.edges(), fam.graph.edges()) << fam.name;
    auto rot = parse_graph(lly::write_rotation(fam.graph, *fam.rotation), InputFormat::rotation);
    ASSERT_TRUE(rot.rotation.has_value());
    for (lly::Vertex v = 0; v < fam.graph.vertex_count(); ++v) {
      auto a = rot.rotation->cyclic(v);
      auto b = fam.rotation->cyclic(v);
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end())) << fam.name;
    }
  }
}
