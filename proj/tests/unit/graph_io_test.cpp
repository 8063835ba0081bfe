#include <gtest/gtest.h>

#include <sstream>

#include "hypermatch/errors.hpp"
#include "hypermatch/graph_io.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;

TEST(GraphIo, RoundTripIsByteExact) {
  const auto h = oracle::random_graph(9, 3, 0.3, 11);
  const auto text = hm::serialize(h);
  const auto back = hm::parse_kgraph(text);
  EXPECT_EQ(back, h);
  EXPECT_EQ(hm::serialize(back), text);
}

TEST(GraphIo, CommentsAndBlankLines) {
  const auto h = hm::parse_kgraph("# a comment\n3 5\n\n1 2 3\n# another\n2 4 5\n");
  EXPECT_EQ(h.n(), 5u);
  EXPECT_EQ(h.k(), 3u);
  EXPECT_EQ(h.num_edges(), 2u);
}

TEST(GraphIo, EmptyGraph) {
  const auto h = hm::parse_kgraph("3 4\n");
  EXPECT_EQ(h.num_edges(), 0u);
  EXPECT_EQ(hm::serialize(h), "3 4\n");
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(hm::parse_kgraph(""), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3\n"), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3 5\n1 2\n"), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3 5\n3 2 1\n"), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3 5\n1 2 9\n"), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3 5\n1 2 x\n"), hm::ParseError);
  EXPECT_THROW(hm::parse_kgraph("3 5\n1 2 3\n1 2 3\n"), hm::ParseError);
}

TEST(GraphIo, StreamReadWrite) {
  const auto h = oracle::random_graph(6, 2, 0.5, 2);
  std::stringstream ss;
  hm::write_kgraph(ss, h);
  EXPECT_EQ(hm::read_kgraph(ss), h);
}

TEST(GraphIo, MissingFile) {
  EXPECT_THROW(hm::load_kgraph("/nonexistent/graph.txt"), std::runtime_error);
}
