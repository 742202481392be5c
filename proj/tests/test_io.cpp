#include <sstream>

#include <gtest/gtest.h>

#include "cayley/io.hpp"

using namespace cayley;
using namespace cayley::io;

TEST(EdgeListIo, WriteAndReadBack) {
  const auto t = LabeledTree::canonicalize(4, std::vector<std::pair<int, int>>{{4, 1}, {2, 4}, {3, 4}});
  EXPECT_EQ(to_edge_list(t), "n 4\n1 4\n2 4\n3 4\n");
  std::istringstream in("n 3\n3 2\n2 1\n\n\nn 1\n");
  EdgeListReader reader(in);
  auto a = reader.next();
  ASSERT_TRUE(a);
  EXPECT_EQ(to_edge_list(*a), "n 3\n1 2\n2 3\n");
  auto b = reader.next();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->n(), 1);
  EXPECT_FALSE(reader.next());
}

TEST(EdgeListIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    EdgeListReader r(in);
    try {
      while (r.next()) {
      }
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n 3\n1 2\n2 x\n"), 3u);
  EXPECT_EQ(line_of("1 2\n"), 1u);
  EXPECT_EQ(line_of("n 3\n1 2\n"), 3u);
  EXPECT_EQ(line_of("n 3\n1 2\n2 3\n"), 0u);
}

TEST(PruferText, FormatAndParse) {
  EXPECT_EQ(format_prufer({4, 4}), "4,4");
  EXPECT_EQ(format_prufer({}), "");
  EXPECT_EQ(parse_prufer("4,4"), std::vector<int>({4, 4}));
  EXPECT_TRUE(parse_prufer("").empty());
  EXPECT_THROW(parse_prufer("4,x"), std::invalid_argument);
  EXPECT_THROW(parse_prufer("4,,4"), std::invalid_argument);
  EXPECT_EQ(parse_int_list("2,2,1,1"), std::vector<int>({2, 2, 1, 1}));
  EXPECT_THROW(parse_int_list(""), std::invalid_argument);
}

TEST(JsonIo, TreeShape) {
  const auto t = LabeledTree::canonicalize(3, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  EXPECT_EQ(tree_to_json(t).dump(), R"({"edges":[[1,2],[2,3]],"n":3})");
}
