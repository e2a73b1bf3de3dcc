#include "hyperthresh/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "hyperthresh/error.hpp"

namespace hyperthresh {
namespace {

TEST(TextFormat, ExactLayout)
{
    const Hypergraph h(4, 2, {VertexSet::from_indices({0, 3}), VertexSet::from_indices({1, 2})});
    EXPECT_EQ(to_text(h), "2 4 2\n0 3\n1 2\n");
}

TEST(TextFormat, RoundTrip)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto h = random_hypergraph(10, 3, 0.3, seed);
        EXPECT_EQ(parse_text(to_text(h)), h);
        EXPECT_EQ(hypergraph_from_json(to_json(h)), h);
    }
}

TEST(TextFormat, CommentsAndBlankLines)
{
    const auto h = parse_text("# header\n3 5 1\n\n# edge follows\n0 2 4\n");
    EXPECT_EQ(h, Hypergraph(5, 3, {VertexSet::from_indices({0, 2, 4})}));
}

TEST(TextFormat, StrictRejections)
{
    EXPECT_THROW(parse_text(""), ParseError);
    EXPECT_THROW(parse_text("2 4 2\n0 1\n"), ParseError);          // fewer lines than declared
    EXPECT_THROW(parse_text("2 4 1\n0 1\n1 2\n"), ParseError);     // more lines than declared
    EXPECT_THROW(parse_text("2 4 1\n1 0\n"), ParseError);          // decreasing indices
    EXPECT_THROW(parse_text("2 4 2\n1 2\n0 1\n"), ParseError);     // lines out of order
    EXPECT_THROW(parse_text("2 4 2\n0 1\n0 1\n"), ParseError);     // repeated line
    EXPECT_THROW(parse_text("2 4 1\n0 4\n"), ParseError);          // index out of range
    EXPECT_THROW(parse_text("2 4 1\n0 1 2\n"), ParseError);        // wrong arity
    EXPECT_THROW(parse_text("2 4 1\n0 x\n"), ParseError);
    EXPECT_THROW(parse_text("5 4 0\n"), ParseError);               // k > n
}

TEST(JsonFormat, LayoutAndErrors)
{
    const Hypergraph h(4, 2, {VertexSet::from_indices({0, 3})});
    EXPECT_EQ(to_json(h).dump(), R"({"k":2,"n":4,"edges":[[0,3]]})");
    EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"k":2,"n":4})")), ParseError);
    EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"k":2,"n":4,"edges":[[3,0]]})")), ParseError);
    EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"k":2,"n":4,"edges":[[1,2],[0,3]]})")), ParseError);
}

TEST(ReadFile, DetectsFormat)
{
    const Hypergraph h(5, 2, {VertexSet::from_indices({0, 1}), VertexSet::from_indices({2, 4})});
    const std::string text_path = ::testing::TempDir() + "io_test.txt";
    const std::string json_path = ::testing::TempDir() + "io_test.json";
    std::ofstream(text_path) << to_text(h);
    std::ofstream(json_path) << "  \n" << to_json(h).dump(2);
    EXPECT_EQ(read_hypergraph_file(text_path), h);
    EXPECT_EQ(read_hypergraph_file(json_path), h);
    EXPECT_THROW(read_hypergraph_file(::testing::TempDir() + "does-not-exist.txt"), InvalidInput);
    std::remove(text_path.c_str());
    std::remove(json_path.c_str());
}

} // namespace
} // namespace hyperthresh
