#include <doctest.h>

#include <random>
#include <string>

#include "g24/graph_io.hpp"
#include "support.hpp"

using g24::Graph;
using g24::write_dimacs;
using g24::write_dreadnaut;
using g24::write_graph6;

namespace {

// Independent graph6 reference decoder used as the round-trip oracle.
Graph decode_graph6(const std::string& data)
{
    std::size_t pos = 0;
    int n;
    if (static_cast<unsigned char>(data[0]) == 126) {
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63);
        pos = 4;
    } else {
        n = data[0] - 63;
        pos = 1;
    }
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = data[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1)
                edges.emplace_back(i, j);
            ++bit;
        }
    return Graph::build(n, edges);
}

bool same_adjacency(const Graph& a, const Graph& b)
{
    if (a.size() != b.size())
        return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            if (a.has_edge(i, j) != b.has_edge(i, j))
                return false;
    return true;
}

} // namespace

TEST_SUITE("graph_io") {

TEST_CASE("graph6 small cases")
{
    CHECK(write_graph6(Graph::build(1, {})) == "@\n");
    CHECK(write_graph6(Graph::build(2, {{0, 1}})) == "A_\n");
    CHECK(write_graph6(Graph::build(2, {})) == "A?\n");
}

TEST_CASE("graph6 size: header plus ceil(C(n,2)/6) bytes plus newline")
{
    std::mt19937 rng(31337);
    for (int n : {1, 2, 5, 62, 63, 80}) {
        Graph g = testsupport::random_graph(rng, n);
        std::string s = write_graph6(g);
        std::size_t header = n <= 62 ? 1 : 4;
        std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
        CHECK(s.size() == header + body + 1);
        CHECK(s.back() == '\n');
    }
}

TEST_CASE("graph6 round-trips through the reference decoder")
{
    std::mt19937 rng(2024);
    for (int n : {1, 3, 7, 30, 62, 63, 100}) {
        Graph g = testsupport::random_graph(rng, n);
        CHECK(same_adjacency(decode_graph6(write_graph6(g)), g));
    }
}

TEST_CASE("graph6 round-trips the 416-vertex graph")
{
    const auto& c = testsupport::built();
    std::string s = write_graph6(c.g);
    CHECK(s.size() == 4 + (416 * 415 / 2 + 5) / 6 + 1);
    CHECK(same_adjacency(decode_graph6(s), c.g));
}

TEST_CASE("dreadnaut output")
{
    CHECK(write_dreadnaut(Graph::build(2, {{0, 1}})) == "n=2 $=0 g\n0: 1;\n1: .\nx\n");
    CHECK(write_dreadnaut(Graph::build(3, {})) == "n=3 $=0 g\n0: ;\n1: ;\n2: .\nx\n");
    Graph k3 = testsupport::complete(3);
    CHECK(write_dreadnaut(k3) == "n=3 $=0 g\n0: 1 2;\n1: 2;\n2: .\nx\n");

    const auto& c = testsupport::built();
    CHECK(write_dreadnaut(c.g).rfind("n=416 $=0 g\n", 0) == 0);
}

TEST_CASE("dimacs output")
{
    CHECK(write_dimacs(Graph::build(2, {{0, 1}})) == "p edge 2 1\ne 1 2\n");
    CHECK(write_dimacs(Graph::build(3, {})) == "p edge 3 0\n");

    const auto& c = testsupport::built();
    std::string s = write_dimacs(c.e);
    CHECK(s.rfind("p edge 320 12160\n", 0) == 0);
    long long edge_lines = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == '\n' && s[i + 1] == 'e')
            ++edge_lines;
    CHECK(edge_lines == 12160);
}

TEST_CASE("exports are deterministic")
{
    std::mt19937 rng(5);
    Graph g = testsupport::random_graph(rng, 40);
    CHECK(write_graph6(g) == write_graph6(g));
    CHECK(write_dreadnaut(g) == write_dreadnaut(g));
    CHECK(write_dimacs(g) == write_dimacs(g));
}

} // TEST_SUITE
