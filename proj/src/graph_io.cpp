#include "g24/graph_io.hpp"

#include <sstream>

namespace g24 {

std::string write_graph6(const Graph& g)
{
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
        out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | static_cast<unsigned>(g.has_edge(i, j));
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    out.push_back('\n');
    return out;
}

std::string write_dreadnaut(const Graph& g)
{
    const int n = g.size();
    std::ostringstream os;
    os << "n=" << n << " $=0 g\n";
    for (int i = 0; i < n; ++i) {
        os << i << ": ";
        bool first = true;
        g.neighbors(i).for_each([&](int j) {
            if (j <= i)
                return;
            if (!first)
                os << " ";
            os << j;
            first = false;
        });
        os << (i == n - 1 ? "." : ";") << "\n";
    }
    os << "x\n";
    return os.str();
}

std::string write_dimacs(const Graph& g)
{
    const int n = g.size();
    std::ostringstream os;
    os << "p edge " << n << " " << g.edge_count() << "\n";
    for (int i = 0; i < n; ++i)
        g.neighbors(i).for_each([&](int j) {
            if (j > i)
                os << "e " << i + 1 << " " << j + 1 << "\n";
        });
    return os.str();
}

} // namespace g24
