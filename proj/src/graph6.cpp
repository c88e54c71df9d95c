#include "pathcover/graph6.hpp"

#include <fstream>
#include <istream>

#include "pathcover/error.hpp"

namespace pathcover {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;

}  // namespace

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + kBias));

    int bits = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bits + kBias));
                bits = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kBias));
    return out;
}

Graph decode_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char c : line) {
        const int b = static_cast<unsigned char>(c);
        if (b < kBias || b > kBias + 63) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126");
    }

    const int n = static_cast<unsigned char>(line[0]) - kBias;
    if (n > kMaxShortOrder) throw ParseError("graph6: long-form size header is not supported");
    if (n < 1 || n > kMaxVertices)
        throw CapacityError("graph6: order " + std::to_string(n) + " outside supported range 1.." +
                            std::to_string(kMaxVertices));

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bit_count + 5) / 6;
    if (line.size() < expected) throw ParseError("graph6: truncated bit payload");
    if (line.size() > expected) throw ParseError("graph6: trailing bytes after payload");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero in a well-formed encoding.
    if (k % 6 != 0) {
        const int last = static_cast<unsigned char>(line.back()) - kBias;
        if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("graph6: non-zero padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(decode_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const CapacityError& e) {
            throw CapacityError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph6 file " + path);
    return read_graph6(in);
}

}  // namespace pathcover
