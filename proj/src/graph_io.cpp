#include "qtough/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qtough {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view strip_trailing_ws(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        // 18-bit size form, big-endian 6-bit groups
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::string_view body = strip_trailing_ws(text);
    std::size_t base = 0;
    if (body.starts_with(">>")) {
        if (!body.starts_with(kHeader))
            throw ParseError("graph6: unsupported header", 0);
        body.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (body.empty()) throw ParseError("graph6: empty input", base);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= body.size()) throw ParseError("graph6: truncated input", base + pos);
        const unsigned char c = static_cast<unsigned char>(body[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside the printable range 63..126", base + pos);
        ++pos;
        return c - kBias;
    };

    long long n = 0;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // first byte was 126
        if (pos < body.size() && static_cast<unsigned char>(body[pos]) == 126)
            throw ParseError("graph6: 36-bit vertex counts are not supported", base + pos);
        n = next();
        n = (n << 6) | next();
        n = (n << 6) | next();
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) +
                             " exceeds the 64-vertex limit",
                         base);

    Graph g(static_cast<int>(n));
    int group = 0;
    int remaining = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (remaining == 0) {
                group = next();
                remaining = 6;
            }
            if ((group >> (remaining - 1)) & 1) g.add_edge(row, col);
            --remaining;
        }
    }
    if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits", base + pos - 1);
    if (pos != body.size()) throw ParseError("graph6: trailing data", base + pos);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v : set_members(g.neighbors(u)))
            if (v > u) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"", 0);
    if (n < 0 || n > kMaxVertices)
        throw ParseError("edge list: vertex count out of range 0..64", 0);
    if (m < 0) throw ParseError("edge list: negative edge count", 0);
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        if (!(in >> u >> v))
            throw ParseError(
                "edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                0);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: edge endpoint out of range on edge " + std::to_string(i),
                             0);
        if (u == v) throw ParseError("edge list: self-loop on edge " + std::to_string(i), 0);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v),
                             0);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw ParseError("edge list: trailing data \"" + rest + "\"", 0);
    return g;
}

GraphFormat detect_format(std::string_view content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::EdgeList
                                                           : GraphFormat::Graph6;
    }
    throw ParseError("empty graph input", 0);
}

Graph parse_graph(std::string_view content, GraphFormat format) {
    return format == GraphFormat::Graph6 ? from_graph6(content) : from_edge_list(content);
}

Graph parse_graph(std::string_view content) {
    return parse_graph(content, detect_format(content));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace qtough
