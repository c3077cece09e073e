#include "starfactor/graph6.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace starfactor {

namespace {

[[noreturn]] void bad(const std::string& why) { throw std::invalid_argument("graph6: " + why); }

}  // namespace

Graph parse_graph6(std::string_view line, Graph6Options options) {
    constexpr std::string_view kMarker = ">>graph6<<";
    if (line.substr(0, kMarker.size()) == kMarker) line.remove_prefix(kMarker.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    if (line.empty()) bad("empty input");
    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126) bad("multi-byte size header (n > 62) is not supported");
    if (header < 63 || header > 125) bad("size byte out of range");
    const int n = header - 63;

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - 1 < payload) bad("truncated payload");
    if (line.size() - 1 > payload) bad("payload longer than expected");

    Graph g(n);
    long long bit = 0;
    for (std::size_t i = 1; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) bad("payload byte out of range");
        int group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (group >> k) & 1;
            if (bit >= bits) {
                if (b && options.strict) bad("nonzero padding bits");
                continue;
            }
            if (b) {
                // bit index -> pair (row, col) in column-major upper triangle
                long long rem = bit;
                int col = 1;
                while (rem >= col) rem -= col++;
                g.add_edge(static_cast<int>(rem), col);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string linebuf;
    std::optional<int> declared_n;
    std::vector<Edge> edges;
    int max_label = -1;
    bool first_content_line = true;

    auto parse_int = [](const std::string& tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw std::invalid_argument("edge list: bad vertex label '" + tok + "'");
        return value;
    };

    while (std::getline(in, linebuf)) {
        std::istringstream ls(linebuf);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (!(ls >> b)) throw std::invalid_argument("edge list: expected a pair on line '" + linebuf + "'");
        if (ls >> extra) throw std::invalid_argument("edge list: trailing tokens on line '" + linebuf + "'");

        if (first_content_line && a == "n") {
            declared_n = parse_int(b);
            if (*declared_n > Graph::kMaxVertices)
                throw std::invalid_argument("edge list: vertex count out of range");
            first_content_line = false;
            continue;
        }
        first_content_line = false;

        int u = parse_int(a);
        int v = parse_int(b);
        if (u == v) throw std::invalid_argument("edge list: loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }

    int n = declared_n.value_or(max_label + 1);
    if (max_label >= n)
        throw std::invalid_argument("edge list: label " + std::to_string(max_label) +
                                    " outside declared vertex count " + std::to_string(n));
    if (n > Graph::kMaxVertices) throw std::invalid_argument("edge list: vertex count out of range");
    return Graph(n, edges);
}

}  // namespace starfactor
