#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

namespace {

// graph6 packs the strict upper triangle of the adjacency matrix in
// column-major order -- bit t corresponds to the t-th pair in the sequence
// (0,1), (0,2), (1,2), (0,3), ... -- six bits per printable character,
// most significant bit first, each character offset by 63.

constexpr int kOffset = 63;
constexpr char kLongFormMarker = 126;  // '~'

int char_value(char c, const char* what) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw std::runtime_error(std::string("graph6: non-printable character in ") + what);
    return u - kOffset;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    // Optional file header, then strip trailing line ends.
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::runtime_error("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] == kLongFormMarker) {
        if (s.size() < 4) throw std::runtime_error("graph6: malformed header");
        if (s[1] == kLongFormMarker) throw std::runtime_error("graph6: vertex counts >= 2^18 are not supported");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | char_value(s[static_cast<std::size_t>(k)], "header");
        if (n < 63) throw std::runtime_error("graph6: malformed header");
        pos = 4;
    } else {
        n = char_value(s[0], "header");
        pos = 1;
    }

    long long bits = n * (n - 1) / 2;
    std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < payload) throw std::runtime_error("graph6: truncated bit payload");
    if (s.size() - pos > payload) throw std::runtime_error("graph6: unexpected trailing characters");

    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    long long t = 0;
    int i = 0;
    int j = 1;
    for (std::size_t k = 0; k < payload; ++k) {
        int v = char_value(s[pos + k], "payload");
        for (int b = 5; b >= 0; --b, ++t) {
            int bit = (v >> b) & 1;
            if (t >= bits) {
                if (bit != 0) throw std::runtime_error("graph6: nonzero padding bits");
                continue;
            }
            if (bit) {
                adj[static_cast<std::size_t>(i)].set(j);
                adj[static_cast<std::size_t>(j)].set(i);
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(adj));
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n >= 63) throw std::invalid_argument("encode_graph6: short form requires n < 63");
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

}  // namespace indpoly
