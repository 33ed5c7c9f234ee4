#include "ssg/graph6.hpp"

#include <cstdint>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int data_byte(std::string_view s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < kBias || c > kMaxByte)
        throw MalformedGraph6Error("byte " + std::to_string(i) + " out of graph6 range");
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw MalformedGraph6Error("empty graph6 string");

    size_t pos = 0;
    long long n;
    if (data_byte(line, 0) < kMaxByte - kBias) {
        n = data_byte(line, 0);
        pos = 1;
    } else {
        // '~' prefix: 18-bit vertex count in the next three bytes.
        if (line.size() < 4) throw MalformedGraph6Error("truncated vertex count");
        if (line[1] == '~') throw MalformedGraph6Error("graphs with n >= 258048 are not supported");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | data_byte(line, i);
        pos = 4;
    }

    const long long bits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - pos != need)
        throw MalformedGraph6Error("wrong data length for n = " + std::to_string(n) + ": expected " +
                                   std::to_string(need) + " bytes, got " +
                                   std::to_string(line.size() - pos));

    // Column-major upper triangle: bits run over (0,1), (0,2), (1,2), (0,3), ...
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int row = 0, col = 1;
    for (size_t i = pos; i < line.size(); ++i) {
        int word = data_byte(line, i);
        for (int b = 5; b >= 0; --b, ++bit) {
            if ((word >> b) & 1) {
                if (bit >= bits) throw MalformedGraph6Error("nonzero padding bits");
                edges.emplace_back(row, col);
            }
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n < (1 << 18)) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw InvalidParametersError("graph too large for supported graph6 range");
    }

    const long long bits = n * (n - 1) / 2;
    std::vector<uint8_t> words(static_cast<size_t>((bits + 5) / 6), 0);
    for (const Edge& e : g.edges()) {
        long long bit = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
        words[bit / 6] |= uint8_t{1} << (5 - bit % 6);
    }
    for (uint8_t w : words) out.push_back(static_cast<char>(w + kBias));
    return out;
}

} // namespace ssg
