#include "kconn/graph6.hpp"

#include <cstdint>

namespace kconn {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxSmall = 62;
constexpr long kMaxMedium = 258047;
constexpr long kMaxLarge = 68719476735L;

void put_size(std::string& out, long n) {
    if (n <= kMaxSmall) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= kMaxMedium) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
}

int sextet(char c, std::size_t pos) {
    int v = static_cast<unsigned char>(c);
    if (v < kOffset || v > 126) {
        throw Graph6Error("graph6: byte " + std::to_string(v) + " at offset " + std::to_string(pos) +
                          " is outside the printable range 63..126");
    }
    return v - kOffset;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    long n = g.order();
    if (n > kMaxLarge) throw Graph6Error("graph6: order too large");
    put_size(out, n);
    int acc = 0;
    int filled = 0;
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw Graph6Error("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != 126) {
        n = sextet(line[0], 0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != 126) {
        if (line.size() < 4) throw Graph6Error("graph6: truncated length header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(line[i], i);
        if (n <= kMaxSmall) throw Graph6Error("graph6: non-canonical length header");
        pos = 4;
    } else {
        if (line.size() < 8) throw Graph6Error("graph6: truncated length header");
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(line[i], i);
        if (n <= kMaxMedium) throw Graph6Error("graph6: non-canonical length header");
        pos = 8;
    }
    if (n > 100000) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds supported maximum");

    std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < need) throw Graph6Error("graph6: truncated adjacency data");
    if (line.size() - pos > need) throw Graph6Error("graph6: trailing garbage after adjacency data");

    GraphBuilder b(static_cast<int>(n));
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            int bit = 5 - static_cast<int>(k % 6);
            if ((sextet(line[at], at) >> bit) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        std::size_t at = pos + need - 1;
        int pad = static_cast<int>(6 - bits % 6);
        if (sextet(line[at], at) & ((1 << pad) - 1)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

std::vector<StreamRecord> read_graph6_stream(std::istream& in) {
    std::vector<StreamRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        StreamRecord rec;
        rec.line_number = number;
        rec.text = line;
        try {
            rec.graph = from_graph6(line);
        } catch (const Graph6Error& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace kconn
