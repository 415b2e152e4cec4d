#include "expdom/graph6.hpp"

namespace expdom {

namespace {

constexpr int kBias = 63;

bool printable(char c)
{
    return c >= 63 && c <= 126;
}

} // namespace

Graph decode_graph6(std::string_view text)
{
    if (text.empty())
        throw Graph6Error("graph6: empty input");
    for (char c : text)
        if (!printable(c))
            throw Graph6Error("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graph6: orders above 258047 are not supported");
        if (text.size() < 4)
            throw Graph6Error("graph6: truncated order header");
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        if (n < 63)
            throw Graph6Error("graph6: long order header used for order below 63");
        pos = 4;
    }
    if (n > kMaxOrder)
        throw SizeLimitError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos < byte_count)
        throw Graph6Error("graph6: truncated adjacency data");
    if (text.size() - pos > byte_count)
        throw Graph6Error("graph6: trailing bytes after adjacency data");

    std::vector<std::uint64_t> rows(n, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = text[pos + k / 6] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    if (byte_count > 0 && bit_count % 6 != 0) {
        const int last = text[pos + byte_count - 1] - kBias;
        const int pad = static_cast<int>(6 - bit_count % 6);
        if (last & ((1 << pad) - 1))
            throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph::from_rows(rows);
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string_view text = line;
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        if (text.empty())
            continue;
        try {
            out.push_back(decode_graph6(text));
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

} // namespace expdom
