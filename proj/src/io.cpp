#include "tonal/io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>

namespace tonal {

namespace {

struct Token {
    std::string_view text;
    std::size_t offset;
};

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), line_offset + i});
        i = j;
    }
    return out;
}

int parse_int(const Token& tok, const char* what) {
    int value = 0;
    if (tok.text.empty()) throw parse_error(std::string("expected ") + what, tok.offset);
    for (char c : tok.text) {
        if (c < '0' || c > '9')
            throw parse_error(std::string("malformed ") + what + " '" + std::string(tok.text) + "'",
                              tok.offset);
        if (value > (INT32_MAX - (c - '0')) / 10)
            throw parse_error(std::string(what) + " out of range", tok.offset);
        value = value * 10 + (c - '0');
    }
    return value;
}

struct EdgeListData {
    std::optional<int> declared_n;
    struct Line {
        int u, v;
        std::optional<Colour> colour;
        std::size_t offset;  // of the 'e' token
    };
    std::vector<Line> edges;
    int inferred_n = 0;
};

EdgeListData parse_edge_lines(std::string_view text, bool colours_allowed,
                              bool colours_required) {
    EdgeListData data;
    std::size_t pos = 0;
    bool saw_edge = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        auto toks = tokenize_line(line, pos);
        if (!toks.empty()) {
            const Token& head = toks[0];
            if (head.text == "p") {
                if (data.declared_n)
                    throw parse_error("duplicate 'p' header", head.offset);
                if (saw_edge)
                    throw parse_error("'p' header must precede edges", head.offset);
                if (toks.size() != 2)
                    throw parse_error("malformed header: expected 'p <n>'", head.offset);
                data.declared_n = parse_int(toks[1], "vertex count");
            } else if (head.text == "e") {
                saw_edge = true;
                if (toks.size() < 3)
                    throw parse_error("malformed edge line: expected 'e <u> <v>'", head.offset);
                int u = parse_int(toks[1], "vertex index");
                int v = parse_int(toks[2], "vertex index");
                std::optional<Colour> colour;
                if (toks.size() >= 4) {
                    if (!colours_allowed)
                        throw parse_error("unexpected colour token on uncoloured edge line",
                                          toks[3].offset);
                    if (toks[3].text == "R")
                        colour = Colour::Red;
                    else if (toks[3].text == "B")
                        colour = Colour::Blue;
                    else
                        throw parse_error("colour token must be R or B", toks[3].offset);
                    if (toks.size() > 4)
                        throw parse_error("trailing token on edge line", toks[4].offset);
                } else if (colours_required) {
                    throw parse_error("missing colour token (expected R or B)", head.offset);
                }
                if (u == v) throw parse_error("self-loop 'e " + std::to_string(u) + " " +
                                              std::to_string(v) + "'", head.offset);
                if (data.declared_n && (u >= *data.declared_n || v >= *data.declared_n))
                    throw parse_error("vertex index exceeds declared n=" +
                                      std::to_string(*data.declared_n), head.offset);
                data.edges.push_back({std::min(u, v), std::max(u, v), colour, head.offset});
                data.inferred_n = std::max(data.inferred_n, std::max(u, v) + 1);
            } else {
                throw parse_error("unexpected token '" + std::string(head.text) + "'",
                                  head.offset);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!data.declared_n && data.edges.empty())
        throw parse_error("empty edge-list input", 0);
    return data;
}

bool looks_like_edge_list(std::string_view text) {
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        auto toks = tokenize_line(line, pos);
        if (!toks.empty())
            return toks[0].text == "p" || toks[0].text == "e" || toks.size() > 1;
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return false;  // empty input: treated as graph6, which rejects it with an offset
}

Graph graph_from_edge_data(const EdgeListData& data) {
    int n = data.declared_n ? *data.declared_n : data.inferred_n;
    // Re-check duplicates here so the error carries a byte offset.
    std::map<Edge, std::size_t> seen;
    for (const auto& e : data.edges) {
        auto [it, inserted] = seen.insert({{e.u, e.v}, e.offset});
        if (!inserted)
            throw parse_error("duplicate edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}", e.offset);
    }
    std::vector<Edge> edges;
    edges.reserve(data.edges.size());
    for (const auto& e : data.edges) edges.push_back({e.u, e.v});
    return Graph(n, std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
    if (!looks_like_edge_list(text)) return parse_graph6(text);
    return graph_from_edge_data(parse_edge_lines(text, false, false));
}

PatternColouring parse_coloured(std::string_view text) {
    EdgeListData data = parse_edge_lines(text, true, true);
    std::map<Edge, std::pair<Colour, std::size_t>> seen;
    for (const auto& e : data.edges) {
        auto [it, inserted] = seen.insert({{e.u, e.v}, {*e.colour, e.offset}});
        if (!inserted) {
            if (it->second.first != *e.colour)
                throw parse_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} repeated with conflicting colours", e.offset);
            throw parse_error("duplicate edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}", e.offset);
        }
    }
    Graph g = graph_from_edge_data(data);
    std::vector<Colour> colours(g.edge_count(), Colour::Red);
    for (const auto& e : data.edges)
        colours[g.edge_index(e.u, e.v)] = *e.colour;
    return PatternColouring(std::move(g), std::move(colours));
}

ColouredHost parse_host(std::string_view text) {
    return ColouredHost::from_pattern(parse_coloured(text));
}

namespace {

int g6_value(std::string_view text, std::size_t i) {
    if (i >= text.size()) throw parse_error("graph6 input truncated", text.size());
    unsigned char c = text[i];
    if (c < 63 || c > 126)
        throw parse_error("graph6 byte out of range", i);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Strip one trailing newline; anything else must be graph6 bytes.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 input", 0);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);

    std::size_t i = 0;
    long long n = 0;
    if (g6_value(text, 0) < 63) {
        n = g6_value(text, 0);
        i = 1;
    } else if (text.size() >= 2 && g6_value(text, 1) < 63) {
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | g6_value(text, k);
        i = 4;
    } else {
        n = 0;
        for (int k = 2; k <= 7; ++k) n = (n << 6) | g6_value(text, k);
        i = 8;
    }
    if (n > 100000) throw parse_error("graph6 order too large", 0);

    long long pairs = n * (n - 1) / 2;
    std::size_t need = std::size_t((pairs + 5) / 6);
    if (text.size() - i != need)
        throw parse_error("graph6 length mismatch: expected " + std::to_string(need) +
                          " data bytes", i);
    std::vector<Edge> edges;
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int value = g6_value(text, i + std::size_t(k / 6));
            if ((value >> (5 - k % 6)) & 1) edges.push_back({u, v});
        }
    // Padding bits must be zero.
    for (long long b = pairs; b < (long long)need * 6; ++b) {
        int value = g6_value(text, i + std::size_t(b / 6));
        if ((value >> (5 - b % 6)) & 1)
            throw parse_error("graph6 padding bits must be zero", i + std::size_t(b / 6));
    }
    return Graph(int(n), std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6 encoder supports n <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + 63));
    }
    long long pairs = n * (n - 1) / 2;
    std::string bits(std::size_t((pairs + 5) / 6), 0);
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.adjacent(u, v)) bits[std::size_t(k / 6)] |= char(1 << (5 - k % 6));
    for (char b : bits) out.push_back(char(b + 63));
    return out;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string serialize_coloured(const PatternColouring& pc) {
    std::ostringstream out;
    out << "p " << pc.graph().vertex_count() << "\n";
    for (int i = 0; i < pc.graph().edge_count(); ++i) {
        const auto& [u, v] = pc.graph().edges()[i];
        out << "e " << u << " " << v << " " << colour_char(pc.colour(i)) << "\n";
    }
    return out.str();
}

std::string serialize_host(const ColouredHost& host) {
    std::ostringstream out;
    out << "p " << host.order() << "\n";
    for (int u = 0; u < host.order(); ++u)
        for (int v = u + 1; v < host.order(); ++v)
            out << "e " << u << " " << v << " " << colour_char(host.colour(u, v)) << "\n";
    return out.str();
}

}  // namespace tonal
