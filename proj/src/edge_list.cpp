#include "graphrefute/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace graphrefute {

namespace {

std::uint64_t parse_label(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(line, "malformed vertex label '" + std::string(token) + "'");
    }
    if (value >= Move::kNewVertex) {
        throw ParseError(line, "vertex label out of range '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, auto is_sep) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_sep(s[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_sep(s[j])) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    struct RawEdge {
        std::uint64_t a;
        std::uint64_t b;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        if (line.find('-') != std::string_view::npos || line.find(',') != std::string_view::npos) {
            for (auto item : split(line, [](char c) { return c == ','; })) {
                const auto dash = item.find('-');
                if (dash == std::string_view::npos) {
                    throw ParseError(line_no, "expected 'u-v', got '" + std::string(item) + "'");
                }
                raw.push_back({parse_label(trim(item.substr(0, dash)), line_no),
                               parse_label(trim(item.substr(dash + 1)), line_no), line_no});
            }
        } else {
            auto parts = split(line, is_space);
            if (parts.size() != 2) {
                throw ParseError(line_no, "expected two vertex ids");
            }
            raw.push_back({parse_label(parts[0], line_no), parse_label(parts[1], line_no), line_no});
        }
    }

    std::map<std::uint64_t, Vertex> compact;
    for (const auto& e : raw) {
        compact.emplace(e.a, 0);
        compact.emplace(e.b, 0);
    }
    Vertex next = 0;
    for (auto& [label, id] : compact) {
        id = next++;
    }

    Graph g(compact.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : raw) {
        if (e.a == e.b) {
            throw ParseError(e.line, "self-loop on " + std::to_string(e.a));
        }
        const Vertex u = compact[e.a];
        const Vertex v = compact[e.b];
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            throw ParseError(e.line, "duplicate edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
        }
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& e : g.sorted_edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        out += "  " + std::to_string(u) + ";\n";
    }
    for (const auto& e : g.sorted_edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace graphrefute
