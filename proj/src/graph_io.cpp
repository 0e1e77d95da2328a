#include "stab/graph_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stab/error.hpp"

namespace stab {

namespace {

std::string strip_newline(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip_newline(text);
    if (s.empty()) throw parse_error("graph6: empty input");
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte " + std::to_string(i) + " (value " +
                              std::to_string(c) + ") outside printable range 63..126");
    }

    long long n;
    std::size_t header;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw parse_error("graph6: long order form (> 262143 vertices) not supported");
        if (s.size() < 4) throw parse_error("graph6: truncated order header");
        n = (static_cast<long long>(s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        header = 4;
    } else {
        n = s[0] - 63;
        header = 1;
    }
    if (n < 1)
        throw parse_error("graph6: order " + std::to_string(n) + " not supported (need >= 1)");
    if (n > 100000) throw parse_error("graph6: order " + std::to_string(n) + " too large");

    long long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() < header + body)
        throw parse_error("graph6: truncated at byte " + std::to_string(s.size()) +
                          " (need " + std::to_string(header + body) + " bytes)");
    if (s.size() > header + body)
        throw parse_error("graph6: trailing garbage at byte " + std::to_string(header + body));

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[header + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits of the final 6-bit group must be zero.
    for (; k < static_cast<long long>(body) * 6; ++k) {
        int byte = s[header + static_cast<std::size_t>(k / 6)] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw parse_error("graph6: nonzero padding in final byte " +
                              std::to_string(header + body - 1));
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    long long n = g.order();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 262143) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw parse_error("graph6: order too large to emit");
    }
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++fill == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                fill = 0;
            }
        }
    if (fill > 0) s.push_back(static_cast<char>((acc << (6 - fill)) + 63));
    return s;
}

std::string emit_graph6_canonical(const Graph& g, const SearchLimits& limits) {
    return emit_graph6(canonical_form(g, limits));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    if (tokens.empty()) throw parse_error("edge list: empty input");

    auto to_int = [](const std::string& tok, std::size_t idx) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw parse_error("edge list: token " + std::to_string(idx) + " ('" + tok +
                              "') is not an integer");
        }
    };

    int n = to_int(tokens[0], 0);
    if (n < 1) throw parse_error("edge list: order must be at least 1");
    if ((tokens.size() - 1) % 2 != 0)
        throw parse_error("edge list: dangling endpoint in token " +
                          std::to_string(tokens.size() - 1));
    Graph g(n);
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        int u = to_int(tokens[i], i);
        int v = to_int(tokens[i + 1], i + 1);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range in edge '" + tokens[i] + " " +
                              tokens[i + 1] + "'");
        if (u == v) throw parse_error("edge list: loop '" + tokens[i] + " " + tokens[i + 1] + "'");
        g.add_edge(u, v);
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(strip_newline(line));
    return lines;
}

Graph read_graph_file(const std::string& path, const std::string& format_hint) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    std::string hint = format_hint;
    if (hint == "auto") {
        auto ext = std::filesystem::path(path).extension().string();
        if (ext == ".g6") hint = "g6";
        else if (ext == ".el") hint = "el";
    }
    if (hint == "g6") {
        // First line only; files may hold a whole corpus.
        auto nl = content.find('\n');
        return parse_graph6(nl == std::string::npos ? content : content.substr(0, nl));
    }
    if (hint == "el") return parse_edge_list(content);
    if (hint != "auto") throw parse_error("unknown input format '" + hint + "'");

    try {
        auto nl = content.find('\n');
        return parse_graph6(nl == std::string::npos ? content : content.substr(0, nl));
    } catch (const parse_error& g6_err) {
        try {
            return parse_edge_list(content);
        } catch (const parse_error& el_err) {
            throw parse_error(std::string("cannot auto-detect format of ") + path +
                              " (graph6: " + g6_err.what() + "; edge list: " + el_err.what() + ")");
        }
    }
}

std::optional<Graph> named_graph(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "petersen") return petersen_graph();
    if (s == "cube") return hypercube_graph(3);

    auto num = [](const std::string& digits) -> std::optional<int> {
        if (digits.empty() || digits.size() > 4) return std::nullopt;
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        return std::stoi(digits);
    };

    if (s.size() >= 2 && s[0] == 'k') {
        auto comma = s.find(',');
        if (comma != std::string::npos) {
            auto a = num(s.substr(1, comma - 1));
            auto b = num(s.substr(comma + 1));
            if (a && b && *a >= 1 && *b >= 1) return complete_bipartite_graph(*a, *b);
            return std::nullopt;
        }
        if (auto m = num(s.substr(1)); m && *m >= 1) return complete_graph(*m);
    }
    if (s.size() >= 2 && s[0] == 'c')
        if (auto m = num(s.substr(1)); m && *m >= 3) return cycle_graph(*m);
    if (s.size() >= 2 && s[0] == 'p')
        if (auto m = num(s.substr(1)); m && *m >= 1) return path_graph(*m);
    if (s.size() >= 2 && s[0] == 'e')
        if (auto m = num(s.substr(1)); m && *m >= 1) return empty_graph(*m);
    if (s.size() >= 2 && s[0] == 'q')
        if (auto d = num(s.substr(1)); d && *d >= 1 && *d <= 8) return hypercube_graph(*d);
    return std::nullopt;
}

Graph resolve_graph_arg(const std::string& arg, const std::string& format_hint) {
    if (std::filesystem::exists(arg)) return read_graph_file(arg, format_hint);
    if (auto g = named_graph(arg)) return *g;
    try {
        return parse_graph6(arg);
    } catch (const parse_error&) {
        throw parse_error("'" + arg +
                          "' is neither an existing file, a named graph, nor a graph6 string");
    }
}

}  // namespace stab
