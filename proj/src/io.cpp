#include "ltdkit/io.hpp"

#include <fstream>
#include <sstream>

#include "ltdkit/errors.hpp"

namespace ltdkit {

namespace {

std::string strip_comment(const std::string& line) {
    size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (ls >> n) {
                if (!(ls >> m)) throw usage_error("edge list: header must be \"n m\"");
                if (n < 0 || m < 0) throw usage_error("edge list: negative header values");
            }
            continue;
        }
        long u, v;
        if (ls >> u) {
            if (!(ls >> v)) throw usage_error("edge list: dangling edge endpoint");
            edges.emplace_back(int(u), int(v));
            long extra;
            if (ls >> extra) throw usage_error("edge list: more than two numbers on an edge line");
        }
    }
    if (n < 0) throw usage_error("edge list: missing \"n m\" header");
    if (long(edges.size()) != m)
        throw usage_error("edge list: header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph(int(n), edges);  // range/self-loop errors surface here
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw usage_error("graph6: empty line");
    int c0 = line[0];
    if (c0 == 126) throw usage_error("graph6: orders above 62 are not supported");
    if (c0 < 63 || c0 > 125) throw usage_error("graph6: invalid order byte");
    int n = c0 - 63;
    long bits = long(n) * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (long(line.size()) - 1 != need)
        throw usage_error("graph6: expected " + std::to_string(need) + " data bytes, found " +
                          std::to_string(line.size() - 1));
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[1 + bit / 6];
            if (byte < 63 || byte > 126) throw usage_error("graph6: invalid data byte");
            int val = byte - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw usage_error("graph6: orders above 62 are not supported");
    long bits = long(n) * (n - 1) / 2;
    std::string out(1 + size_t((bits + 5) / 6), char(63));
    out[0] = char(63 + n);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // First meaningful character decides the format.
    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        std::string body = strip_comment(line);
        size_t pos = body.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (std::isdigit((unsigned char)body[pos])) return parse_edge_list(text);
        return parse_graph6(body.substr(pos));
    }
    throw usage_error("graph file is empty: " + path);
}

void save_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write graph file: " + path);
    if (format == "edgelist")
        out << to_edge_list(g);
    else if (format == "graph6")
        out << to_graph6(g) << '\n';
    else
        throw usage_error("unknown format: " + format + " (use edgelist or graph6)");
}

}  // namespace ltdkit
