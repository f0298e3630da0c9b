#include "graphpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// splits into tokenized lines, dropping blanks and `c` comment lines
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens.front()[0] == 'c') continue;
        out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

void check_endpoint(int v, int lo, int hi, int line) {
    if (v < lo || v > hi)
        throw ParseError("vertex " + std::to_string(v) + " outside [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]",
                         line);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error("failed writing " + path);
}

} // namespace

Graph parse_graph_text(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) return Graph::build(0, {});

    const Line& head = lines.front();
    int n = 0;
    std::vector<Edge> edges;

    if (head.tokens.front() == "p") {
        if (head.tokens.size() != 4 || head.tokens[1] != "edge")
            throw ParseError("header must be 'p edge <n> <m>'", head.number);
        n = parse_int(head.tokens[2], head.number);
        parse_int(head.tokens[3], head.number); // declared m, not enforced
        if (n < 0) throw ParseError("vertex count must be nonnegative", head.number);
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tokens.front() != "e" || l.tokens.size() != 3)
                throw ParseError("expected edge line 'e <u> <v>'", l.number);
            int u = parse_int(l.tokens[1], l.number);
            int v = parse_int(l.tokens[2], l.number);
            check_endpoint(u, 1, n, l.number);
            check_endpoint(v, 1, n, l.number);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), l.number);
            edges.emplace_back(u - 1, v - 1);
        }
    } else {
        if (head.tokens.size() != 1)
            throw ParseError("first line must hold the vertex count alone", head.number);
        n = parse_int(head.tokens.front(), head.number);
        if (n < 0) throw ParseError("vertex count must be nonnegative", head.number);
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tokens.size() != 2) throw ParseError("expected edge line '<u> <v>'", l.number);
            int u = parse_int(l.tokens[0], l.number);
            int v = parse_int(l.tokens[1], l.number);
            check_endpoint(u, 0, n - 1, l.number);
            check_endpoint(v, 0, n - 1, l.number);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), l.number);
            edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

Graph parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    write_file(path, format_graph(g));
}

std::string format_certificate(const Bipartition& p) {
    struct Row {
        char side;
        int cluster;
    };
    std::vector<std::pair<int, Row>> rows;
    for (size_t i = 0; i < p.a_clusters.size(); ++i)
        for (int v : p.a_clusters[i]) rows.push_back({v, {'A', static_cast<int>(i)}});
    for (size_t i = 0; i < p.b_clusters.size(); ++i)
        for (int v : p.b_clusters[i]) rows.push_back({v, {'B', static_cast<int>(i)}});
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::ostringstream out;
    for (const auto& [v, row] : rows)
        out << "side " << row.side << ' ' << row.cluster << ' ' << v << '\n';
    return out.str();
}

void write_certificate(const Bipartition& p, const std::string& path) {
    write_file(path, format_certificate(p));
}

Bipartition parse_certificate_text(const std::string& text) {
    struct Row {
        bool in_a;
        int cluster;
        int line;
    };
    std::vector<std::pair<int, Row>> rows;
    for (const Line& l : tokenize(text)) {
        if (l.tokens.size() != 4 || l.tokens[0] != "side" ||
            (l.tokens[1] != "A" && l.tokens[1] != "B"))
            throw ParseError("expected 'side A|B <cluster-index> <vertex>'", l.number);
        int cluster = parse_int(l.tokens[2], l.number);
        int v = parse_int(l.tokens[3], l.number);
        if (cluster < 0) throw ParseError("cluster index must be nonnegative", l.number);
        if (v < 0) throw ParseError("vertex id must be nonnegative", l.number);
        rows.push_back({v, {l.tokens[1] == "A", cluster, l.number}});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    int n = rows.empty() ? 0 : rows.back().first + 1;
    Bipartition p;
    p.side_of.assign(n, Side::B);
    int expect = 0;
    for (const auto& [v, row] : rows) {
        if (v < expect)
            throw CoverageError("vertex " + std::to_string(v) + " assigned twice (line " +
                                std::to_string(row.line) + ")");
        if (v > expect) throw CoverageError("vertex " + std::to_string(expect) + " unassigned");
        ++expect;
        auto& clusters = row.in_a ? p.a_clusters : p.b_clusters;
        if (static_cast<size_t>(row.cluster) >= clusters.size())
            clusters.resize(row.cluster + 1);
        clusters[row.cluster].push_back(v);
        p.side_of[v] = row.in_a ? Side::A : Side::B;
    }
    for (const auto* clusters : {&p.a_clusters, &p.b_clusters})
        for (const auto& cl : *clusters)
            if (cl.empty()) throw ParseError("a cluster index has no members");
    return p;
}

Bipartition parse_certificate(const std::string& path) {
    return parse_certificate_text(read_file(path));
}

} // namespace graphpart
