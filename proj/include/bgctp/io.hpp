#ifndef BGCTP_IO_HPP
#define BGCTP_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bgctp/graph.hpp"

namespace bgctp {

/// Text form, one record per line:
///   p bgctp <n> <m> <root>
///   e <u> <v> <cable> <trench>      (m lines, ascending (u, v))
/// Lines starting with "c " (or "c" alone) are comments.
inline std::string write_instance(const Graph& g) {
    std::ostringstream out;
    out << "p bgctp " << g.n() << " " << g.edge_count() << " " << g.root() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u << " " << e.v << " " << e.cable << " " << e.trench << "\n";
    return out.str();
}

inline Graph read_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, root = 0;
    long long m = 0;
    std::vector<Edge> edges;

    auto parse_error = [&](const std::string& what) {
        raise(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) parse_error("duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> m >> root)) parse_error("malformed header");
            if (kind != "bgctp") parse_error("unknown problem type '" + kind + "'");
            if (m < 0) parse_error("negative edge count");
            std::string extra;
            if (ls >> extra) parse_error("trailing tokens");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) parse_error("edge before header");
            Edge e;
            if (!(ls >> e.u >> e.v >> e.cable >> e.trench)) parse_error("malformed edge");
            std::string extra;
            if (ls >> extra) parse_error("trailing tokens");
            if (static_cast<long long>(edges.size()) == m) parse_error("more edges than declared");
            edges.push_back(e);
            continue;
        }
        parse_error("unknown record '" + tag + "'");
    }
    ++line_no;
    if (!have_header) parse_error("missing header");
    if (static_cast<long long>(edges.size()) != m)
        parse_error("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, root, std::move(edges));
}

inline Graph read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_instance(buf.str());
}

} // namespace bgctp

#endif // BGCTP_IO_HPP
