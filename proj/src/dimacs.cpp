#include "srg/dimacs.hpp"

#include <sstream>

#include "srg/error.hpp"

namespace srg {

void write_dimacs(const DenseGraph& g, std::ostream& out) {
    if (!g.label().empty()) out << "c " << g.label() << "\n";
    out << "p edge " << g.nu() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.nu(); ++u)
        for (int v = u + 1; v < g.nu(); ++v)
            if (g.adjacent(u, v)) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

std::string to_dimacs(const DenseGraph& g) {
    std::ostringstream os;
    write_dimacs(g, os);
    return os.str();
}

DenseGraph read_dimacs(std::istream& in, const std::string& label) {
    std::string line;
    int nu = -1;
    int64_t m = -1, edges_seen = 0;
    DenseGraph g(1);
    bool have_p = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (have_p) fail("ParseError", "duplicate p line at line " + std::to_string(lineno));
            if (!(ls >> fmt >> nu >> m) || fmt != "edge" || nu < 1 || m < 0)
                fail("ParseError", "bad p line at line " + std::to_string(lineno));
            g = DenseGraph(nu, label);
            have_p = true;
            continue;
        }
        if (tag == "e") {
            if (!have_p) fail("ParseError", "edge before p line at line " + std::to_string(lineno));
            int64_t u, v;
            if (!(ls >> u >> v)) fail("ParseError", "bad e line at line " + std::to_string(lineno));
            if (u < 1 || u > nu || v < 1 || v > nu)
                fail("IndexOutOfRange", "edge endpoint outside graph at line " + std::to_string(lineno));
            if (u == v) fail("ParseError", "loop at line " + std::to_string(lineno));
            if (!g.adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1))) {
                g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
                ++edges_seen;
            }
            continue;
        }
        fail("ParseError", "unknown line tag '" + tag + "' at line " + std::to_string(lineno));
    }
    if (!have_p) fail("ParseError", "missing p line");
    if (edges_seen != m)
        fail("ParseError", "header declares " + std::to_string(m) + " edges, found " +
                               std::to_string(edges_seen));
    return g;
}

DenseGraph parse_dimacs(const std::string& text, const std::string& label) {
    std::istringstream is(text);
    return read_dimacs(is, label);
}

}  // namespace srg
