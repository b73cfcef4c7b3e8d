#include "critcol/dimacs.hpp"

#include "critcol/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace critcol::dimacs {

namespace {

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ParseError("DIMACS line " + std::to_string(line) + ": " + msg);
}

} // namespace

Graph read(std::istream& in)
{
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    long long seen_edges = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<int, std::string>> labels;

    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        std::istringstream iss(line.substr(first));
        std::string kind;
        iss >> kind;
        if (kind == "c") {
            std::string tag;
            int v = 0;
            if (iss >> tag && tag == "label" && iss >> v) {
                std::string text;
                std::getline(iss >> std::ws, text);
                labels.emplace_back(v, text);
            }
            continue;
        }
        if (kind == "p") {
            if (have_header)
                fail(ln, "duplicate header");
            std::string format;
            if (!(iss >> format >> n >> m) || (format != "edge" && format != "edges" && format != "col"))
                fail(ln, "expected `p edge <n> <m>`");
            if (n < 0 || m < 0)
                fail(ln, "negative size in header");
            if (static_cast<unsigned long long>(n) > max_graph_vertices())
                throw ResourceError("DIMACS graph with " + std::to_string(n) + " vertices exceeds cap");
            have_header = true;
            continue;
        }
        if (kind == "e") {
            if (!have_header)
                fail(ln, "edge before header");
            long long u = 0;
            long long v = 0;
            if (!(iss >> u >> v))
                fail(ln, "expected `e <u> <v>`");
            if (u < 1 || v < 1 || u > n || v > n)
                fail(ln, "vertex out of range 1.." + std::to_string(n));
            if (u == v)
                fail(ln, "loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            ++seen_edges;
            continue;
        }
        fail(ln, "unknown line type `" + kind + "`");
    }
    if (!have_header)
        throw ParseError("DIMACS input has no `p edge` header");
    if (seen_edges != m)
        throw ParseError("DIMACS header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(seen_edges));

    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (labels.empty())
        return g;
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        names[v] = std::to_string(v);
    for (auto& [v, text] : labels) {
        if (v >= 1 && v <= n)
            names[v - 1] = std::move(text);
    }
    return g.with_labels(std::move(names));
}

Graph parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read(in);
}

Graph read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open " + path.string());
    return read(in);
}

void write(std::ostream& out, const Graph& g, std::string_view comment)
{
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        for (std::string line; std::getline(lines, line);)
            out << "c " << line << '\n';
    }
    if (g.has_labels()) {
        for (Vertex v = 0; v < g.order(); ++v)
            out << "c label " << v + 1 << ' ' << g.label(v) << '\n';
    }
    const auto edges = g.edges();
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges)
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_string(const Graph& g, std::string_view comment)
{
    std::ostringstream out;
    write(out, g, comment);
    return out.str();
}

void write_file(const std::filesystem::path& path, const Graph& g, std::string_view comment)
{
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot write " + path.string());
    write(out, g, comment);
}

} // namespace critcol::dimacs
