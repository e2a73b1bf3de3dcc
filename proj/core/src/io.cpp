#include "hyperthresh/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperthresh/error.hpp"

namespace hyperthresh {

namespace {

bool skippable(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::vector<long long> read_ints(const std::string& line, int lineno)
{
    std::istringstream ls(line);
    std::vector<long long> out;
    long long v = 0;
    while (ls >> v) out.push_back(v);
    ls.clear();
    std::string rest;
    if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": unexpected token '" + rest + "'");
    return out;
}

} // namespace

void write_text(std::ostream& os, const Hypergraph& h)
{
    os << h.k() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
    for (VertexSet e : h.edges()) {
        bool first = true;
        for (int v : e.indices()) {
            if (!first) os << ' ';
            os << v;
            first = false;
        }
        os << '\n';
    }
}

std::string to_text(const Hypergraph& h)
{
    std::ostringstream os;
    write_text(os, h);
    return os.str();
}

Hypergraph parse_text(std::istream& is)
{
    std::string line;
    int lineno = 0;
    std::vector<long long> header;
    while (std::getline(is, line)) {
        ++lineno;
        if (skippable(line)) continue;
        header = read_ints(line, lineno);
        break;
    }
    if (header.size() != 3) throw ParseError("missing or malformed header 'k n m'");
    const long long k = header[0], n = header[1], m = header[2];
    if (n < 1 || n > kMaxVertices || k < 1 || k > n || m < 0)
        throw ParseError("header out of range: k=" + std::to_string(k) + " n=" + std::to_string(n));

    std::vector<VertexSet> edges;
    while (std::getline(is, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const auto ints = read_ints(line, lineno);
        if (static_cast<long long>(ints.size()) != k)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(k) + " vertices");
        std::vector<int> idx;
        for (long long v : ints) {
            if (v < 0 || v >= n) throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
            idx.push_back(static_cast<int>(v));
        }
        VertexSet e;
        try {
            e = VertexSet::from_indices(idx);
        } catch (const InvalidInput&) {
            throw ParseError("line " + std::to_string(lineno) + ": vertices must be strictly increasing");
        }
        if (!edges.empty() && !(edges.back() < e))
            throw ParseError("line " + std::to_string(lineno) + ": edges must be distinct and in lexicographic order");
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

Hypergraph parse_text(const std::string& text)
{
    std::istringstream is(text);
    return parse_text(is);
}

Json to_json(VertexSet s) { return Json(s.indices()); }

Json to_json(const Hypergraph& h)
{
    Json j;
    j["k"] = h.k();
    j["n"] = h.n();
    Json edges = Json::array();
    for (VertexSet e : h.edges()) edges.push_back(to_json(e));
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph hypergraph_from_json(const Json& j)
{
    try {
        const int k = j.at("k").get<int>();
        const int n = j.at("n").get<int>();
        if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw ParseError("k/n out of range");
        std::vector<VertexSet> edges;
        for (const auto& e : j.at("edges")) {
            const auto idx = e.get<std::vector<int>>();
            if (static_cast<int>(idx.size()) != k) throw ParseError("edge with wrong number of vertices");
            for (int v : idx)
                if (v < 0 || v >= n) throw ParseError("vertex out of range");
            VertexSet s = VertexSet::from_indices(idx);
            if (!edges.empty() && !(edges.back() < s))
                throw ParseError("edges must be distinct and in lexicographic order");
            edges.push_back(s);
        }
        return Hypergraph(n, k, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad hypergraph JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

Hypergraph read_hypergraph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        return hypergraph_from_json(j);
    }
    return parse_text(text);
}

} // namespace hyperthresh
