#include "lclaw/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace lclaw {

namespace {

constexpr int kMaxVertices = 100000;

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool parse_int(const std::string& s, long long& out) {
    try {
        std::size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

} // namespace

Instance parse_dimacs(std::string_view text) {
    Instance inst;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "c") {
            if (toks.size() >= 3 && toks[1] == "name") {
                inst.name = toks[2];
            } else if (toks.size() >= 3 && toks[1] == "class") {
                if (toks[2] == "clawfree")
                    inst.tag = ClassTag{ClassTag::Kind::ClawFree, 0};
                else if (toks[2] == "2k2free")
                    inst.tag = ClassTag{ClassTag::Kind::TwoK2Free, 0};
                else if (toks[2] == "lclaw" && toks.size() >= 4) {
                    long long l = 0;
                    if (parse_int(toks[3], l) && l >= 1)
                        inst.tag = ClassTag{ClassTag::Kind::LClaw, static_cast<int>(l)};
                }
            }
            continue;
        }
        if (head == "p") {
            if (have_header)
                throw ParseError(ParseError::Kind::MalformedHeader, lineno,
                                 "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge" || !parse_int(toks[2], n) ||
                !parse_int(toks[3], m) || n < 0 || m < 0 || n > kMaxVertices)
                throw ParseError(ParseError::Kind::MalformedHeader, lineno,
                                 "expected 'p edge <n> <m>'");
            have_header = true;
            inst.graph = Graph(static_cast<int>(n));
            inst.weights.assign(static_cast<std::size_t>(n), 1);
            continue;
        }
        if (!have_header)
            throw ParseError(ParseError::Kind::MissingHeader, lineno,
                             "problem line must precede '" + head + "' lines");
        if (head == "e") {
            long long u = 0, v = 0;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(ParseError::Kind::MalformedLine, lineno,
                                 "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ParseError::Kind::VertexOutOfRange, lineno,
                                 "edge endpoint out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(ParseError::Kind::SelfLoop, lineno,
                                 "self-loop on vertex " + std::to_string(u));
            int a = static_cast<int>(std::min(u, v)) - 1;
            int b = static_cast<int>(std::max(u, v)) - 1;
            if (!edge_set.emplace(a, b).second)
                throw ParseError(ParseError::Kind::DuplicateEdge, lineno,
                                 "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            edges.emplace_back(a, b);
            continue;
        }
        if (head == "n") {
            long long v = 0, wt = 0;
            if (toks.size() != 3 || !parse_int(toks[1], v) || !parse_int(toks[2], wt))
                throw ParseError(ParseError::Kind::MalformedLine, lineno,
                                 "expected 'n <v> <w>'");
            if (v < 1 || v > n)
                throw ParseError(ParseError::Kind::VertexOutOfRange, lineno,
                                 "weight line vertex out of range 1.." + std::to_string(n));
            inst.weights[static_cast<std::size_t>(v - 1)] = wt;
            continue;
        }
        throw ParseError(ParseError::Kind::MalformedLine, lineno,
                         "unrecognized line type '" + head + "'");
    }
    if (!have_header) throw ParseError(ParseError::Kind::MissingHeader, lineno, "no problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(ParseError::Kind::EdgeCountMismatch, lineno,
                         "header promised " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    for (auto [a, b] : edges) inst.graph.add_edge(a, b);
    return inst;
}

std::string emit_dimacs(const Instance& instance) {
    std::string out;
    if (!instance.name.empty()) out += "c name " + instance.name + "\n";
    if (instance.tag) {
        out += "c class ";
        switch (instance.tag->kind) {
        case ClassTag::Kind::ClawFree: out += "clawfree"; break;
        case ClassTag::Kind::TwoK2Free: out += "2k2free"; break;
        case ClassTag::Kind::LClaw: out += "lclaw " + std::to_string(instance.tag->l); break;
        }
        out += "\n";
    }
    const int n = instance.graph.vertex_count();
    auto edges = instance.graph.edges();
    out += "p edge " + std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
    for (int v = 0; v < n; ++v)
        if (instance.weights[static_cast<std::size_t>(v)] != 1)
            out += "n " + std::to_string(v + 1) + " " +
                   std::to_string(instance.weights[static_cast<std::size_t>(v)]) + "\n";
    for (auto [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << emit_dimacs(instance);
}

} // namespace lclaw
