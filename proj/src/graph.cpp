#include "subexp/graph.hpp"

#include "subexp/errors.hpp"
#include "subexp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>

namespace subexp {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
    VertexSet s;
    s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (Vertex v = 0; v < n; ++v) s.ids_[static_cast<std::size_t>(v)] = v;
    return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::check_within(Vertex n, std::string_view what) const {
    if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
        throw ArgumentError(std::string(what) + ": vertex id out of range for graph with " +
                            std::to_string(n) + " vertices");
    }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(Vertex n) : adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
    if (n < 0) throw ArgumentError("negative vertex count");
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t deg_sum = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        deg_sum += nb.size();
    }
    g.m_ = deg_sum / 2;
    return g;
}

int Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return static_cast<int>(d);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n() || v < 0 || v >= n()) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------- edge-list format

namespace {

bool parse_int(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        long long a = 0, b = 0;
        if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b)) {
            throw ParseError(lineno, "expected two integers, got '" + std::string(line) + "'");
        }
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError(lineno, "negative count in header");
            if (a > 100'000'000) throw ParseError(lineno, "vertex count too large");
            n = a;
            m = b;
            edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 10'000'000)));
        } else {
            if (static_cast<long long>(edges.size()) >= m) {
                throw ParseError(lineno, "more edge lines than declared (" + std::to_string(m) + ")");
            }
            if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex id out of range");
            if (a == b) throw ParseError(lineno, "loop edge at vertex " + std::to_string(a));
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError(0, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines, found " +
                                     std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m());
    for (auto [u, v] : g.edges()) {
        out += '\n';
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------- transformations

Vertex cube_index(int n, int i, int j, int k) { return (i - 1) * n * n + (j - 1) * n + (k - 1); }

Graph strong_product_cube(int n) {
    if (n < 1) throw ArgumentError("strong_product_cube: n must be >= 1");
    if (n > 400) throw ArgumentError("strong_product_cube: n too large");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const Vertex u = cube_index(n, i, j, k);
                for (int di = -1; di <= 1; ++di)
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int dk = -1; dk <= 1; ++dk) {
                            const int a = i + di, b = j + dj, c = k + dk;
                            if (a < 1 || b < 1 || c < 1 || a > n || b > n || c > n) continue;
                            const Vertex v = cube_index(n, a, b, c);
                            if (u < v) edges.emplace_back(u, v);
                        }
            }
    return Graph::from_edges(n * n * n, edges);
}

Graph subdivide_edges(const Graph& g, const std::map<Edge, int>& reps) {
    std::map<Edge, int> normalized;
    for (auto [e, count] : reps) {
        Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
        if (!g.has_edge(key.first, key.second)) {
            throw ArgumentError("subdivide_edges: " + std::to_string(e.first) + "-" +
                                std::to_string(e.second) + " is not an edge");
        }
        if (count < 0) throw ArgumentError("subdivide_edges: negative subdivision count");
        normalized[key] = count;
    }
    std::vector<Edge> out;
    Vertex next = g.n();
    for (auto e : g.edges()) {
        auto it = normalized.find(e);
        const int count = it == normalized.end() ? 0 : it->second;
        Vertex prev = e.first;
        for (int i = 0; i < count; ++i) {
            out.emplace_back(prev, next);
            prev = next++;
        }
        out.emplace_back(prev, e.second);
    }
    return Graph::from_edges(next, out);
}

Graph subdivide_edges(const Graph& g, int uniform_count) {
    if (uniform_count < 0) throw ArgumentError("subdivide_edges: negative subdivision count");
    std::map<Edge, int> reps;
    for (auto e : g.edges()) reps[e] = uniform_count;
    return subdivide_edges(g, reps);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    s.check_within(g.n(), "induced_subgraph");
    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    InducedSubgraph out;
    out.to_parent = s.ids();
    for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i])) {
            const Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    out.graph = Graph::from_edges(static_cast<Vertex>(s.size()), edges);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    if (!allowed[static_cast<std::size_t>(source)]) return dist;
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw < 0 && allowed[static_cast<std::size_t>(w)]) {
                dw = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, source, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : removed) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_without(g, {}); }

GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.n = g.n();
    st.m = g.m();
    st.max_degree = g.max_degree();
    for (const auto& c : connected_components(g)) st.component_sizes.push_back(static_cast<int>(c.size()));
    std::sort(st.component_sizes.rbegin(), st.component_sizes.rend());
    return st;
}

// ---------------------------------------------------------------- rational helpers

Rational rational_from_string(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError(0, "malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {
double snap(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return r;
    return x;
}
}  // namespace

long long floor_snapped(double x) { return static_cast<long long>(std::floor(snap(x))); }
long long ceil_snapped(double x) { return static_cast<long long>(std::ceil(snap(x))); }

}  // namespace subexp
