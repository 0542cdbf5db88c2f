#include "subexp/io.hpp"

#include "subexp/errors.hpp"

#include <fstream>
#include <sstream>

namespace subexp {

namespace {

// Runs a decoder, turning library exceptions about shape/type into ParseError.
template <class F>
auto decode(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json vertex_set_to_json(const VertexSet& s) { return Json(s.ids()); }

VertexSet vertex_set_from_json(const Json& doc) {
    return decode("vertex set", [&] {
        auto ids = doc.get<std::vector<Vertex>>();
        for (std::size_t i = 1; i < ids.size(); ++i)
            if (ids[i] <= ids[i - 1]) throw ParseError(0, "vertex set must be strictly increasing");
        return VertexSet(std::move(ids));
    });
}

Json packing_to_json(const FractionalPacking& pi, const PackingMeta& meta) {
    Json entries = Json::array();
    for (const auto& e : pi.entries)
        entries.push_back({{"set", vertex_set_to_json(e.set)},
                           {"weight", to_double(e.weight)},
                           {"weight_exact", rational_to_string(e.weight)}});
    Json m = {{"mode", meta.mode}, {"eps", meta.eps}, {"bound", meta.bound}};
    m["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
    m["thickness"] = meta.thickness;
    return {{"entries", entries}, {"meta", m}};
}

FractionalPacking packing_from_json(const Json& doc, PackingMeta* meta) {
    return decode("packing", [&] {
        FractionalPacking pi;
        for (const auto& e : doc.at("entries")) {
            Rational w;
            if (e.contains("weight_exact")) {
                try {
                    w = rational_from_string(e.at("weight_exact").get<std::string>());
                } catch (const std::exception& ex) {
                    throw ParseError(0, std::string("packing: bad weight_exact: ") + ex.what());
                }
            } else {
                w = Rational(e.at("weight").get<double>());
            }
            pi.entries.push_back({vertex_set_from_json(e.at("set")), w});
        }
        if (meta && doc.contains("meta")) {
            const auto& m = doc.at("meta");
            meta->mode = m.value("mode", std::string{});
            meta->eps = m.value("eps", 0.0);
            meta->bound = m.value("bound", 0LL);
            if (m.contains("seed") && !m.at("seed").is_null()) meta->seed = m.at("seed").get<std::uint64_t>();
            meta->thickness = m.value("thickness", 0.0);
        }
        return pi;
    });
}

Json decomposition_to_json(const TreeDecomposition& t) {
    Json nodes = Json::array();
    for (const auto& n : t.nodes)
        nodes.push_back({{"parent", n.parent < 0 ? Json(nullptr) : Json(n.parent)}, {"bag", vertex_set_to_json(n.bag)}});
    return {{"nodes", nodes}, {"root", t.root}};
}

TreeDecomposition decomposition_from_json(const Json& doc) {
    return decode("decomposition", [&] {
        std::vector<std::pair<int, VertexSet>> entries;
        for (const auto& n : doc.at("nodes")) {
            const auto& p = n.at("parent");
            entries.emplace_back(p.is_null() ? -1 : p.get<int>(), vertex_set_from_json(n.at("bag")));
        }
        TreeDecomposition t;
        try {
            t = TreeDecomposition::from_parents(entries);
        } catch (const ArgumentError& e) {
            throw ParseError(0, std::string("decomposition: ") + e.what());
        }
        if (doc.at("root").get<int>() != t.root) throw ParseError(0, "decomposition: root field disagrees with parents");
        return t;
    });
}

Json certificate_to_json(const MinorCertificate& cert) {
    Json trees = Json::array();
    for (const auto& t : cert.trees) {
        Json nodes = Json::array();
        for (const auto& [v, p] : t.nodes) nodes.push_back(Json::array({v, p}));
        trees.push_back({{"model_vertex", t.model_vertex}, {"nodes", nodes}});
    }
    Json wit = Json::array();
    for (const auto& w : cert.witness_edges) wit.push_back(Json::array({w.i, w.j, w.u, w.v}));
    return {{"depth", cert.depth}, {"trees", trees}, {"witness_edges", wit}};
}

MinorCertificate certificate_from_json(const Json& doc) {
    return decode("certificate", [&] {
        MinorCertificate cert;
        cert.depth = doc.at("depth").get<int>();
        for (const auto& t : doc.at("trees")) {
            BranchTree bt;
            bt.model_vertex = t.at("model_vertex").get<Vertex>();
            for (const auto& n : t.at("nodes")) {
                if (!n.is_array() || n.size() != 2) throw ParseError(0, "certificate: tree node must be [vertex, parent]");
                bt.nodes.push_back({n[0].get<Vertex>(), n[1].get<Vertex>()});
            }
            cert.trees.push_back(std::move(bt));
        }
        for (const auto& w : doc.at("witness_edges")) {
            if (!w.is_array() || w.size() != 4) throw ParseError(0, "certificate: witness edge must be [i, j, u, v]");
            cert.witness_edges.push_back({w[0].get<Vertex>(), w[1].get<Vertex>(), w[2].get<Vertex>(), w[3].get<Vertex>()});
        }
        return cert;
    });
}

Json separation_to_json(const Separation& s) {
    return {{"side_a", vertex_set_to_json(s.side_a)},
            {"side_b", vertex_set_to_json(s.side_b)},
            {"separator", vertex_set_to_json(s.separator())},
            {"size", s.size},
            {"balanced", s.balanced}};
}

Separation separation_from_json(const Graph& g, const Json& doc) {
    return decode("separation", [&] {
        auto s = make_separation(g, vertex_set_from_json(doc.at("side_a")), vertex_set_from_json(doc.at("side_b")));
        if (doc.contains("size") && doc.at("size").get<int>() != s.size)
            throw ParseError(0, "separation: size field disagrees with the sides");
        return s;
    });
}

Json density_report_to_json(const DensityReport& r) {
    Json edges = Json::array();
    for (const auto& [u, v] : r.minor.edges()) edges.push_back(Json::array({u, v}));
    return {{"k", r.k},
            {"vertices", r.vertices},
            {"edges", r.edges},
            {"density", rational_to_string(r.density)},
            {"density_value", to_double(r.density)},
            {"minor_edges", edges},
            {"certificate", certificate_to_json(r.certificate)}};
}

Json expander_report_to_json(const ExpanderReport& r) {
    return {{"n", r.n},
            {"d", r.d},
            {"alpha", r.alpha},
            {"alpha_exact", std::to_string(r.alpha_cut) + "/" + std::to_string(r.alpha_size)},
            {"m", r.m},
            {"n_prime", r.n_prime},
            {"separator_found", r.separator_found},
            {"bound", r.bound},
            {"resamples", r.resamples},
            {"seed", r.seed}};
}

ExpanderReport expander_report_from_json(const Json& doc) {
    return decode("expander report", [&] {
        ExpanderReport r;
        r.n = doc.at("n").get<Vertex>();
        r.d = doc.at("d").get<int>();
        r.alpha = doc.at("alpha").get<double>();
        const auto frac = doc.at("alpha_exact").get<std::string>();
        const auto slash = frac.find('/');
        if (slash == std::string::npos) throw ParseError(0, "expander report: alpha_exact must be 'cut/size'");
        try {
            r.alpha_cut = std::stoll(frac.substr(0, slash));
            r.alpha_size = std::stoll(frac.substr(slash + 1));
        } catch (const std::exception&) {
            throw ParseError(0, "expander report: alpha_exact must be 'cut/size'");
        }
        r.m = doc.at("m").get<int>();
        r.n_prime = doc.at("n_prime").get<Vertex>();
        r.separator_found = doc.at("separator_found").get<int>();
        r.bound = doc.at("bound").get<double>();
        r.resamples = doc.at("resamples").get<int>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        return r;
    });
}

std::string densify_kind_name(DensifyKind k) {
    switch (k) {
        case DensifyKind::DenseMinor: return "dense-minor";
        case DensifyKind::CliqueMinor: return "clique-minor";
        case DensifyKind::Failed: return "failed";
    }
    return "failed";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write " + path);
    out << text;
    if (!out) throw ArgumentError("write failed for " + path);
}

}  // namespace subexp
