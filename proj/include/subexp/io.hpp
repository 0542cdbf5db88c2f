#pragma once

#include "subexp/densify.hpp"
#include "subexp/expanders.hpp"
#include "subexp/fragility.hpp"
#include "subexp/minors.hpp"
#include "subexp/separators.hpp"
#include "subexp/treedecomp.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace subexp {

using Json = nlohmann::ordered_json;

// Malformed documents raise ParseError (line 0).

struct PackingMeta {
    std::string mode;  // grid | layered | iterated-enumerate | iterated-sample | ...
    double eps = 0;
    long long bound = 0;
    std::optional<std::uint64_t> seed;
    double thickness = 0;
};

Json packing_to_json(const FractionalPacking& pi, const PackingMeta& meta);
FractionalPacking packing_from_json(const Json& doc, PackingMeta* meta = nullptr);

Json decomposition_to_json(const TreeDecomposition& t);
TreeDecomposition decomposition_from_json(const Json& doc);

Json certificate_to_json(const MinorCertificate& cert);
MinorCertificate certificate_from_json(const Json& doc);

Json separation_to_json(const Separation& s);
Separation separation_from_json(const Graph& g, const Json& doc);

Json density_report_to_json(const DensityReport& r);

Json expander_report_to_json(const ExpanderReport& r);
ExpanderReport expander_report_from_json(const Json& doc);

Json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& doc);

std::string densify_kind_name(DensifyKind k);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace subexp
