#include "cadgraph/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cadgraph {

namespace {

int json_to_vertex(const Json& j, const char* where) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(where) + ": vertex ids must be integers");
    long long v = j.get<long long>();
    if (v < 0 || v > 1000000000)
        throw std::invalid_argument(std::string(where) + ": vertex id out of range");
    return static_cast<int>(v);
}

std::pair<int, int> json_to_pair(const Json& j, const char* where) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(where) + ": expected a [u,v] pair");
    return {json_to_vertex(j[0], where), json_to_vertex(j[1], where)};
}

Json edge_to_json(const Edge& e) { return Json::array({e.first, e.second}); }

std::string dim_key(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge parse_dim_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= key.size())
        throw std::invalid_argument("dims: key \"" + key + "\" is not of the form \"u-v\"");
    int u = 0, v = 0;
    try {
        size_t used = 0;
        u = std::stoi(key.substr(0, dash), &used);
        if (used != dash) throw std::invalid_argument("");
        std::string rest = key.substr(dash + 1);
        v = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("dims: key \"" + key + "\" is not of the form \"u-v\"");
    }
    if (u < 0 || v < 0 || u >= v)
        throw std::invalid_argument("dims: key \"" + key + "\" must satisfy 0 <= u < v");
    return make_edge(u, v);
}

BigRat json_to_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return BigRat(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return BigRat(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return BigRat(j.get<std::string>());
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + ": bad rational \"" + j.get<std::string>() +
                                        "\": " + e.what());
        }
    }
    throw std::invalid_argument(where +
                                ": values must be exact — an integer or a \"p/q\" string");
}

const char* class_name(GraphClass k) {
    switch (k) {
        case GraphClass::QuadraticallySoluble: return "quadratically-soluble";
        case GraphClass::NonSolubleCertified: return "non-soluble-certified";
        case GraphClass::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_to_json(e));
    return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph: expected a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph: missing \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph: missing \"edges\" array");

    std::vector<int> vertices;
    for (const Json& v : j["vertices"]) vertices.push_back(json_to_vertex(v, "vertices"));
    if (vertices.size() < 2)
        throw std::invalid_argument("graph: needs at least 2 vertices");

    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) {
        auto [u, v] = json_to_pair(e, "edges");
        if (u == v) throw std::invalid_argument("edges: loop at vertex " + std::to_string(u));
        edges.push_back(make_edge(u, v));
    }
    return Graph(std::move(vertices), std::move(edges));
}

Json dimensioned_to_json(const DimensionedGraph& dg) {
    Json j = graph_to_json(dg.graph);
    j["base_edge"] = edge_to_json(dg.base_edge);
    Json dims = Json::object();
    for (const auto& [e, value] : dg.dims) dims[dim_key(e)] = value.to_string();
    j["dims"] = dims;
    return j;
}

DimensionedGraph dimensioned_from_json(const Json& j, bool unsquared) {
    DimensionedGraph dg{graph_from_json(j), Edge{-1, -1}, {}};
    if (!j.contains("base_edge"))
        throw std::invalid_argument("dimensioned graph: missing \"base_edge\"");
    if (!j.contains("dims") || !j["dims"].is_object())
        throw std::invalid_argument("dimensioned graph: missing \"dims\" object");

    auto [bu, bv] = json_to_pair(j["base_edge"], "base_edge");
    dg.base_edge = make_edge(bu, bv);

    for (const auto& [key, value] : j["dims"].items()) {
        Edge e = parse_dim_key(key);
        if (!dg.graph.has_edge(e.first, e.second))
            throw std::invalid_argument("dims: \"" + key + "\" is not an edge of the graph");
        BigRat d = json_to_rational(value, "dims[\"" + key + "\"]");
        if (unsquared) d = d * d;
        dg.dims.emplace(e, std::move(d));
    }
    validate_dimensions(dg);
    return dg;
}

ParsedGraphFile parse_graph_file(const std::string& text, bool unsquared) {
    Json j = Json::parse(text);  // json::parse_error carries the byte position
    if (!j.is_object()) throw std::invalid_argument("graph file: expected a JSON object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "vertices" && key != "edges" && key != "base_edge" && key != "dims")
            throw std::invalid_argument("graph file: unknown key \"" + key + "\"");
    }
    bool has_dims = j.contains("dims") || j.contains("base_edge");
    ParsedGraphFile parsed{graph_from_json(j), std::nullopt};
    if (has_dims) {
        parsed.dimensioned = dimensioned_from_json(j, unsquared);
    }
    return parsed;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v : g.vertices()) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.first << " -- " << e.second << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Reduction artifacts
// ---------------------------------------------------------------------------

Json step_to_json(const ReductionStep& s) {
    if (s.kind == StepKind::Contract)
        return Json{{"kind", "contract"}, {"edge", edge_to_json(s.edge)}};
    return Json{{"kind", "substitute"},
                {"subgraph", s.subgraph},
                {"attachments", Json::array({s.attachments[0], s.attachments[1],
                                             s.attachments[2]})}};
}

Json trace_to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const ReductionStep& s : t.steps) steps.push_back(step_to_json(s));
    return Json{{"steps", steps},
                {"terminal", graph_to_json(t.terminal)},
                {"stuck", t.stuck}};
}

Json qs_node_to_json(const QsNode& n) {
    Json virtuals = Json::array();
    for (const Edge& e : n.virtual_edges) virtuals.push_back(edge_to_json(e));
    Json children = Json::array();
    for (const QsNode& c : n.children) children.push_back(qs_node_to_json(c));
    Json j{{"piece", graph_to_json(n.piece)},
           {"virtual_edges", virtuals},
           {"children", children}};
    if (n.split_pair)
        j["split_pair"] = Json::array({(*n.split_pair)[0], (*n.split_pair)[1]});
    else
        j["split_pair"] = nullptr;
    return j;
}

Json decomposition_to_json(const QsDecomposition& d) {
    return Json{{"root", qs_node_to_json(d.root)},
                {"all_leaves_triangles", d.all_leaves_triangles}};
}

Json classification_to_json(const GraphClassification& c) {
    Json j{{"class", class_name(c.kind)}, {"reason", c.reason}};
    j["decomposition"] =
        c.decomposition ? decomposition_to_json(*c.decomposition) : Json(nullptr);
    j["core_vertices"] = c.core_vertices;
    j["core_reduction"] =
        c.core_reduction ? trace_to_json(*c.core_reduction) : Json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Algebra artifacts
// ---------------------------------------------------------------------------

Json galois_to_json(const GaloisCertificate& c) {
    Json observations = Json::array();
    for (const CycleTypeObservation& o : c.observations)
        observations.push_back(Json{{"prime", o.prime}, {"pattern", o.pattern}});
    return Json{{"verdict", to_string(c.verdict)},
                {"degree", c.degree},
                {"polynomial", c.polynomial.to_string()},
                {"n_cycle_prime", c.n_cycle_prime},
                {"odd_parity_prime", c.odd_parity_prime},
                {"primitivity_prime", c.primitivity_prime},
                {"primitivity_cycle", c.primitivity_cycle},
                {"jordan_prime", c.jordan_prime},
                {"jordan_cycle", c.jordan_cycle},
                {"window_prime", c.window_prime},
                {"window_cycle", c.window_cycle},
                {"good_primes_scanned", c.good_primes_scanned},
                {"observations", observations}};
}

namespace {

GaloisCertificate galois_from_json(const Json& j) {
    GaloisCertificate c;
    c.polynomial = UniPoly::parse(j.at("polynomial").get<std::string>());
    c.degree = j.at("degree").get<int>();
    c.verdict = j.at("verdict").get<std::string>() == "FullSymmetric"
                    ? GaloisCertificate::Verdict::FullSymmetric
                    : GaloisCertificate::Verdict::Inconclusive;
    for (const Json& o : j.at("observations"))
        c.observations.push_back(CycleTypeObservation{
            o.at("prime").get<uint64_t>(), o.at("pattern").get<std::vector<int>>()});
    c.n_cycle_prime = j.at("n_cycle_prime").get<uint64_t>();
    c.odd_parity_prime = j.at("odd_parity_prime").get<uint64_t>();
    c.primitivity_prime = j.at("primitivity_prime").get<uint64_t>();
    c.primitivity_cycle = j.at("primitivity_cycle").get<int>();
    c.jordan_prime = j.at("jordan_prime").get<uint64_t>();
    c.jordan_cycle = j.at("jordan_cycle").get<int>();
    c.window_prime = j.at("window_prime").get<uint64_t>();
    c.window_cycle = j.at("window_cycle").get<int>();
    c.good_primes_scanned = j.at("good_primes_scanned").get<int>();
    return c;
}

SolubilityVerdict::Status status_from_string(const std::string& s) {
    if (s == "Soluble") return SolubilityVerdict::Status::Soluble;
    if (s == "NonSoluble") return SolubilityVerdict::Status::NonSoluble;
    if (s == "Unknown") return SolubilityVerdict::Status::Unknown;
    throw std::invalid_argument("certificate: unknown status \"" + s + "\"");
}

}  // namespace

Json verdict_to_json(const SolubilityVerdict& v) {
    Json trail = Json::array();
    for (const SolubilityVerdict::FactorDisposition& f : v.trail) {
        Json entry{{"coeffs", f.factor.to_string()},
                   {"degree", f.degree},
                   {"multiplicity", f.multiplicity},
                   {"disposition", f.disposition}};
        entry["galois"] = f.certificate ? galois_to_json(*f.certificate) : Json(nullptr);
        trail.push_back(entry);
    }
    return Json{{"status", to_string(v.status)}, {"factors", trail}};
}

Json certificate_to_json(const NonSolubleCertificate& c) {
    Json j = verdict_to_json(c.verdict);
    j["dims"] = c.dims;
    j["prime_budget"] = c.prime_budget;
    j["content"] = c.content.to_string();
    j["h3_prime"] = c.h3_prime.to_string();
    j["h3_prime_degree"] = c.h3_prime.degree();
    j["chain_degrees"] = c.chain_degrees;
    j["established"] = c.established;
    j["partial"] = c.partial;
    return j;
}

NonSolubleCertificate certificate_from_json(const Json& j) {
    NonSolubleCertificate c;
    auto dims = j.at("dims").get<std::vector<long>>();
    if (dims.size() != 8)
        throw std::invalid_argument("certificate: \"dims\" must list 8 lengths");
    std::copy(dims.begin(), dims.end(), c.dims.begin());
    c.prime_budget = j.at("prime_budget").get<int>();
    c.content = BigInt(j.at("content").get<std::string>());
    c.h3_prime = UniPoly::parse(j.at("h3_prime").get<std::string>());
    auto degrees = j.at("chain_degrees").get<std::vector<int>>();
    if (degrees.size() != 6)
        throw std::invalid_argument("certificate: \"chain_degrees\" must list 6 degrees");
    std::copy(degrees.begin(), degrees.end(), c.chain_degrees.begin());
    c.established = j.at("established").get<bool>();
    c.partial = j.at("partial").get<bool>();
    c.verdict.status = status_from_string(j.at("status").get<std::string>());
    for (const Json& f : j.at("factors")) {
        SolubilityVerdict::FactorDisposition d;
        d.factor = UniPoly::parse(f.at("coeffs").get<std::string>());
        d.degree = f.at("degree").get<int>();
        d.multiplicity = f.at("multiplicity").get<int>();
        d.disposition = f.at("disposition").get<std::string>();
        if (!f.at("galois").is_null()) d.certificate = galois_from_json(f.at("galois"));
        c.verdict.trail.push_back(std::move(d));
    }
    return c;
}

NonSolubleCertificate load_verified_certificate(const Json& j) {
    NonSolubleCertificate cert = certificate_from_json(j);
    if (!verify_certificate(cert))
        throw std::invalid_argument(
            "certificate rejected: stored fields do not match recomputation");
    return cert;
}

GoldenCertificateData parse_golden_file(const std::string& text) {
    GoldenCertificateData golden;
    bool have_content = false, have_h3 = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        std::string rest;
        std::getline(ls, rest);
        const std::string where = "golden file line " + std::to_string(lineno);
        auto start = rest.find_first_not_of(" \t\r");
        auto end = rest.find_last_not_of(" \t\r");
        rest = start == std::string::npos ? std::string() : rest.substr(start, end - start + 1);
        try {
            if (rest.empty()) {
                throw std::invalid_argument("record \"" + keyword + "\" has no data");
            } else if (keyword == "content") {
                if (have_content) throw std::invalid_argument("duplicate content record");
                golden.content = BigInt(rest);
                have_content = true;
            } else if (keyword == "h3prime") {
                if (have_h3) throw std::invalid_argument("duplicate h3prime record");
                golden.h3_prime = UniPoly::parse(rest);
                have_h3 = true;
            } else if (keyword == "factor") {
                golden.factors.push_back(UniPoly::parse(rest));
            } else {
                throw std::invalid_argument("unknown record \"" + keyword + "\"");
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    if (!have_content || !have_h3 || golden.factors.empty())
        throw std::invalid_argument(
            "golden file: needs one content, one h3prime and at least one factor record");
    return golden;
}

std::string compare_with_golden(const NonSolubleCertificate& cert,
                                const GoldenCertificateData& golden) {
    if (cert.content != golden.content)
        return "content mismatch: computed " + cert.content.to_string() + " vs golden " +
               golden.content.to_string();
    if (cert.h3_prime != golden.h3_prime) return "h3prime coefficients differ from golden";
    if (cert.verdict.trail.size() != golden.factors.size())
        return "factor count mismatch: computed " +
               std::to_string(cert.verdict.trail.size()) + " vs golden " +
               std::to_string(golden.factors.size());
    for (size_t i = 0; i < golden.factors.size(); ++i) {
        if (cert.verdict.trail[i].factor != golden.factors[i])
            return "factor " + std::to_string(i + 1) + " differs from golden";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xf]);
    return out;
}

Json make_report(const std::string& command, Json arguments,
                 const std::string& input_digest, Json result) {
    return Json{{"command", command},
                {"arguments", std::move(arguments)},
                {"input_digest", input_digest},
                {"result", std::move(result)}};
}

namespace {

bool is_scalar_array(const Json& j) {
    for (const Json& item : j)
        if (item.is_object() || item.is_array()) return false;
    return true;
}

void pretty_value(std::ostringstream& os, const Json& j, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& item : j.items()) {
            const Json& v = item.value();
            if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
                os << pad << item.key() << ":\n";
                pretty_value(os, v, depth + 1);
            } else {
                os << pad << item.key() << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                pretty_value(os, v, depth + 1);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string pretty_report(const Json& report, int indent) {
    std::ostringstream os;
    pretty_value(os, report, indent);
    return os.str();
}

}  // namespace cadgraph
