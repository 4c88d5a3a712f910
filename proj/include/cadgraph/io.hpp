// JSON and text (de)serialization for every artifact the command line tool
// reads or writes: graphs, dimensioned graphs, reduction traces, split
// decompositions, classifications, certificates, DOT rendering, and the
// input digest stamped into reports.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cadgraph/elimination.hpp"
#include "cadgraph/galois.hpp"
#include "cadgraph/graph.hpp"
#include "cadgraph/reduction.hpp"
#include "cadgraph/rigidity.hpp"

namespace cadgraph {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graphs
//
// Wire format: {"vertices":[0,1,...], "edges":[[u,v],...]} with every edge
// pair normalized u < v. A dimensioned graph adds "base_edge":[u,v] and
// "dims":{"u-v": value} where each value is an exact rational written as an
// integer or a "p/q" string (the writer always emits strings).
// ---------------------------------------------------------------------------

Json graph_to_json(const Graph& g);

// Strict: requires the "vertices" and "edges" keys with the shapes above and
// at least two vertices; all structural validation of the Graph constructor
// applies. Throws std::invalid_argument with a descriptive message.
Graph graph_from_json(const Json& j);

Json dimensioned_to_json(const DimensionedGraph& dg);

// `unsquared`: the file carries plain lengths; every value (base included)
// is squared on ingestion. Runs validate_dimensions before returning.
DimensionedGraph dimensioned_from_json(const Json& j, bool unsquared = false);

// A graph file that may or may not carry dimensions. Unknown keys are
// rejected so that typos ("vertexes", "dim") fail loudly.
struct ParsedGraphFile {
    Graph graph;
    std::optional<DimensionedGraph> dimensioned;
};

ParsedGraphFile parse_graph_file(const std::string& text, bool unsquared = false);

// Deterministic DOT rendering (vertices and edges in sorted order).
std::string graph_to_dot(const Graph& g);

// ---------------------------------------------------------------------------
// Reduction artifacts
// ---------------------------------------------------------------------------

// {"kind":"contract","edge":[u,v]} or
// {"kind":"substitute","subgraph":[...],"attachments":[a,b,c]}
Json step_to_json(const ReductionStep& s);

// {"steps":[...], "terminal": graph, "stuck": bool}
Json trace_to_json(const ReductionTrace& t);

Json qs_node_to_json(const QsNode& n);
Json decomposition_to_json(const QsDecomposition& d);
Json classification_to_json(const GraphClassification& c);

// ---------------------------------------------------------------------------
// Algebra artifacts
// ---------------------------------------------------------------------------

Json galois_to_json(const GaloisCertificate& c);
Json verdict_to_json(const SolubilityVerdict& v);

// Full round trip: certificate_from_json(certificate_to_json(c)) compares
// equal field-by-field under verify_certificate's notion of equality.
Json certificate_to_json(const NonSolubleCertificate& c);
NonSolubleCertificate certificate_from_json(const Json& j);

// Parse then recompute; a certificate whose stored fields do not match the
// recomputation is rejected with std::invalid_argument.
NonSolubleCertificate load_verified_certificate(const Json& j);

// Golden comparison data: line-oriented text with '#' comments and records
//   content <integer>
//   h3prime <c0> <c1> ... (ascending dense coefficients)
//   factor <c0> <c1> ...  (one line per factor, canonical order)
struct GoldenCertificateData {
    BigInt content;
    UniPoly h3_prime;
    std::vector<UniPoly> factors;
};

GoldenCertificateData parse_golden_file(const std::string& text);

// Empty string when the certificate matches the golden data exactly;
// otherwise a one-line description of the first mismatch.
std::string compare_with_golden(const NonSolubleCertificate& cert,
                                const GoldenCertificateData& golden);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

// 64-bit FNV-1a over the raw input bytes.
uint64_t fnv1a64(std::string_view bytes);

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string digest_hex(std::string_view bytes);

// Assembles the stable part of a CLI report. Everything inside is
// deterministic for identical inputs and flags; the caller may attach a
// "timing" object afterwards, which is excluded from that guarantee.
Json make_report(const std::string& command, Json arguments,
                 const std::string& input_digest, Json result);

// Human summary derived from the report JSON (never the other way around).
std::string pretty_report(const Json& report, int indent = 0);

}  // namespace cadgraph
