#pragma once

#include <string>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"

namespace graphpart {

// Graph files come in two text formats, told apart by the first token that
// is not a comment (lines starting with `c`) or blank:
//   - DIMACS-like: one `p edge <n> <m>` header, then `e <u> <v>` lines with
//     1-based endpoints. The declared edge count is not enforced.
//   - bare edge list: first line `<n>`, then `<u> <v>` lines, 0-based.
// Malformed lines and out-of-range endpoints throw ParseError carrying the
// line number. Duplicate edges are tolerated and merged.
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);

// Canonical DIMACS form: header plus edges in lexicographic order, so equal
// graphs always serialize to identical bytes.
std::string format_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// Certificates serialize one vertex per line, sorted by vertex id:
//   side A <cluster-index> <vertex>
//   side B <cluster-index> <vertex>
// All ids 0-based. Parsing rebuilds the exact partition: a vertex assigned
// twice or a vertex below the maximum id left unassigned is a CoverageError,
// a cluster index with no members is a ParseError. Round-trips bit-exactly
// for certificates whose cluster member lists are ascending (all certificates
// produced by this repository are).
std::string format_certificate(const Bipartition& p);
void write_certificate(const Bipartition& p, const std::string& path);
Bipartition parse_certificate_text(const std::string& text);
Bipartition parse_certificate(const std::string& path);

} // namespace graphpart
