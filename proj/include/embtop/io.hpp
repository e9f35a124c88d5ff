#pragma once

#include <iosfwd>
#include <string>

#include "embtop/complex.hpp"
#include "embtop/linking.hpp"
#include "embtop/setsystem.hpp"

namespace embtop {

/// Parse error carrying the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// ".scx": one facet per line as space-separated vertex ids; '#' starts a
/// comment. Duplicate vertices within a line are rejected; an input with no
/// facets is rejected ("empty complex").
SimplicialComplex read_scx(std::istream& in);
SimplicialComplex read_scx_file(const std::string& path);
void write_scx(std::ostream& out, const SimplicialComplex& K,
               const std::string& header_comment = "");
void write_scx_file(const std::string& path, const SimplicialComplex& K,
                    const std::string& header_comment = "");

/// ".geom": "v <id> <x> <y> <z>" vertex lines (rationals as p/q or integers)
/// followed by "e <id1> <id2>" edge lines. Edges are indexed by order of
/// appearance for the CLI cycle notation.
struct GeomFile {
    EmbeddedCurves curves;
    std::vector<std::pair<VertexId, VertexId>> edge_order;
};
GeomFile read_geom(std::istream& in);
GeomFile read_geom_file(const std::string& path);

/// Builds a 1-chain from signed 1-based edge indices ("2,-5,7"): index k
/// refers to the k-th edge line, oriented from its first to its second
/// vertex; a minus sign reverses it.
Chain cycle_from_edge_list(const GeomFile& geom, const std::string& spec);

/// Set-system text: header "n m", then m lines of space-separated element
/// indices (a blank line is an empty set); '#' starts a comment.
SetSystem read_setsystem(std::istream& in);
SetSystem read_setsystem_file(const std::string& path);
void write_setsystem(std::ostream& out, const SetSystem& s);

}  // namespace embtop
