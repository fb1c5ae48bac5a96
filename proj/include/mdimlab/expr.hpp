#pragma once

// Small expression language naming the graphs and designs of the library.
//
//   graph  := family | op "(" graph ")" | "incidence(" design ")" | "file:" path
//   family := name (":" int)*        e.g. cycle:5, rook:4:4, petersen
//   op     := double | taylor | fold | halfplus | halfminus
//   design := "pg2:" q | "trivial:" v | dual(design) | complement(design)
//           | design(graph) | "file:" path
//
// Families: cycle:n, complete:n, multipartite:s:t, kvv:v (K_{v,v} minus a
// perfect matching), hypercube:m, johnson:m:r, kneser:m:r, odd:r, paley:q,
// rook:m:n, shrikhande, gq22, and the names petersen, icosahedron, heawood.

#include <string>
#include <string_view>

#include "mdimlab/constructors.hpp"
#include "mdimlab/design.hpp"
#include "mdimlab/graph.hpp"

namespace mdimlab {

/// Throws Error(ParseError) on malformed input; constructor errors pass
/// through unchanged.
Graph parse_graph(std::string_view expr);
SymmetricDesign parse_design(std::string_view expr);

/// Only for expressions whose outermost operation is double, taylor or
/// incidence; the result keeps the construction's vertex tags.
LabeledCover parse_cover(std::string_view expr);

}  // namespace mdimlab
