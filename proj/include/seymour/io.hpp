#ifndef SEYMOUR_IO_HPP
#define SEYMOUR_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "seymour/special.hpp"

namespace seymour {

/// Matrix text format, bit-exact under print/parse:
///   line 1: field tag, Q or GF2
///   line 2: space-separated row labels (empty line for none)
///   line 3: space-separated column labels
///   then one line per row; rationals as "a" or "a/b" in lowest terms.
using ParsedMatrix = std::variant<RatMatrix, BinMatrix>;

ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix_text(const std::string& text);
ParsedMatrix load_matrix(const std::string& path);

std::string print_matrix(const RatMatrix& m);
std::string print_matrix(const BinMatrix& m);
std::string print_matrix(const ParsedMatrix& m);

/// Convenience accessors that raise ParseError when the field tag is wrong.
const RatMatrix& as_rat(const ParsedMatrix& m);
const BinMatrix& as_gf2(const ParsedMatrix& m);

/// Graph file: a `nodes` line, then `edge <label> <tail> <head>` lines.
/// Blank lines and lines starting with '#' are ignored.
Digraph parse_graph(std::istream& in);
Digraph load_graph(const std::string& path);
std::string print_graph(const Digraph& g);

/// Frame file: `x0 <label>` .. `y2 <label>` lines for the six distinguished
/// labels, plus optional `xl`/`xr`/`yl`/`yr` lines listing the primed sets
/// (omitted sets are derived from the summands).
Sum3Frame parse_frame(std::istream& in);
Sum3Frame load_frame(const std::string& path);
std::string print_frame(const Sum3Frame& f);

/// Decomposition tree, s-expression syntax:
///   (graphic <graph file>)  (cographic <graph file>)
///   (r10)  (r10 (<5 row labels>) (<5 col labels>))
///   (sum1 <tree> <tree>)
///   (sum2 <x> <y> <tree> <tree>)
///   (sum3 <frame file> <tree> <tree>)
/// File references resolve relative to the tree file's directory.
GoodTree parse_tree(const std::string& text, const std::string& base_dir);
GoodTree load_tree(const std::string& path);

} // namespace seymour

#endif
