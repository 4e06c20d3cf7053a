#ifndef SEYMOUR_SPECIAL_HPP
#define SEYMOUR_SPECIAL_HPP

#include <memory>

#include "seymour/matroid.hpp"
#include "seymour/sums.hpp"

namespace seymour {

/// Directed multigraph; self-loops allowed, node and edge labels distinct.
struct Digraph {
    struct Edge {
        Label label;
        Label tail;
        Label head;
    };
    std::vector<Label> nodes;
    std::vector<Edge> edges;

    void validate() const; // label distinctness, endpoints exist
};

/// Every column is zero or has exactly one +1 and one -1.
bool is_node_incidence(const RatMatrix& a);

/// Rows indexed by nodes, columns by edges; +1 at the tail, -1 at the head,
/// self-loops give zero columns.
RatMatrix incidence_matrix(const Digraph& g);

/// The fixed 5x5 GF(2) standard representation of R10, rows r1..r5 and
/// columns c1..c5.
StandardReprB r10();

/// Standard representation of the graphic matroid together with a rational
/// TU witness: the incidence matrix standardized at a greedy base; the
/// GF(2) side is its support.
struct ReprWithWitness {
    StandardReprB repr;
    Signing witness;
};
ReprWithWitness graphic_standard_repr(const Digraph& g);
/// Dual of the graphic representation; the witness is the negated transpose
/// of the graphic witness.
ReprWithWitness cographic_standard_repr(const Digraph& g);

/// Decomposition certificate: graphic/cographic/R10 leaves joined by 1-, 2-
/// and 3-sums. Evaluation produces a GF(2) standard representation plus a
/// TU signing, certifying regularity constructively.
struct GoodTree {
    enum class Kind { Graphic, Cographic, R10, Sum1, Sum2, Sum3 };
    Kind kind;

    Digraph graph;                          // leaf kinds
    std::vector<Label> r10_rows, r10_cols;  // R10 relabeling; empty = canonical
    Label x, y;                             // 2-sum glue labels
    Sum3Frame frame;                        // 3-sum frame
    std::unique_ptr<GoodTree> left, right;

    static GoodTree graphic_leaf(Digraph g);
    static GoodTree cographic_leaf(Digraph g);
    static GoodTree r10_leaf(std::vector<Label> rows = {}, std::vector<Label> cols = {});
    static GoodTree sum1_node(GoodTree l, GoodTree r);
    static GoodTree sum2_node(GoodTree l, GoodTree r, Label x, Label y);
    static GoodTree sum3_node(GoodTree l, GoodTree r, Sum3Frame frame);
};

/// Evaluate a good tree bottom-up. Certificates and sum preconditions are
/// validated eagerly; failures name the tree path of the offending node.
/// The returned signing satisfies is_signing_of(signing, repr) and is TU.
ReprWithWitness eval_good_tree(const GoodTree& t);

} // namespace seymour

#endif
