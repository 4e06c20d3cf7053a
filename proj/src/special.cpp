#include "seymour/special.hpp"

#include <algorithm>

#include "seymour/errors.hpp"
#include "seymour/linalg.hpp"

namespace seymour {

void Digraph::validate() const {
    std::vector<Label> seen;
    for (const auto& n : nodes) {
        if (std::find(seen.begin(), seen.end(), n) != seen.end())
            throw DuplicateLabelError("duplicate node: '" + n + "'");
        seen.push_back(n);
    }
    seen.clear();
    for (const auto& e : edges) {
        if (std::find(seen.begin(), seen.end(), e.label) != seen.end())
            throw DuplicateLabelError("duplicate edge: '" + e.label + "'");
        seen.push_back(e.label);
        if (std::find(nodes.begin(), nodes.end(), e.tail) == nodes.end())
            throw UnknownLabelError("edge '" + e.label + "' has unknown tail '" + e.tail + "'");
        if (std::find(nodes.begin(), nodes.end(), e.head) == nodes.end())
            throw UnknownLabelError("edge '" + e.label + "' has unknown head '" + e.head + "'");
    }
}

bool is_node_incidence(const RatMatrix& a) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        int plus = 0, minus = 0;
        bool other = false;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Rat& v = a.at(i, j);
            if (v.is_zero()) continue;
            if (v == Rat(1))
                ++plus;
            else if (v == Rat(-1))
                ++minus;
            else
                other = true;
        }
        const bool zero_col = plus == 0 && minus == 0 && !other;
        const bool arc_col = plus == 1 && minus == 1 && !other;
        if (!zero_col && !arc_col) return false;
    }
    return true;
}

RatMatrix incidence_matrix(const Digraph& g) {
    g.validate();
    std::vector<Label> edge_labels;
    for (const auto& e : g.edges) edge_labels.push_back(e.label);
    RatMatrix a(g.nodes, edge_labels);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto& e = g.edges[j];
        if (e.tail == e.head) continue; // self-loop
        a.set(e.tail, e.label, Rat(1));
        a.set(e.head, e.label, Rat(-1));
    }
    return a;
}

StandardReprB r10() {
    const std::vector<std::vector<int>> entries = {
        {1, 0, 0, 1, 1},
        {1, 1, 0, 0, 1},
        {0, 1, 1, 0, 1},
        {0, 0, 1, 1, 1},
        {1, 1, 1, 1, 1},
    };
    return StandardReprB(BinMatrix::from_rows({"r1", "r2", "r3", "r4", "r5"},
                                              {"c1", "c2", "c3", "c4", "c5"}, entries));
}

ReprWithWitness graphic_standard_repr(const Digraph& g) {
    const RatMatrix inc = incidence_matrix(g);
    // Greedy spanning forest: take edges whose columns extend the rank.
    std::vector<Label> base;
    for (const auto& c : inc.col_labels()) {
        std::vector<Label> ext = base;
        ext.push_back(c);
        if (rank(inc.submatrix(inc.row_labels(), ext)) == ext.size()) base = std::move(ext);
    }
    StandardReprQ std_q = standardize(inc, base);
    Signing w{std_q.b, support(std_q.b)};
    return ReprWithWitness{StandardReprB(support(std_q.b)), std::move(w)};
}

ReprWithWitness cographic_standard_repr(const Digraph& g) {
    ReprWithWitness graphic = graphic_standard_repr(g);
    StandardReprB dual = dual_repr(graphic.repr);
    StandardReprQ dual_q = dual_repr(StandardReprQ(graphic.witness.signed_matrix));
    return ReprWithWitness{dual, Signing{dual_q.b, dual.b}};
}

GoodTree GoodTree::graphic_leaf(Digraph g) {
    GoodTree t{};
    t.kind = Kind::Graphic;
    t.graph = std::move(g);
    return t;
}

GoodTree GoodTree::cographic_leaf(Digraph g) {
    GoodTree t{};
    t.kind = Kind::Cographic;
    t.graph = std::move(g);
    return t;
}

GoodTree GoodTree::r10_leaf(std::vector<Label> rows, std::vector<Label> cols) {
    GoodTree t{};
    t.kind = Kind::R10;
    t.r10_rows = std::move(rows);
    t.r10_cols = std::move(cols);
    return t;
}

GoodTree GoodTree::sum1_node(GoodTree l, GoodTree r) {
    GoodTree t{};
    t.kind = Kind::Sum1;
    t.left = std::make_unique<GoodTree>(std::move(l));
    t.right = std::make_unique<GoodTree>(std::move(r));
    return t;
}

GoodTree GoodTree::sum2_node(GoodTree l, GoodTree r, Label x, Label y) {
    GoodTree t{};
    t.kind = Kind::Sum2;
    t.x = std::move(x);
    t.y = std::move(y);
    t.left = std::make_unique<GoodTree>(std::move(l));
    t.right = std::make_unique<GoodTree>(std::move(r));
    return t;
}

GoodTree GoodTree::sum3_node(GoodTree l, GoodTree r, Sum3Frame frame) {
    GoodTree t{};
    t.kind = Kind::Sum3;
    t.frame = std::move(frame);
    t.left = std::make_unique<GoodTree>(std::move(l));
    t.right = std::make_unique<GoodTree>(std::move(r));
    return t;
}

namespace {

ReprWithWitness eval_node(const GoodTree& t, const std::string& path) {
    switch (t.kind) {
    case GoodTree::Kind::Graphic:
        try {
            return graphic_standard_repr(t.graph);
        } catch (const Error& e) {
            throw CertError(path, e.what());
        }
    case GoodTree::Kind::Cographic:
        try {
            return cographic_standard_repr(t.graph);
        } catch (const Error& e) {
            throw CertError(path, e.what());
        }
    case GoodTree::Kind::R10:
        try {
            StandardReprB canon = r10();
            const std::vector<Label> rows = t.r10_rows.empty() ? canon.x() : t.r10_rows;
            const std::vector<Label> cols = t.r10_cols.empty() ? canon.y() : t.r10_cols;
            if (rows.size() != 5 || cols.size() != 5)
                throw Error("R10 relabeling needs 5 row and 5 column labels");
            BinMatrix relabeled(rows, cols);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    relabeled.set(i, j, canon.b.at(i, j));
            StandardReprB repr(std::move(relabeled));
            auto signing = find_tu_signing(repr.b);
            if (!signing) throw Error("R10 signing search failed"); // unreachable
            return ReprWithWitness{repr, std::move(*signing)};
        } catch (const Error& e) {
            throw CertError(path, e.what());
        }
    case GoodTree::Kind::Sum1: {
        auto l = eval_node(*t.left, path + "/left");
        auto r = eval_node(*t.right, path + "/right");
        try {
            StandardReprB repr = sum1(l.repr, r.repr);
            StandardReprQ sq = sum1(StandardReprQ(l.witness.signed_matrix),
                                    StandardReprQ(r.witness.signed_matrix));
            return ReprWithWitness{repr, Signing{sq.b, repr.b}};
        } catch (const Error& e) {
            throw SumPreconditionError(path, e.what());
        }
    }
    case GoodTree::Kind::Sum2: {
        auto l = eval_node(*t.left, path + "/left");
        auto r = eval_node(*t.right, path + "/right");
        try {
            StandardReprB repr = sum2(l.repr, r.repr, t.x, t.y);
            StandardReprQ sq = sum2(StandardReprQ(l.witness.signed_matrix),
                                    StandardReprQ(r.witness.signed_matrix), t.x, t.y);
            return ReprWithWitness{repr, Signing{sq.b, repr.b}};
        } catch (const Error& e) {
            throw SumPreconditionError(path, e.what());
        }
    }
    case GoodTree::Kind::Sum3: {
        auto l = eval_node(*t.left, path + "/left");
        auto r = eval_node(*t.right, path + "/right");
        try {
            Sum3Blocks blocks = validate_sum3(l.repr, r.repr, t.frame);
            StandardReprB repr = sum3(blocks);
            Sum3CanonicalSigning cs = canonical_signing_sum3(
                l.witness.signed_matrix, r.witness.signed_matrix, t.frame);
            return ReprWithWitness{repr, Signing{cs.b, repr.b}};
        } catch (const Error& e) {
            throw SumPreconditionError(path, e.what());
        }
    }
    }
    throw Error("corrupt tree node");
}

} // namespace

ReprWithWitness eval_good_tree(const GoodTree& t) { return eval_node(t, "root"); }

} // namespace seymour
