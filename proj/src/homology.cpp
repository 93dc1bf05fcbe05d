#include "k4/homology.hpp"

#include <stdexcept>

#ifdef K4_HAVE_OPENMP
#include <omp.h>
#endif

namespace k4 {

namespace {

bool valid_node(const Module& node) {
    switch (node.q) {
    case 'A': return node.m >= 0 && node.n >= 0;
    case 'B': return node.m <= 0 && node.n >= 0;
    case 'C': return node.m <= 0 && node.n <= 0;
    case 'D': return node.m >= 0 && node.n <= 0;
    }
    return false;
}

const MapKind kAllKinds[] = {MapKind::Nabla, MapKind::Nabla2, MapKind::TildeNabla2,
                             MapKind::Nabla3, MapKind::TildeNabla3};

} // namespace

std::optional<Edge> outgoing_edge(const Module& node) {
    std::optional<Edge> out;
    for (MapKind k : kAllKinds) {
        if (!map_defined(k, node)) continue;
        if (out) throw std::logic_error("outgoing_edge: node has two outgoing maps");
        out = Edge{k, node, map_target(k, node)};
    }
    return out;
}

std::optional<Edge> incoming_edge(const Module& node) {
    std::optional<Edge> in;
    for (MapKind k : kAllKinds) {
        // Candidate source per kind, inverted from map_target.
        std::vector<Module> cands;
        switch (k) {
        case MapKind::Nabla:
            cands.push_back(Module{node.q, node.m + 1, node.n + 1});
            break;
        case MapKind::Nabla2:
            if (node.q == 'D' && node.n == 0) cands.push_back(Module{'A', node.m + 2, 0});
            if (node.q == 'C' && node.n == 0) cands.push_back(Module{'B', node.m + 2, 0});
            break;
        case MapKind::TildeNabla2:
            if (node.q == 'B' && node.m == 0) cands.push_back(Module{'A', 0, node.n + 2});
            if (node.q == 'C' && node.m == 0) cands.push_back(Module{'D', 0, node.n + 2});
            break;
        case MapKind::Nabla3:
            if (node.q == 'C' && node.m == -1 && node.n == 0) cands.push_back(Module{'A', 0, 1});
            break;
        case MapKind::TildeNabla3:
            if (node.q == 'C' && node.m == 0 && node.n == -1) cands.push_back(Module{'A', 1, 0});
            break;
        }
        for (const Module& src : cands) {
            if (!valid_node(src) || !map_defined(k, src)) continue;
            if (!(map_target(k, src) == node)) continue;
            if (in) throw std::logic_error("incoming_edge: node has two incoming maps");
            in = Edge{k, src, node};
        }
    }
    return in;
}

NodeHomology node_homology(const Module& node, int degree) {
    NodeHomology result;
    result.node = node;
    result.degree = degree;

    std::vector<VermaMono> basis = graded_basis(node, degree);
    int dim = static_cast<int>(basis.size());

    std::optional<Edge> out = outgoing_edge(node);
    std::optional<Edge> in = incoming_edge(node);

    std::optional<Matrix> omat, imat;
    if (out) omat = map_matrix(out->kind, node, degree);
    if (in) {
        int sd = degree - map_degree_shift(in->kind);
        if (sd >= 0) imat = map_matrix(in->kind, in->src, sd);
    }
    if (omat && imat) {
        if (!is_zero_matrix(matmul(*omat, *imat)))
            throw std::logic_error("node_homology: consecutive maps do not compose to zero");
    }

    // Split by (hx, hy) weight; both differentials are weight equivariant.
    std::vector<std::pair<std::pair<GRat, GRat>, std::vector<int>>> blocks;
    for (int k = 0; k < dim; ++k) {
        auto wt = hxy_weight(basis[k], node);
        bool placed = false;
        for (auto& [bw, idxs] : blocks)
            if (bw == wt) { idxs.push_back(k); placed = true; break; }
        if (!placed) blocks.push_back({wt, {k}});
    }

    for (const auto& [wt, idxs] : blocks) {
        int cols = static_cast<int>(idxs.size());
        int ker_b;
        std::optional<Matrix> ob;
        if (omat) {
            Matrix sub(omat->rows(), cols);
            for (int c = 0; c < cols; ++c)
                for (int r = 0; r < omat->rows(); ++r) sub.at(r, c) = omat->at(r, idxs[c]);
            ob = sub;
            ker_b = cols - sub.rank();
        } else {
            ker_b = cols;
        }
        int rank_in_b = 0;
        std::optional<Matrix> ib;
        if (imat) {
            // Keep only the image rows belonging to this block; equivariance
            // keeps each image column inside one block.
            Matrix sub(cols, imat->cols());
            for (int r = 0; r < cols; ++r)
                for (int c = 0; c < imat->cols(); ++c) sub.at(r, c) = imat->at(idxs[r], c);
            ib = sub;
            rank_in_b = sub.rank();
        }
        int h = ker_b - rank_in_b;
        if (h <= 0) continue;
        result.dim += h;

        // Representatives: kernel vectors independent from the image.
        Matrix span(0, cols);
        if (ib) {
            for (int c = 0; c < ib->cols(); ++c) {
                std::vector<GRat> row(cols);
                for (int r = 0; r < cols; ++r) row[r] = ib->at(r, c);
                span.append_row(row);
            }
        }
        std::vector<std::vector<GRat>> kb;
        if (ob) {
            kb = ob->nullspace();
        } else {
            for (int c = 0; c < cols; ++c) {
                std::vector<GRat> e(cols);
                e[c] = GRat(1);
                kb.push_back(e);
            }
        }
        int base_rank = span.rank();
        for (const auto& v : kb) {
            Matrix trial = span;
            trial.append_row(v);
            int r = trial.rank();
            if (r == base_rank) continue;
            span = trial;
            base_rank = r;
            HomologyClass cls;
            cls.hx = wt.first;
            cls.hy = wt.second;
            cls.t = node.mu_t() - GRat(degree);
            for (int c = 0; c < cols; ++c) cls.rep.add_term(basis[idxs[c]], v[c]);
            result.classes.push_back(cls);
        }
    }
    return result;
}

std::vector<Module> diagram_nodes(int window) {
    std::vector<Module> out;
    for (int m = 0; m <= window; ++m)
        for (int n = 0; n <= window; ++n) out.push_back(Module{'A', m, n});
    for (int m = 0; m >= -window; --m)
        for (int n = 0; n <= window; ++n) out.push_back(Module{'B', m, n});
    for (int m = 0; m >= -window; --m)
        for (int n = 0; n >= -window; --n) out.push_back(Module{'C', m, n});
    for (int m = 0; m <= window; ++m)
        for (int n = 0; n >= -window; --n) out.push_back(Module{'D', m, n});
    return out;
}

std::vector<NodeHomology> homology_sweep(int window, int dmax, bool serial) {
    std::vector<Module> nodes = diagram_nodes(window);
    int cells = static_cast<int>(nodes.size()) * (dmax + 1);
    std::vector<NodeHomology> out(cells);
#ifdef K4_HAVE_OPENMP
    if (!serial) {
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < cells; ++c)
            out[c] = node_homology(nodes[c / (dmax + 1)], c % (dmax + 1));
        return out;
    }
#endif
    for (int c = 0; c < cells; ++c)
        out[c] = node_homology(nodes[c / (dmax + 1)], c % (dmax + 1));
    return out;
}

} // namespace k4
