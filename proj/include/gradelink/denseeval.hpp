#ifndef GRADELINK_DENSEEVAL_HPP
#define GRADELINK_DENSEEVAL_HPP

#include "gradelink/denseres.hpp"

namespace gradelink {

/* Dense construction of the grade-0 evaluation map
 * δ: M -> Hom(Hom(M,C),C), fully independent of the Groebner path: both Hom
 * modules are solved as commuting-matrix spaces and δ(b) is the functional
 * φ ↦ φ(b). Gives the oracle for the kernel/cokernel halves of the
 * four-term sequence on Artinian fixtures. */

template <class K>
struct DenseHomModule {
    ArtinianModule<K> module;          // Hom as a module
    std::vector<DenseMat<K>> basis;    // matrices, aligned with module basis
};

template <class K>
DenseHomModule<K> dense_hom_module(const ArtinianModule<K>& A, const ArtinianModule<K>& B) {
    std::vector<int> all;
    for (int v = 0; v < A.ring->poly.nvars(); ++v) all.push_back(v);
    DenseHomModule<K> out;
    // reuse the subring kit with the full variable set; recover the sorted
    // basis by rebuilding it the same way
    const auto& k = A.field();
    DenseHom<K> H = dense_hom_partial(A, B, all);
    std::vector<int> order(H.basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return H.degrees[a] < H.degrees[b]; });
    out.module = dense_hom_subring(A, B, all);
    for (int idx : order) out.basis.push_back(H.basis[idx]);
    (void)k;
    return out;
}

template <class K>
struct DenseEvaluation {
    DenseMat<K> matrix;            // dim(H2) x dim(M)
    ArtinianModule<K> target;      // Hom(Hom(M,C),C)
    ArtinianModule<K> kernel;      // submodule of M
    ArtinianModule<K> cokernel;
};

/* Submodule on an explicit action-closed spanning set. */
template <class K>
ArtinianModule<K> artinian_sub_from_basis(const ArtinianModule<K>& M,
                                          const std::vector<std::vector<typename K::Elem>>& vecs) {
    const auto& k = M.field();
    int n = M.dim();
    // choose a graded independent subset
    std::vector<std::vector<typename K::Elem>> basis;
    std::vector<int> degs;
    RowSpace<K> span(k, n);
    // degree of a vector: all nonzero coordinates share one degree
    auto deg_of = [&](const std::vector<typename K::Elem>& v) {
        int d = INT32_MIN;
        for (int i = 0; i < n; ++i)
            if (!k.is_zero(v[i])) {
                if (d == INT32_MIN) d = M.degrees[i];
                else if (d != M.degrees[i]) throw Error("internal", "inhomogeneous dense vector");
            }
        return d;
    };
    std::vector<std::pair<int, std::vector<typename K::Elem>>> sorted;
    for (auto& v : vecs) {
        int d = deg_of(v);
        if (d != INT32_MIN) sorted.push_back({d, v});
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [d, v] : sorted)
        if (span.insert(v)) {
            basis.push_back(v);
            degs.push_back(d);
        }
    int m = int(basis.size());
    ArtinianModule<K> out;
    out.ring = M.ring;
    out.degrees = degs;
    DenseMat<K> B(n, m, k);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) B.at(i, j) = basis[j][i];
    for (int v = 0; v < M.ring->poly.nvars(); ++v) {
        DenseMat<K> act(m, m, k);
        for (int j = 0; j < m; ++j) {
            auto w = dm_apply(k, M.var_action[v], basis[j]);
            auto sol = dm_solve(k, B, w);
            if (!sol) throw Error("internal", "span is not action-closed");
            for (int i = 0; i < m; ++i) act.at(i, j) = (*sol)[i];
        }
        out.var_action.push_back(std::move(act));
    }
    return out;
}

/* Quotient by an action-closed subspace, with induced actions. */
template <class K>
ArtinianModule<K> artinian_quotient_by(const ArtinianModule<K>& M,
                                       const std::vector<std::vector<typename K::Elem>>& sub) {
    const auto& k = M.field();
    int n = M.dim();
    RowSpace<K> S(k, n);
    for (auto& v : sub) S.insert(v);
    // representatives: basis vectors surviving reduction, degree order
    std::vector<int> reps;
    {
        RowSpace<K> seen = S;
        for (auto& [d, idxs] : M.by_degree())
            for (int i : idxs) {
                std::vector<typename K::Elem> e(n, k.zero());
                e[i] = k.one();
                if (seen.insert(e)) reps.push_back(i);
            }
    }
    int m = int(reps.size());
    // coordinates of a reduced vector in the representative basis: solve
    DenseMat<K> basis_mat(n, m, k);
    for (int j = 0; j < m; ++j) {
        std::vector<typename K::Elem> e(n, k.zero());
        e[reps[j]] = k.one();
        auto r = S.reduce(std::move(e));
        for (int i = 0; i < n; ++i) basis_mat.at(i, j) = r[i];
    }
    ArtinianModule<K> out;
    out.ring = M.ring;
    for (int j = 0; j < m; ++j) out.degrees.push_back(M.degrees[reps[j]]);
    for (int v = 0; v < M.ring->poly.nvars(); ++v) {
        DenseMat<K> act(m, m, k);
        for (int j = 0; j < m; ++j) {
            std::vector<typename K::Elem> e(n, k.zero());
            e[reps[j]] = k.one();
            auto w = S.reduce(dm_apply(k, M.var_action[v], e));
            auto sol = dm_solve(k, basis_mat, w);
            if (!sol) throw Error("internal", "quotient action escaped");
            for (int i = 0; i < m; ++i) act.at(i, j) = (*sol)[i];
        }
        out.var_action.push_back(std::move(act));
    }
    return out;
}

template <class K>
DenseEvaluation<K> dense_evaluation(const ArtinianModule<K>& M, const ArtinianModule<K>& C) {
    const auto& k = M.field();
    auto H = dense_hom_module(M, C);
    auto H2 = dense_hom_module(H.module, C);
    DenseEvaluation<K> out;
    out.target = H2.module;
    int n = M.dim(), h = H.module.dim(), h2 = H2.module.dim();
    out.matrix = DenseMat<K>(h2, n, k);
    for (int b = 0; b < n; ++b) {
        // the functional φ ↦ φ(b) as a dim(C) x dim(H) matrix
        DenseMat<K> f(C.dim(), h, k);
        for (int t = 0; t < h; ++t) {
            std::vector<typename K::Elem> e(n, k.zero());
            e[b] = k.one();
            auto w = dm_apply(k, H.basis[t], e);
            for (int i = 0; i < C.dim(); ++i) f.at(i, t) = w[i];
        }
        // express f in the H2 basis
        DenseMat<K> flat(C.dim() * h, h2, k);
        for (int s = 0; s < h2; ++s)
            for (int i = 0; i < C.dim(); ++i)
                for (int j = 0; j < h; ++j) flat.at(i * h + j, s) = H2.basis[s].at(i, j);
        std::vector<typename K::Elem> rhs(size_t(C.dim()) * h, k.zero());
        for (int i = 0; i < C.dim(); ++i)
            for (int j = 0; j < h; ++j) rhs[size_t(i) * h + j] = f.at(i, j);
        auto sol = dm_solve(k, flat, rhs);
        if (!sol) throw Error("internal", "evaluation functional outside the bidual");
        for (int s = 0; s < h2; ++s) out.matrix.at(s, b) = (*sol)[s];
    }
    // kernel: per-degree nullspace blocks (δ is graded of degree 0)
    std::vector<std::vector<typename K::Elem>> null_basis;
    for (auto& [d, cols] : M.by_degree()) {
        std::vector<int> rows;
        for (int s = 0; s < h2; ++s)
            if (H2.module.degrees[s] == d) rows.push_back(s);
        DenseMat<K> blk(int(rows.size()), int(cols.size()), k);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) blk.at(int(i), int(j)) = out.matrix.at(rows[i], cols[j]);
        for (auto& nb : dm_nullspace(k, blk)) {
            std::vector<typename K::Elem> v(n, k.zero());
            for (size_t j = 0; j < cols.size(); ++j) v[cols[j]] = nb[j];
            null_basis.push_back(std::move(v));
        }
    }
    out.kernel = artinian_sub_from_basis(M, null_basis);
    // cokernel: H2 / image
    std::vector<std::vector<typename K::Elem>> image;
    for (int b = 0; b < n; ++b) {
        std::vector<typename K::Elem> col(h2, k.zero());
        for (int s = 0; s < h2; ++s) col[s] = out.matrix.at(s, b);
        image.push_back(std::move(col));
    }
    out.cokernel = artinian_quotient_by(H2.module, image);
    return out;
}

}  // namespace gradelink

#endif
