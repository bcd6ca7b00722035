#ifndef GRADELINK_ENDSPLIT_HPP
#define GRADELINK_ENDSPLIT_HPP

#include <random>

#include "gradelink/artinian.hpp"

namespace gradelink {

/* Degree-0 endomorphism algebra of a dense graded module, with enough
 * structure theory to find idempotents: radical via the trace form (valid
 * in characteristic 0 or p > dim), minimal polynomials, coprime splitting,
 * and Newton lifting. Drives the exact stability check on Artinian
 * fixtures. */
template <class K>
struct End0Algebra {
    const ArtinianModule<K>* module;
    std::vector<DenseMat<K>> basis;  // degree-0 commuting matrices
    DenseMat<K> gram;                // trace form of left multiplication
    std::vector<std::vector<typename K::Elem>> radical;  // coords in basis

    int dim() const { return int(basis.size()); }
};

template <class K>
std::vector<typename K::Elem> end0_coords(const K& k, const End0Algebra<K>& A,
                                          const DenseMat<K>& m) {
    // solve m = Σ c_i basis_i entrywise
    int n = A.module->dim();
    DenseMat<K> sys(n * n, A.dim(), k);
    std::vector<typename K::Elem> rhs(size_t(n) * n, k.zero());
    for (int b = 0; b < A.dim(); ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.at(i * n + j, b) = A.basis[b].at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs[size_t(i) * n + j] = m.at(i, j);
    auto sol = dm_solve(k, sys, rhs);
    if (!sol) throw Error("internal", "endomorphism outside End0 span");
    return *sol;
}

template <class K>
End0Algebra<K> end0_algebra(const ArtinianModule<K>& M) {
    const auto& k = M.field();
    End0Algebra<K> A;
    A.module = &M;
    auto hom = dense_hom(M, M);
    for (size_t i = 0; i < hom.basis.size(); ++i)
        if (hom.degrees[i] == 0) A.basis.push_back(hom.basis[i]);
    int d = A.dim();
    // left-multiplication trace form
    A.gram = DenseMat<K>(d, d, k);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            DenseMat<K> prod = dm_mul(k, A.basis[i], A.basis[j]);
            // trace of left multiplication by prod on the algebra:
            // tr(L_prod) = Σ_s coeff of basis_s in prod·basis_s
            auto coords_of = [&](const DenseMat<K>& m) { return end0_coords(k, A, m); };
            typename K::Elem tr = k.zero();
            for (int s = 0; s < d; ++s) {
                auto c = coords_of(dm_mul(k, prod, A.basis[s]));
                tr = k.add(tr, c[s]);
            }
            A.gram.at(i, j) = tr;
        }
    A.radical = dm_nullspace(k, A.gram);
    return A;
}

template <class K>
DenseMat<K> end0_element(const K& k, const End0Algebra<K>& A,
                         const std::vector<typename K::Elem>& coords) {
    int n = A.module->dim();
    DenseMat<K> m(n, n, k);
    for (int b = 0; b < A.dim(); ++b) {
        if (k.is_zero(coords[b])) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = k.add(m.at(i, j), k.mul(coords[b], A.basis[b].at(i, j)));
    }
    return m;
}

/* Minimal polynomial of a matrix (coefficients low-to-high, monic). */
template <class K>
std::vector<typename K::Elem> matrix_min_poly(const K& k, const DenseMat<K>& m) {
    int n = m.r;
    std::vector<DenseMat<K>> powers{dm_identity(n, k)};
    RowSpace<K> span(k, n * n);
    auto flat = [&](const DenseMat<K>& a) {
        std::vector<typename K::Elem> v(size_t(n) * n, k.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[size_t(i) * n + j] = a.at(i, j);
        return v;
    };
    while (true) {
        const DenseMat<K>& last = powers.back();
        if (!span.insert(flat(last))) {
            // solve last power as a combination of the earlier ones
            int deg = int(powers.size()) - 1;
            DenseMat<K> sys(n * n, deg, k);
            for (int p = 0; p < deg; ++p) {
                auto v = flat(powers[p]);
                for (int r = 0; r < n * n; ++r) sys.at(r, p) = v[r];
            }
            auto sol = dm_solve(k, sys, flat(last));
            if (!sol) throw Error("internal", "minimal polynomial solve failed");
            std::vector<typename K::Elem> mu(deg + 1, k.zero());
            for (int p = 0; p < deg; ++p) mu[p] = k.neg((*sol)[p]);
            mu[deg] = k.one();
            return mu;
        }
        powers.push_back(dm_mul(k, m, powers.back()));
    }
}

template <class K>
typename K::Elem poly_eval_scalar(const K& k, const std::vector<typename K::Elem>& poly,
                                  const typename K::Elem& x) {
    typename K::Elem acc = k.zero();
    for (int i = int(poly.size()) - 1; i >= 0; --i) acc = k.add(k.mul(acc, x), poly[i]);
    return acc;
}

template <class K>
DenseMat<K> poly_eval_matrix(const K& k, const std::vector<typename K::Elem>& poly,
                             const DenseMat<K>& m) {
    DenseMat<K> acc(m.r, m.c, k);
    for (int i = int(poly.size()) - 1; i >= 0; --i) {
        acc = dm_mul(k, acc, m);
        acc.at(0, 0) = acc.at(0, 0);  // keep shape
        for (int d = 0; d < m.r; ++d) acc.at(d, d) = k.add(acc.at(d, d), poly[i]);
    }
    return acc;
}

/* Nontrivial idempotent from a coprime factor split of some element's
 * minimal polynomial; Newton-lift so it is exactly idempotent in End(M). */
template <class K>
std::optional<DenseMat<K>> find_nontrivial_idempotent(const ArtinianModule<K>& M,
                                                      const End0Algebra<K>& A, int budget,
                                                      std::mt19937_64& rng) {
    const auto& k = M.field();
    int n = M.dim();
    if (A.dim() <= 1) return std::nullopt;
    auto is_scalar = [&](const DenseMat<K>& e) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    if (!k.eq(e.at(i, i), e.at(0, 0))) return false;
                } else if (!k.is_zero(e.at(i, j))) {
                    return false;
                }
            }
        return true;
    };
    // root candidates for the coprime split
    std::vector<long> small = {0, 1, -1, 2, -2, 3, -3};
    int tried = 0;
    auto try_element = [&](const DenseMat<K>& a) -> std::optional<DenseMat<K>> {
        auto mu = matrix_min_poly(k, a);
        int deg = int(mu.size()) - 1;
        if (deg <= 1) return std::nullopt;
        for (long lam : small) {
            auto x = k.from_int(lam);
            if (!k.is_zero(poly_eval_scalar(k, mu, x))) continue;
            // mu = (t - lam)^m * g with g(lam) != 0: divide out
            std::vector<typename K::Elem> g = mu;
            int mult = 0;
            while (true) {
                // synthetic division by (t - lam)
                std::vector<typename K::Elem> q(g.size() - 1, k.zero());
                typename K::Elem carry = k.zero();
                for (int i = int(g.size()) - 1; i >= 1; --i) {
                    carry = k.add(g[i], k.mul(carry, x));
                    q[i - 1] = carry;
                }
                auto rem = k.add(g[0], k.mul(carry, x));
                if (!k.is_zero(rem)) break;
                g = q;
                ++mult;
                if (g.size() == 1) break;
            }
            if (mult == 0 || g.size() <= 1) continue;  // not a proper split
            if (k.is_zero(poly_eval_scalar(k, g, x))) continue;
            // e0 = g(a)/g(lam): kills the lam-part, identity on the rest...
            auto ginv = k.inv(poly_eval_scalar(k, g, x));
            DenseMat<K> e = poly_eval_matrix(k, g, a);
            for (auto& v : e.a) v = k.mul(v, ginv);
            // Newton lift to an exact idempotent: e <- 3e^2 - 2e^3
            for (int it = 0; it < 2 * n + 4; ++it) {
                DenseMat<K> e2 = dm_mul(k, e, e);
                DenseMat<K> e3 = dm_mul(k, e2, e);
                DenseMat<K> next(n, n, k);
                for (size_t s = 0; s < next.a.size(); ++s)
                    next.a[s] = k.sub(k.mul(k.from_int(3), e2.a[s]), k.mul(k.from_int(2), e3.a[s]));
                bool stable = true;
                for (size_t s = 0; s < next.a.size(); ++s)
                    if (!k.eq(next.a[s], e.a[s])) { stable = false; break; }
                e = std::move(next);
                if (stable) break;
            }
            DenseMat<K> e2 = dm_mul(k, e, e);
            bool idem = true;
            for (size_t s = 0; s < e.a.size(); ++s)
                if (!k.eq(e.a[s], e2.a[s])) { idem = false; break; }
            if (!idem) continue;
            if (is_scalar(e)) continue;
            return e;
        }
        return std::nullopt;
    };
    for (int b = 0; b < A.dim() && tried < budget; ++b, ++tried) {
        if (auto e = try_element(A.basis[b])) return e;
    }
    while (tried < budget) {
        ++tried;
        std::vector<typename K::Elem> coords(A.dim(), k.zero());
        for (int b = 0; b < A.dim(); ++b) coords[b] = k.from_int(long(rng() % 7) - 3);
        if (auto e = try_element(end0_element(k, A, coords))) return e;
    }
    return std::nullopt;
}

/* Dense submodule on an action-closed subspace (image of a degree-0
 * idempotent): restricted actions solved in the chosen basis. */
template <class K>
ArtinianModule<K> artinian_image(const ArtinianModule<K>& M, const DenseMat<K>& e) {
    const auto& k = M.field();
    int n = M.dim();
    // column space of e, chosen degree by degree for a graded basis
    std::vector<std::vector<typename K::Elem>> basis;
    std::vector<int> degs;
    RowSpace<K> span(k, n);
    for (auto& [d, idxs] : M.by_degree())
        for (int j : idxs) {
            std::vector<typename K::Elem> col(n, k.zero());
            for (int i = 0; i < n; ++i) col[i] = e.at(i, j);
            if (span.insert(col)) {
                basis.push_back(col);
                degs.push_back(d);
            }
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
            if (!sol) throw Error("internal", "idempotent image is not action-closed");
            for (int i = 0; i < m; ++i) act.at(i, j) = (*sol)[i];
        }
        out.var_action.push_back(std::move(act));
    }
    return out;
}

/* Full graded Krull-Schmidt decomposition attempt; pieces for which no
 * splitting idempotent was found within budget are returned as-is with the
 * `certified` flag saying whether every returned piece is indecomposable. */
template <class K>
struct DecompositionResult {
    std::vector<ArtinianModule<K>> pieces;
    bool certified = true;
};

template <class K>
DecompositionResult<K> decompose_indecomposables(const ArtinianModule<K>& M, int budget,
                                                 std::mt19937_64& rng) {
    DecompositionResult<K> out;
    if (M.dim() == 0) return out;
    auto A = end0_algebra(M);
    int s = A.dim() - int(A.radical.size());
    if (s <= 1) {
        out.pieces.push_back(M);
        return out;
    }
    auto e = find_nontrivial_idempotent(M, A, budget, rng);
    if (!e) {
        out.pieces.push_back(M);
        out.certified = false;  // could not split although End/rad is large
        return out;
    }
    const auto& k = M.field();
    DenseMat<K> comp = dm_identity(M.dim(), k);
    for (size_t t = 0; t < comp.a.size(); ++t) comp.a[t] = k.sub(comp.a[t], e->a[t]);
    for (auto& half : {artinian_image(M, *e), artinian_image(M, comp)}) {
        auto sub = decompose_indecomposables(half, budget, rng);
        for (auto& p : sub.pieces) out.pieces.push_back(p);
        out.certified = out.certified && sub.certified;
    }
    return out;
}

}  // namespace gradelink

#endif
