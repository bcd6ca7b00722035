#ifndef GRADELINK_ARTINIAN_HPP
#define GRADELINK_ARTINIAN_HPP

#include <map>

#include "gradelink/dense.hpp"
#include "gradelink/fpmodule.hpp"

namespace gradelink {

/* Dense model of a finite-dimensional graded module: a k-basis with degrees
 * plus one action matrix per ring variable. This is the independent oracle
 * world: no Groebner reduction happens here beyond the one-time choice of a
 * monomial basis when a model is built from a presentation. */
template <class K>
struct ArtinianModule {
    std::shared_ptr<const QuotientRing<K>> ring;
    std::vector<int> degrees;              // per basis vector, weakly ascending
    std::vector<DenseMat<K>> var_action;   // nvars matrices, dim x dim
    std::vector<std::pair<int, Mono>> labels;  // presentation origin, may be empty

    int dim() const { return int(degrees.size()); }
    const K& field() const { return ring->poly.field; }

    std::map<int, std::vector<int>> by_degree() const {
        std::map<int, std::vector<int>> out;
        for (int i = 0; i < dim(); ++i) out[degrees[i]].push_back(i);
        return out;
    }

    std::map<int, long long> dims_by_degree() const {
        std::map<int, long long> out;
        for (int d : degrees) ++out[d];
        return out;
    }

    /* Action of a standard monomial (product of variable matrices). */
    DenseMat<K> mono_action(const Mono& m) const {
        const auto& k = field();
        DenseMat<K> acc = dm_identity(dim(), k);
        for (int v = 0; v < ring->poly.nvars(); ++v)
            for (int e = 0; e < m.e[v]; ++e) acc = dm_mul(k, var_action[v], acc);
        return acc;
    }

    /* Action of a ring class given as dense coordinates in `ring_model`. */
    std::vector<typename K::Elem> class_apply(const ArtinianModule<K>& ring_model,
                                              const std::vector<typename K::Elem>& rc,
                                              const std::vector<typename K::Elem>& v) const {
        const auto& k = field();
        std::vector<typename K::Elem> out(dim(), k.zero());
        for (int b = 0; b < ring_model.dim(); ++b) {
            if (k.is_zero(rc[b])) continue;
            auto w = dm_apply(k, mono_action_cached(ring_model.labels[b].second), v);
            for (int i = 0; i < dim(); ++i)
                if (!k.is_zero(w[i])) out[i] = k.add(out[i], k.mul(rc[b], w[i]));
        }
        return out;
    }

    const DenseMat<K>& mono_action_cached(const Mono& m) const {
        for (auto& [mm, mat] : mono_cache_)
            if (mm == m) return mat;
        mono_cache_.push_back({m, mono_action(m)});
        return mono_cache_.back().second;
    }

  private:
    mutable std::vector<std::pair<Mono, DenseMat<K>>> mono_cache_;
};

/* Dense model of R as a module over itself (basis: standard monomials). */
template <class K>
ArtinianModule<K> ring_model(std::shared_ptr<const QuotientRing<K>> ring);

/* ---------- FP -> dense ---------- */

template <class K>
ArtinianModule<K> artinian_from_fp(const FPModule<K>& M) {
    const auto& hs = M.hilbert();
    if (!hs.is_artinian() && !hs.is_zero())
        throw Error("not-artinian", "module has positive Krull dimension");
    ArtinianModule<K> A;
    A.ring = M.ring;
    const auto& k = M.ring->poly.field;
    auto dims = hs.finite_dimensions();
    for (auto& [d, n] : dims) {
        auto basis = M.basis_in_degree(d);
        if (int(basis.size()) != n)
            throw Error("internal", "standard monomial count disagrees with Hilbert series");
        for (auto& b : basis) {
            A.degrees.push_back(d);
            A.labels.push_back({b.c[0].first, b.c[0].second.lead_mono()});
        }
    }
    int n = A.dim();
    // label index
    auto find = [&](int comp, const Mono& m) -> int {
        for (int i = 0; i < n; ++i)
            if (A.labels[i].first == comp && A.labels[i].second == m) return i;
        return -1;
    };
    const int nv = M.ring->poly.nvars();
    for (int v = 0; v < nv; ++v) {
        DenseMat<K> act(n, n, k);
        for (int j = 0; j < n; ++j) {
            ModVec<K> e;
            e.set(A.labels[j].first,
                  poly_term(M.ring->poly, A.labels[j].second.mul(Mono::var(v), nv), k.one()));
            ModVec<K> nf = M.nf(e);
            for (auto& p : nf.c)
                for (auto& tm : p.second.t) {
                    int i = find(p.first, tm.first);
                    if (i < 0) throw Error("internal", "normal form escaped the standard basis");
                    act.at(i, j) = tm.second;
                }
        }
        A.var_action.push_back(std::move(act));
    }
    return A;
}

template <class K>
ArtinianModule<K> ring_model(std::shared_ptr<const QuotientRing<K>> ring) {
    return artinian_from_fp(fp_free(ring, {0}));
}

/* Dense coordinates of a module element. */
template <class K>
std::vector<typename K::Elem> dense_coords(const FPModule<K>& M, const ArtinianModule<K>& A,
                                           const ModVec<K>& v) {
    const auto& k = M.ring->poly.field;
    std::vector<typename K::Elem> out(A.dim(), k.zero());
    ModVec<K> nf = M.nf(v);
    for (auto& p : nf.c)
        for (auto& tm : p.second.t) {
            bool found = false;
            for (int i = 0; i < A.dim(); ++i)
                if (A.labels[i].first == p.first && A.labels[i].second == tm.first) {
                    out[i] = k.add(out[i], tm.second);
                    found = true;
                    break;
                }
            if (!found) throw Error("internal", "element coordinate outside the basis");
        }
    return out;
}

/* ---------- dense -> FP (minimal presentation from an action model) ---------- */

template <class K>
FPModule<K> fp_from_artinian(const ArtinianModule<K>& A,
                             std::vector<std::vector<typename K::Elem>>* gen_vectors_out = nullptr) {
    const auto& k = A.field();
    const auto& R = A.ring->poly;
    int n = A.dim();
    if (n == 0) return fp_zero(A.ring);
    // minimal generators: a basis of A / mA, chosen degree by degree
    RowSpace<K> mspan(k, n);
    for (int v = 0; v < R.nvars(); ++v)
        for (int j = 0; j < n; ++j) {
            std::vector<typename K::Elem> colv(n, k.zero());
            for (int i = 0; i < n; ++i) colv[i] = A.var_action[v].at(i, j);
            mspan.insert(std::move(colv));
        }
    std::vector<std::vector<typename K::Elem>> gens;
    std::vector<int> gen_degs;
    {
        RowSpace<K> seen(k, n);
        // seed with mA
        for (int v = 0; v < R.nvars(); ++v)
            for (int j = 0; j < n; ++j) {
                std::vector<typename K::Elem> colv(n, k.zero());
                for (int i = 0; i < n; ++i) colv[i] = A.var_action[v].at(i, j);
                seen.insert(std::move(colv));
            }
        for (auto& [d, idxs] : A.by_degree())
            for (int i : idxs) {
                std::vector<typename K::Elem> e(n, k.zero());
                e[i] = k.one();
                if (seen.insert(e)) {
                    gens.push_back(e);
                    gen_degs.push_back(d);
                }
            }
    }
    if (gen_vectors_out) *gen_vectors_out = gens;
    int s = int(gens.size());
    // relations: kernel of ⊕_j R(-d_j) -> A degree by degree, minimalized
    int top = A.degrees.empty() ? 0 : A.degrees.back();
    int maxw = 1;
    for (int w : R.grading) maxw = std::max(maxw, w);
    int maxgd = 0;
    for (int d : gen_degs) maxgd = std::max(maxgd, d);
    int Dmax = std::max(top, maxgd) + maxw;
    int Dmin = gen_degs.empty() ? 0 : *std::min_element(gen_degs.begin(), gen_degs.end());

    std::vector<ModVec<K>> rels;
    struct FreeBasisElem { int gen; Mono m; };
    // span of R·(previous relations) per degree, in free-module coordinates
    std::vector<std::pair<int, ModVec<K>>> rel_list;  // (degree, relation)
    for (int D = Dmin; D <= Dmax; ++D) {
        // free module slice
        std::vector<FreeBasisElem> fb;
        for (int j = 0; j < s; ++j) {
            int need = D - gen_degs[j];
            if (need < 0) continue;
            for (auto& m : A.ring->standard_monomials(need)) fb.push_back({j, m});
        }
        if (fb.empty()) continue;
        // evaluation matrix slice -> A
        DenseMat<K> eval(n, int(fb.size()), k);
        for (size_t c = 0; c < fb.size(); ++c) {
            auto w = dm_apply(k, A.mono_action_cached(fb[c].m), gens[fb[c].gen]);
            for (int i = 0; i < n; ++i) eval.at(i, c) = w[i];
        }
        auto null_basis = dm_nullspace(k, eval);
        if (null_basis.empty()) continue;
        // span of earlier relations multiplied up to degree D
        RowSpace<K> lower(k, int(fb.size()));
        auto fb_index = [&](int gen, const Mono& m) -> int {
            for (size_t i = 0; i < fb.size(); ++i)
                if (fb[i].gen == gen && fb[i].m == m) return int(i);
            return -1;
        };
        for (auto& [dr, rel] : rel_list) {
            for (auto& m : A.ring->standard_monomials(D - dr)) {
                // m * rel in free coordinates: multiply each entry and re-expand
                std::vector<typename K::Elem> vec(fb.size(), k.zero());
                bool ok = true;
                for (auto& p : rel.c) {
                    Poly<K> prod = A.ring->normal_form(
                        mul(R, p.second, poly_term(R, m, k.one())));
                    for (auto& tm : prod.t) {
                        int idx = fb_index(p.first, tm.first);
                        if (idx < 0) { ok = false; break; }
                        vec[idx] = k.add(vec[idx], tm.second);
                    }
                    if (!ok) break;
                }
                if (ok) lower.insert(std::move(vec));
            }
        }
        for (auto& nb : null_basis) {
            if (lower.contains(nb)) continue;
            lower.insert(nb);
            ModVec<K> rel;
            for (size_t c = 0; c < fb.size(); ++c)
                if (!k.is_zero(nb[c])) {
                    Poly<K> cur = rel.at(fb[c].gen) ? *rel.at(fb[c].gen) : poly_zero<K>();
                    rel.set(fb[c].gen, add(R, cur, poly_term(R, fb[c].m, nb[c])));
                }
            rel_list.push_back({D, rel});
            rels.push_back(std::move(rel));
        }
    }
    FPModule<K> out(A.ring, gen_degs, std::move(rels));
    // consistency: the presentation reproduces the dense dimensions
    auto want = A.dims_by_degree();
    auto got = out.hilbert().finite_dimensions();
    if (got != want) throw Error("internal", "dense presentation Hilbert mismatch");
    return out;
}

/* ---------- graded k-dual ---------- */

template <class K>
ArtinianModule<K> dense_k_dual(const ArtinianModule<K>& A) {
    ArtinianModule<K> D;
    D.ring = A.ring;
    const auto& k = A.field();
    int n = A.dim();
    // dual basis in reverse order so degrees (negated) come out ascending
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
    D.degrees.resize(n);
    for (int i = 0; i < n; ++i) D.degrees[i] = -A.degrees[perm[i]];
    for (int v = 0; v < A.ring->poly.nvars(); ++v) {
        DenseMat<K> act(n, n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) act.at(i, j) = A.var_action[v].at(perm[j], perm[i]);
        D.var_action.push_back(std::move(act));
    }
    return D;
}

template <class K>
FPModule<K> k_dual(const FPModule<K>& M) {
    auto A = artinian_from_fp(M);
    auto D = dense_k_dual(A);
    return fp_from_artinian(D);
}

/* ---------- dense Hom between small modules ---------- */

template <class K>
struct DenseHom {
    // basis of graded Hom: each element is a dim(B) x dim(A) matrix of some
    // homogeneous degree
    std::vector<DenseMat<K>> basis;
    std::vector<int> degrees;

    std::map<int, long long> dims_by_degree() const {
        std::map<int, long long> out;
        for (int d : degrees) ++out[d];
        return out;
    }
};

/* Hom over a subring: k-linear maps commuting with a subset of the variable
 * actions, carried as a module over the full ring via (s·ψ)(a) = ψ(s·a).
 * This is the trivial-extension kit: Hom_R(S, R) for R = k[X,Y]-part. */
template <class K>
ArtinianModule<K> dense_hom_subring(const ArtinianModule<K>& A, const ArtinianModule<K>& B,
                                    const std::vector<int>& subvars);

/* Tensor over a subring: A ⊗_k B modulo (w·a)⊗b - a⊗(w·b) for w in the
 * subring, with the full ring acting through the left factor. */
template <class K>
ArtinianModule<K> dense_tensor_subring(const ArtinianModule<K>& A, const ArtinianModule<K>& B,
                                       const std::vector<int>& subvars);

template <class K>
DenseHom<K> dense_hom(const ArtinianModule<K>& A, const ArtinianModule<K>& B) {
    const auto& k = A.field();
    int na = A.dim(), nb = B.dim();
    DenseHom<K> out;
    if (na == 0 || nb == 0) return out;
    int nv = A.ring->poly.nvars();
    for (int d = B.degrees.front() - A.degrees.back(); d <= B.degrees.back() - A.degrees.front(); ++d) {
        // unknowns: entries phi[i][j] with B-degree(i) == A-degree(j) + d
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j)
                if (B.degrees[i] == A.degrees[j] + d) slots.push_back({i, j});
        if (slots.empty()) continue;
        auto slot_index = [&](int i, int j) -> int {
            for (size_t s = 0; s < slots.size(); ++s)
                if (slots[s].first == i && slots[s].second == j) return int(s);
            return -1;
        };
        // constraints: for each variable v and each (target row r, source col j):
        // Σ_i Bv[r][i] phi[i][j] - Σ_l phi[r][l] Av[l][j] = 0
        std::vector<std::vector<typename K::Elem>> rows;
        for (int v = 0; v < nv; ++v)
            for (int r = 0; r < nb; ++r)
                for (int j = 0; j < na; ++j) {
                    std::vector<typename K::Elem> row(slots.size(), k.zero());
                    bool nonzero = false;
                    for (int i = 0; i < nb; ++i) {
                        if (k.is_zero(B.var_action[v].at(r, i))) continue;
                        int s = slot_index(i, j);
                        if (s >= 0) {
                            row[s] = k.add(row[s], B.var_action[v].at(r, i));
                            nonzero = true;
                        }
                    }
                    for (int l = 0; l < na; ++l) {
                        if (k.is_zero(A.var_action[v].at(l, j))) continue;
                        int s = slot_index(r, l);
                        if (s >= 0) {
                            row[s] = k.sub(row[s], A.var_action[v].at(l, j));
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        DenseMat<K> sys(int(rows.size()), int(slots.size()), k);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < slots.size(); ++j) sys.at(int(i), int(j)) = rows[i][j];
        for (auto& nb_vec : dm_nullspace(k, sys)) {
            DenseMat<K> phi(nb, na, k);
            for (size_t s = 0; s < slots.size(); ++s) phi.at(slots[s].first, slots[s].second) = nb_vec[s];
            out.basis.push_back(std::move(phi));
            out.degrees.push_back(d);
        }
    }
    return out;
}

/* Like dense_hom but only the `subvars` actions are required to commute. */
template <class K>
DenseHom<K> dense_hom_partial(const ArtinianModule<K>& A, const ArtinianModule<K>& B,
                              const std::vector<int>& subvars) {
    const auto& k = A.field();
    int na = A.dim(), nb = B.dim();
    DenseHom<K> out;
    if (na == 0 || nb == 0) return out;
    for (int d = B.degrees.front() - A.degrees.back(); d <= B.degrees.back() - A.degrees.front();
         ++d) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j)
                if (B.degrees[i] == A.degrees[j] + d) slots.push_back({i, j});
        if (slots.empty()) continue;
        auto slot_index = [&](int i, int j) -> int {
            for (size_t s = 0; s < slots.size(); ++s)
                if (slots[s].first == i && slots[s].second == j) return int(s);
            return -1;
        };
        std::vector<std::vector<typename K::Elem>> rows;
        for (int v : subvars)
            for (int r = 0; r < nb; ++r)
                for (int j = 0; j < na; ++j) {
                    std::vector<typename K::Elem> row(slots.size(), k.zero());
                    bool nonzero = false;
                    for (int i = 0; i < nb; ++i) {
                        if (k.is_zero(B.var_action[v].at(r, i))) continue;
                        int s = slot_index(i, j);
                        if (s >= 0) {
                            row[s] = k.add(row[s], B.var_action[v].at(r, i));
                            nonzero = true;
                        }
                    }
                    for (int l = 0; l < na; ++l) {
                        if (k.is_zero(A.var_action[v].at(l, j))) continue;
                        int s = slot_index(r, l);
                        if (s >= 0) {
                            row[s] = k.sub(row[s], A.var_action[v].at(l, j));
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        DenseMat<K> sys(int(rows.size()), int(slots.size()), k);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < slots.size(); ++j) sys.at(int(i), int(j)) = rows[i][j];
        for (auto& nb_vec : dm_nullspace(k, sys)) {
            DenseMat<K> phi(nb, na, k);
            for (size_t s = 0; s < slots.size(); ++s)
                phi.at(slots[s].first, slots[s].second) = nb_vec[s];
            out.basis.push_back(std::move(phi));
            out.degrees.push_back(d);
        }
    }
    return out;
}

template <class K>
ArtinianModule<K> dense_hom_subring(const ArtinianModule<K>& A, const ArtinianModule<K>& B,
                                    const std::vector<int>& subvars) {
    const auto& k = A.field();
    DenseHom<K> H = dense_hom_partial(A, B, subvars);
    // sort basis by degree ascending (stable) for a graded basis
    std::vector<int> order(H.basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return H.degrees[a] < H.degrees[b]; });
    ArtinianModule<K> out;
    out.ring = A.ring;
    std::vector<DenseMat<K>> basis;
    for (int idx : order) {
        out.degrees.push_back(H.degrees[idx]);
        basis.push_back(H.basis[idx]);
    }
    int m = int(basis.size());
    int na = A.dim(), nb = B.dim();
    // flatten basis for coordinate solving
    DenseMat<K> flat(na * nb, m, k);
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j) flat.at(i * na + j, s) = basis[s].at(i, j);
    for (int v = 0; v < A.ring->poly.nvars(); ++v) {
        DenseMat<K> act(m, m, k);
        for (int s = 0; s < m; ++s) {
            // (v·ψ) = ψ ∘ (action of v on A)
            DenseMat<K> comp = dm_mul(k, basis[s], A.var_action[v]);
            std::vector<typename K::Elem> rhs(size_t(na) * nb, k.zero());
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < na; ++j) rhs[size_t(i) * na + j] = comp.at(i, j);
            auto sol = dm_solve(k, flat, rhs);
            if (!sol) throw Error("internal", "subring Hom is not closed under the action");
            for (int t = 0; t < m; ++t) act.at(t, s) = (*sol)[t];
        }
        out.var_action.push_back(std::move(act));
    }
    return out;
}

template <class K>
ArtinianModule<K> dense_tensor_subring(const ArtinianModule<K>& A, const ArtinianModule<K>& B,
                                       const std::vector<int>& subvars) {
    const auto& k = A.field();
    int na = A.dim(), nb = B.dim();
    int N = na * nb;
    auto flat = [&](int i, int j) { return i * nb + j; };
    // balanced relations: (w·a_i)⊗b_j - a_i⊗(w·b_j)
    RowSpace<K> U(k, N);
    for (int w : subvars)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                std::vector<typename K::Elem> rel(N, k.zero());
                for (int r = 0; r < na; ++r)
                    if (!k.is_zero(A.var_action[w].at(r, i)))
                        rel[flat(r, j)] = k.add(rel[flat(r, j)], A.var_action[w].at(r, i));
                for (int r = 0; r < nb; ++r)
                    if (!k.is_zero(B.var_action[w].at(r, j)))
                        rel[flat(i, r)] = k.sub(rel[flat(i, r)], B.var_action[w].at(r, j));
                U.insert(std::move(rel));
            }
    // graded basis of the quotient: pure tensors surviving reduction
    std::vector<std::pair<int, int>> label;  // (i, j) chosen
    std::vector<int> degs;
    {
        std::vector<std::pair<int, std::pair<int, int>>> all;
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                all.push_back({A.degrees[i] + B.degrees[j], {i, j}});
        std::stable_sort(all.begin(), all.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        RowSpace<K> seen = U;
        for (auto& [d, ij] : all) {
            std::vector<typename K::Elem> e(N, k.zero());
            e[flat(ij.first, ij.second)] = k.one();
            if (seen.insert(std::move(e))) {
                label.push_back(ij);
                degs.push_back(d);
            }
        }
    }
    int m = int(label.size());
    // expansion of arbitrary vectors in the chosen basis: reduce mod U, then
    // solve against the basis vectors reduced mod U
    DenseMat<K> basis_mat(N, m, k);
    for (int s = 0; s < m; ++s) {
        std::vector<typename K::Elem> e(N, k.zero());
        e[flat(label[s].first, label[s].second)] = k.one();
        auto r = U.reduce(std::move(e));
        for (int t = 0; t < N; ++t) basis_mat.at(t, s) = r[t];
    }
    ArtinianModule<K> out;
    out.ring = A.ring;
    out.degrees = degs;
    for (int v = 0; v < A.ring->poly.nvars(); ++v) {
        DenseMat<K> act(m, m, k);
        for (int s = 0; s < m; ++s) {
            auto [i, j] = label[s];
            std::vector<typename K::Elem> img(N, k.zero());
            for (int r = 0; r < na; ++r)
                if (!k.is_zero(A.var_action[v].at(r, i)))
                    img[flat(r, j)] = k.add(img[flat(r, j)], A.var_action[v].at(r, i));
            auto red = U.reduce(std::move(img));
            auto sol = dm_solve(k, basis_mat, red);
            if (!sol) throw Error("internal", "tensor action escaped the basis");
            for (int t = 0; t < m; ++t) act.at(t, s) = (*sol)[t];
        }
        out.var_action.push_back(std::move(act));
    }
    return out;
}

}  // namespace gradelink

#endif
