#ifndef GRADELINK_DENSERES_HPP
#define GRADELINK_DENSERES_HPP

#include "gradelink/artinian.hpp"

namespace gradelink {

/* Minimal free resolution over an Artinian quotient ring computed entirely
 * by per-degree dense kernels: no Buchberger anywhere. This is the oracle
 * side of the engine/oracle agreement checks; it shares only the ring's
 * monomial basis with the Groebner path. */
template <class K>
struct DenseResolution {
    ArtinianModule<K> module;
    std::vector<std::vector<int>> gen_degs;          // levels 0..L
    // diff[i] for i>=1: columns over level-(i-1) generators, poly entries
    std::vector<std::vector<ModVec<K>>> diff;
    std::vector<std::vector<typename K::Elem>> aug;  // level-0 generator images in `module`
    bool complete = false;

    int length() const { return int(gen_degs.size()) - 1; }
};

namespace detail {

/* Basis of the degree-D slice of ⊕_j R(-d_j): pairs (generator, monomial). */
template <class K>
std::vector<std::pair<int, Mono>> free_slice(const QuotientRing<K>& ring,
                                             const std::vector<int>& degs, int D) {
    std::vector<std::pair<int, Mono>> out;
    for (size_t j = 0; j < degs.size(); ++j) {
        int need = D - degs[j];
        if (need < 0) continue;
        for (auto& m : ring.standard_monomials(need)) out.push_back({int(j), m});
    }
    return out;
}

template <class K>
int slice_index(const std::vector<std::pair<int, Mono>>& slice, int gen, const Mono& m) {
    for (size_t i = 0; i < slice.size(); ++i)
        if (slice[i].first == gen && slice[i].second == m) return int(i);
    return -1;
}

/* Expand a polynomial column over free generators into slice coordinates. */
template <class K>
std::vector<typename K::Elem> column_slice_coords(const QuotientRing<K>& ring,
                                                  const ModVec<K>& col, const Mono& mult,
                                                  const std::vector<std::pair<int, Mono>>& slice) {
    const auto& k = ring.poly.field;
    std::vector<typename K::Elem> v(slice.size(), k.zero());
    for (auto& p : col.c) {
        Poly<K> prod = ring.normal_form(mul(ring.poly, p.second, poly_term(ring.poly, mult, k.one())));
        for (auto& tm : prod.t) {
            int idx = slice_index<K>(slice, p.first, tm.first);
            if (idx < 0) throw Error("internal", "slice expansion failed");
            v[idx] = k.add(v[idx], tm.second);
        }
    }
    return v;
}

}  // namespace detail

template <class K>
DenseResolution<K> dense_resolve(const ArtinianModule<K>& M, int length) {
    const auto& ring = *M.ring;
    const auto& k = M.field();
    DenseResolution<K> res;
    res.module = M;
    // level 0: minimal generators of M
    {
        RowSpace<K> seen(k, M.dim());
        for (int v = 0; v < ring.poly.nvars(); ++v)
            for (int j = 0; j < M.dim(); ++j) {
                std::vector<typename K::Elem> colv(M.dim(), k.zero());
                for (int i = 0; i < M.dim(); ++i) colv[i] = M.var_action[v].at(i, j);
                seen.insert(std::move(colv));
            }
        std::vector<int> degs;
        for (auto& [d, idxs] : M.by_degree())
            for (int i : idxs) {
                std::vector<typename K::Elem> e(M.dim(), k.zero());
                e[i] = k.one();
                if (seen.insert(e)) {
                    res.aug.push_back(e);
                    degs.push_back(d);
                }
            }
        res.gen_degs.push_back(degs);
    }
    int topR = -1;
    for (int d = 0; d <= 512; ++d) {
        if (ring.standard_monomials(d).empty()) { topR = d - 1; break; }
    }
    if (topR < 0) throw Error("not-artinian", "dense resolution requires an Artinian ring");
    for (int level = 1; level <= length; ++level) {
        const auto& degs = res.gen_degs[level - 1];
        if (degs.empty()) { res.complete = true; break; }
        int dmin = *std::min_element(degs.begin(), degs.end());
        int dmax = *std::max_element(degs.begin(), degs.end()) + topR;
        std::vector<ModVec<K>> new_cols;
        std::vector<int> new_degs;
        for (int D = dmin; D <= dmax; ++D) {
            auto slice = detail::free_slice(ring, degs, D);
            if (slice.empty()) continue;
            // matrix of d_{level-1} (or the augmentation) on this slice
            std::vector<std::vector<typename K::Elem>> cols;
            if (level == 1) {
                for (auto& [j, m] : slice)
                    cols.push_back(dm_apply(k, M.mono_action_cached(m), res.aug[j]));
            } else {
                const auto& prev_degs = res.gen_degs[level - 2];
                auto tgt_slice = detail::free_slice(ring, prev_degs, D);
                for (auto& [j, m] : slice)
                    cols.push_back(detail::column_slice_coords(ring, res.diff[level - 2][j], m, tgt_slice));
            }
            int rows = cols.empty() ? 0 : int(cols[0].size());
            DenseMat<K> mat(rows, int(slice.size()), k);
            for (size_t c = 0; c < cols.size(); ++c)
                for (int r = 0; r < rows; ++r) mat.at(r, int(c)) = cols[c][r];
            auto nullb = dm_nullspace(k, mat);
            if (nullb.empty()) continue;
            // span of R * (already chosen kernel generators) in this slice
            RowSpace<K> lower(k, int(slice.size()));
            for (size_t g = 0; g < new_cols.size(); ++g) {
                for (auto& m : ring.standard_monomials(D - new_degs[g]))
                    lower.insert(detail::column_slice_coords(ring, new_cols[g], m, slice));
            }
            for (auto& nb : nullb) {
                if (lower.contains(nb)) continue;
                lower.insert(nb);
                ModVec<K> colv;
                for (size_t c = 0; c < slice.size(); ++c)
                    if (!k.is_zero(nb[c])) {
                        Poly<K> cur = colv.at(slice[c].first) ? *colv.at(slice[c].first) : poly_zero<K>();
                        colv.set(slice[c].first, add(ring.poly, cur, poly_term(ring.poly, slice[c].second, nb[c])));
                    }
                new_cols.push_back(std::move(colv));
                new_degs.push_back(D);
            }
        }
        if (new_cols.empty()) {
            res.complete = true;
            res.gen_degs.push_back({});
            res.diff.push_back({});
            break;
        }
        res.diff.push_back(new_cols);
        res.gen_degs.push_back(new_degs);
    }
    return res;
}

/* Ext^i_R(M, N) dimension tables, degree by degree, for i = 0..max_i. */
template <class K>
std::vector<std::map<int, long long>> dense_ext_dims(const ArtinianModule<K>& M,
                                                     const ArtinianModule<K>& N, int max_i) {
    const auto& ring = *M.ring;
    const auto& k = M.field();
    DenseResolution<K> res = dense_resolve(M, max_i + 1);
    std::vector<std::map<int, long long>> out(max_i + 1);
    if (N.dim() == 0 || res.gen_degs[0].empty()) return out;
    int levels = int(res.gen_degs.size());
    // C^i slice at degree D: pairs (gen j of F_i, N-basis index b) with
    // N.degrees[b] == D + deg(gen j)
    auto cochain_dim_slots = [&](int i, int D) {
        std::vector<std::pair<int, int>> slots;
        if (i >= levels) return slots;
        for (size_t j = 0; j < res.gen_degs[i].size(); ++j)
            for (int b = 0; b < N.dim(); ++b)
                if (N.degrees[b] == D + res.gen_degs[i][j]) slots.push_back({int(j), b});
        return slots;
    };
    // induced map C^{i-1} -> C^i (compose with d_i): acts by the entries
    auto delta_matrix = [&](int i, int D) -> DenseMat<K> {
        auto src = cochain_dim_slots(i - 1, D);
        auto tgt = cochain_dim_slots(i, D);
        DenseMat<K> mat(int(tgt.size()), int(src.size()), k);
        if (src.empty() || tgt.empty() || i - 1 >= int(res.diff.size())) return mat;
        const auto& d = res.diff[i - 1];  // columns over level-(i-1) gens, one per level-i gen
        for (size_t s = 0; s < src.size(); ++s) {
            auto [r, b] = src[s];
            // phi sends gen_r to N-basis b; phi∘d_i(gen_c) = entry[r][c] · e_b
            for (size_t cidx = 0; cidx < d.size(); ++cidx) {
                const Poly<K>* entry = d[cidx].at(r);
                if (!entry) continue;
                std::vector<typename K::Elem> eb(N.dim(), k.zero());
                eb[b] = k.one();
                // apply entry
                std::vector<typename K::Elem> img(N.dim(), k.zero());
                for (auto& tm : entry->t) {
                    auto w = dm_apply(k, N.mono_action_cached(tm.first), eb);
                    for (int q = 0; q < N.dim(); ++q)
                        if (!k.is_zero(w[q])) img[q] = k.add(img[q], k.mul(tm.second, w[q]));
                }
                for (size_t t = 0; t < tgt.size(); ++t)
                    if (tgt[t].first == int(cidx) && !k.is_zero(img[tgt[t].second]))
                        mat.at(int(t), int(s)) = k.add(mat.at(int(t), int(s)), img[tgt[t].second]);
            }
        }
        return mat;
    };
    // degree window
    int lo = N.degrees.front(), hi = N.degrees.back();
    int gmin = 0, gmax = 0;
    for (auto& degs : res.gen_degs)
        for (int d : degs) { gmin = std::min(gmin, d); gmax = std::max(gmax, d); }
    for (int i = 0; i <= max_i; ++i) {
        if (i >= levels) break;
        for (int D = lo - gmax; D <= hi - gmin; ++D) {
            auto slots = cochain_dim_slots(i, D);
            if (slots.empty()) continue;
            long long kerdim = (long long)slots.size();
            if (i < int(res.diff.size())) kerdim -= dm_rank(k, delta_matrix(i + 1, D));
            long long imdim = 0;
            if (i >= 1) imdim = dm_rank(k, delta_matrix(i, D));
            long long h = kerdim - imdim;
            if (h != 0) out[i][D] += h;
        }
    }
    return out;
}

/* Tor_i^R(M, N) dimension tables for i = 0..max_i. */
template <class K>
std::vector<std::map<int, long long>> dense_tor_dims(const ArtinianModule<K>& M,
                                                     const ArtinianModule<K>& N, int max_i) {
    const auto& k = M.field();
    DenseResolution<K> res = dense_resolve(M, max_i + 1);
    std::vector<std::map<int, long long>> out(max_i + 1);
    if (N.dim() == 0 || res.gen_degs[0].empty()) return out;
    int levels = int(res.gen_degs.size());
    // D_i slice at degree D: pairs (gen j, N-basis b) with deg(gen)+N.deg(b)==D
    auto chain_slots = [&](int i, int D) {
        std::vector<std::pair<int, int>> slots;
        if (i >= levels) return slots;
        for (size_t j = 0; j < res.gen_degs[i].size(); ++j)
            for (int b = 0; b < N.dim(); ++b)
                if (res.gen_degs[i][j] + N.degrees[b] == D) slots.push_back({int(j), b});
        return slots;
    };
    auto boundary_matrix = [&](int i, int D) -> DenseMat<K> {
        // d_i ⊗ 1 : D_i -> D_{i-1}
        auto src = chain_slots(i, D);
        auto tgt = chain_slots(i - 1, D);
        DenseMat<K> mat(int(tgt.size()), int(src.size()), k);
        if (src.empty() || tgt.empty() || i - 1 >= int(res.diff.size())) return mat;
        const auto& d = res.diff[i - 1];
        for (size_t s = 0; s < src.size(); ++s) {
            auto [c, b] = src[s];
            std::vector<typename K::Elem> eb(N.dim(), k.zero());
            eb[b] = k.one();
            for (auto& p : d[c].c) {
                int r = p.first;
                std::vector<typename K::Elem> img(N.dim(), k.zero());
                for (auto& tm : p.second.t) {
                    auto w = dm_apply(k, N.mono_action_cached(tm.first), eb);
                    for (int q = 0; q < N.dim(); ++q)
                        if (!k.is_zero(w[q])) img[q] = k.add(img[q], k.mul(tm.second, w[q]));
                }
                for (size_t t = 0; t < tgt.size(); ++t)
                    if (tgt[t].first == r && !k.is_zero(img[tgt[t].second]))
                        mat.at(int(t), int(s)) = k.add(mat.at(int(t), int(s)), img[tgt[t].second]);
            }
        }
        return mat;
    };
    int lo = N.degrees.front(), hi = N.degrees.back();
    int gmin = 0, gmax = 0;
    for (auto& degs : res.gen_degs)
        for (int d : degs) { gmin = std::min(gmin, d); gmax = std::max(gmax, d); }
    for (int i = 0; i <= max_i; ++i) {
        if (i >= levels) break;
        for (int D = gmin + lo; D <= gmax + hi; ++D) {
            auto slots = chain_slots(i, D);
            if (slots.empty()) continue;
            long long kerdim;
            if (i == 0) kerdim = (long long)slots.size();
            else kerdim = (long long)slots.size() - dm_rank(k, boundary_matrix(i, D));
            long long imdim = 0;
            if (i + 1 < levels && i < int(res.diff.size()))
                imdim = dm_rank(k, boundary_matrix(i + 1, D));
            long long h = kerdim - imdim;
            if (h != 0) out[i][D] += h;
        }
    }
    return out;
}

template <class K>
long long dense_total(const std::map<int, long long>& dims) {
    long long t = 0;
    for (auto& [d, n] : dims) t += n;
    return t;
}

/* least i with Ext^i(M,N) != 0, searching up to `cap`; -1 if none found */
template <class K>
int dense_grade(const ArtinianModule<K>& M, const ArtinianModule<K>& N, int cap) {
    auto tables = dense_ext_dims(M, N, cap);
    for (int i = 0; i <= cap && i < int(tables.size()); ++i) {
        long long t = 0;
        for (auto& [d, n] : tables[i]) t += n;
        if (t != 0) return i;
    }
    return -1;
}

}  // namespace gradelink

#endif
