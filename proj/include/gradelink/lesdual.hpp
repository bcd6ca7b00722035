#ifndef GRADELINK_LESDUAL_HPP
#define GRADELINK_LESDUAL_HPP

#include "gradelink/homology.hpp"

namespace gradelink {

/* ---------- chain lifts along a module map ---------- */

/* Lift φ: M -> M' to chain maps f_l: F_l(M) -> F_l(M') for l = 0..levels.
 * f_l is a column list over F_l(M') components, one column per F_l(M) gen. */
template <class K>
std::vector<std::vector<ModVec<K>>> chain_lift(const ModuleMap<K>& phi, int levels) {
    const FPModule<K>& M = phi.source;
    const FPModule<K>& Mp = phi.target;
    const auto& R = M.ring->poly;
    const Resolution<K>& A = get_resolution(M, levels);
    const Resolution<K>& B = get_resolution(Mp, levels);
    std::vector<std::vector<ModVec<K>>> f(levels + 1);
    ModuleMap<K> f0 = compose(B.min.onto, compose(phi, A.min.into));
    f[0] = f0.cols;
    for (int l = 1; l <= levels; ++l) {
        int rA = l < int(A.degs.size()) ? int(A.degs[l].size()) : 0;
        f[l].assign(rA, ModVec<K>{});
        if (rA == 0) continue;
        auto boundary = [&](int c) {
            ModVec<K> v;
            for (auto& p : A.dcols[l - 1][c].c)
                v = mv_add(R, v, mv_mul_poly(R, f[l - 1][p.first], p.second));
            ModVec<K> nf;
            for (auto& p : v.c) {
                Poly<K> q = M.ring->normal_form(p.second);
                if (!q.is_zero()) nf.c.push_back({p.first, q});
            }
            return nf;
        };
        if (l - 1 >= int(B.dcols.size())) {
            for (int c = 0; c < rA; ++c)
                if (!boundary(c).is_zero())
                    throw Error("internal", "chain lift obstruction at ended resolution");
            continue;
        }
        FPModule<K> freeB(Mp.ring, B.degs[l - 1], {});
        auto gb = express_gb(freeB, B.dcols[l - 1]);
        for (int c = 0; c < rA; ++c) {
            auto expr = gb->express(boundary(c));
            if (!expr) throw Error("internal", "chain lift failed: boundary not in image");
            ModVec<K> col;
            for (size_t i = 0; i < B.dcols[l - 1].size(); ++i)
                if (!(*expr)[i].is_zero()) col.set(int(i), (*expr)[i]);
            f[l][c] = std::move(col);
        }
    }
    return f;
}

/* Map on subquotient values induced by a map of ambients (which must send
 * cycles to cycles and boundaries to boundaries). */
template <class K>
ModuleMap<K> induced_subquotient_map(const Subquotient<K>& from, const Subquotient<K>& to,
                                     const ModuleMap<K>& ambient_map) {
    ModuleMap<K> out{from.value, to.value, {}};
    for (int g = 0; g < from.value.ngens(); ++g) {
        ModVec<K> sec = from.section_ambient(g);
        ModVec<K> w = to.ambient.nf(map_apply(ambient_map, sec));
        out.cols.push_back(to.class_of(w));
    }
    if (!map_well_defined(out)) throw Error("internal", "induced subquotient map is ill-defined");
    return out;
}

/* Ext^i(φ, N): the contravariantly induced map Ext^i(M',N) -> Ext^i(M,N). */
template <class K>
struct InducedExt {
    ExtData<K> source_ext;  // Ext^i(M', N)
    ExtData<K> target_ext;  // Ext^i(M, N)
    ModuleMap<K> map;
};

template <class K>
InducedExt<K> ext_induced(const ModuleMap<K>& phi, const FPModule<K>& N, int i) {
    const FPModule<K>& M = phi.source;
    const FPModule<K>& Mp = phi.target;
    auto f = chain_lift(phi, i);
    const Resolution<K>& A = get_resolution(M, i + 1);
    const Resolution<K>& B = get_resolution(Mp, i + 1);
    auto extA = ext_range_from_complex(complex_of(A), N, i, i)[0];
    auto extB = ext_range_from_complex(complex_of(B), N, i, i)[0];
    int rn = N.ngens();
    // ambient map Hom(F_i(M'), N) -> Hom(F_i(M), N), ψ ↦ ψ∘f_i
    ModuleMap<K> amb{extB.sq.ambient, extA.sq.ambient, {}};
    int rB = B.rank(i);
    amb.cols.assign(size_t(rB) * rn, ModVec<K>{});
    for (int rp = 0; rp < rB; ++rp)
        for (int l = 0; l < rn; ++l) {
            ModVec<K> img;
            for (int r = 0; r < A.rank(i); ++r) {
                const Poly<K>* e = f[i][r].at(rp);
                if (e && !e->is_zero()) img.set(r * rn + l, *e);
            }
            amb.cols[size_t(rp) * rn + l] = extA.sq.ambient.nf(img);
        }
    InducedExt<K> out{extB, extA, {}};
    out.map = induced_subquotient_map(extB.sq, extA.sq, amb);
    return out;
}

/* ---------- short exact sequences and the dualized LES ---------- */

template <class K>
struct SESCertificate {
    bool maps_well_defined = false;
    bool injective = false;
    bool surjective = false;
    bool composite_zero = false;
    bool hilbert_additive = false;
    bool ok() const {
        return maps_well_defined && injective && surjective && composite_zero && hilbert_additive;
    }
};

template <class K>
SESCertificate<K> certify_ses(const ModuleMap<K>& f, const ModuleMap<K>& g) {
    SESCertificate<K> c;
    c.maps_well_defined = map_well_defined(f) && map_well_defined(g);
    if (!c.maps_well_defined) return c;
    c.injective = kernel(f).module.is_zero_module();
    c.surjective = cokernel(g).module.is_zero_module();
    c.composite_zero = map_is_zero(compose(g, f));
    c.hilbert_additive = f.source.hilbert().plus(g.target.hilbert()) == f.target.hilbert();
    return c;
}

/* Horseshoe complex for 0 -> M' -f-> M -g-> M'' -> 0: level l is
 * F_l(M') ⊕ F_l(M''), with connecting blocks h[l]: F_{l+1}(M'') -> F_l(M'). */
template <class K>
struct Horseshoe {
    ComplexData<K> complex;
    std::vector<int> a_rank;  // size of the M'-block per level
    std::vector<std::vector<ModVec<K>>> h;
};

template <class K>
Horseshoe<K> horseshoe(const ModuleMap<K>& f, const ModuleMap<K>& g, int length) {
    const FPModule<K>& Mp = f.source;
    const FPModule<K>& M = f.target;
    const FPModule<K>& Mpp = g.target;
    const auto& R = M.ring->poly;
    const Resolution<K>& A = get_resolution(Mp, length);
    const Resolution<K>& C = get_resolution(Mpp, length);
    Horseshoe<K> out;
    std::vector<ModVec<K>> sigma0;  // preimages under g of F_0(M'') generators
    {
        auto gb = express_gb(Mpp, g.cols);
        for (auto& c : C.min.into.cols) {
            auto expr = gb->express(Mpp.nf(c));
            if (!expr) throw Error("not-exact", "g is not surjective");
            ModVec<K> v;
            for (int i = 0; i < M.ngens(); ++i)
                if (!(*expr)[i].is_zero()) v.set(i, (*expr)[i]);
            sigma0.push_back(M.nf(v));
        }
    }
    ModuleMap<K> epsA = compose(f, A.min.into);  // F_0(M') -> M
    std::vector<std::vector<ModVec<K>>> h;
    {
        std::vector<ModVec<K>> h1;
        if (!C.dcols.empty()) {
            auto gb = express_gb(M, epsA.cols);
            for (auto& col : C.dcols[0]) {
                ModVec<K> v;
                for (auto& p : col.c) v = mv_add(R, v, mv_mul_poly(R, sigma0[p.first], p.second));
                auto expr = gb->express(M.nf(v));
                if (!expr) throw Error("not-exact", "horseshoe level-1 lift failed");
                ModVec<K> hc;
                for (size_t i = 0; i < epsA.cols.size(); ++i)
                    if (!(*expr)[i].is_zero())
                        hc.set(int(i), scale(R, (*expr)[i], R.field.neg(R.field.one())));
                h1.push_back(std::move(hc));
            }
        }
        h.push_back(std::move(h1));
    }
    for (int l = 1; l < length; ++l) {
        std::vector<ModVec<K>> hl;
        if (l < int(C.dcols.size())) {
            auto reduce_entries = [&](const ModVec<K>& v) {
                ModVec<K> nf;
                for (auto& p : v.c) {
                    Poly<K> q = M.ring->normal_form(p.second);
                    if (!q.is_zero()) nf.c.push_back({p.first, q});
                }
                return nf;
            };
            if (l - 1 < int(A.dcols.size())) {
                FPModule<K> freeA(Mp.ring, A.degs[l - 1], {});
                auto gb = express_gb(freeA, A.dcols[l - 1]);
                for (auto& col : C.dcols[l]) {
                    ModVec<K> v;
                    for (auto& p : col.c)
                        v = mv_add(R, v, mv_mul_poly(R, h[l - 1][p.first], p.second));
                    auto expr = gb->express(reduce_entries(mv_neg(R, v)));
                    if (!expr) throw Error("not-exact", "horseshoe connecting lift failed");
                    ModVec<K> hc;
                    for (size_t i = 0; i < A.dcols[l - 1].size(); ++i)
                        if (!(*expr)[i].is_zero()) hc.set(int(i), (*expr)[i]);
                    hl.push_back(std::move(hc));
                }
            } else {
                for (auto& col : C.dcols[l]) {
                    ModVec<K> v;
                    for (auto& p : col.c)
                        v = mv_add(R, v, mv_mul_poly(R, h[l - 1][p.first], p.second));
                    if (!reduce_entries(v).is_zero())
                        throw Error("not-exact", "horseshoe obstruction at ended resolution");
                    hl.push_back(ModVec<K>{});
                }
            }
        }
        h.push_back(std::move(hl));
    }
    ComplexData<K> cx;
    auto level_degs = [&](const Resolution<K>& r, int l) -> std::vector<int> {
        return l < int(r.degs.size()) ? r.degs[l] : std::vector<int>{};
    };
    for (int l = 0; l <= length; ++l) {
        std::vector<int> degs = level_degs(A, l);
        auto cdegs = level_degs(C, l);
        degs.insert(degs.end(), cdegs.begin(), cdegs.end());
        out.a_rank.push_back(int(level_degs(A, l).size()));
        cx.degs.push_back(std::move(degs));
    }
    for (int l = 1; l <= length; ++l) {
        int rA_prev = out.a_rank[l - 1];
        std::vector<ModVec<K>> cols;
        if (l - 1 < int(A.dcols.size()))
            for (auto& c : A.dcols[l - 1]) cols.push_back(c);
        if (l - 1 < int(C.dcols.size()))
            for (size_t cc = 0; cc < C.dcols[l - 1].size(); ++cc) {
                ModVec<K> v;
                if (l - 1 < int(h.size()) && cc < h[l - 1].size()) v = h[l - 1][cc];
                for (auto& p : C.dcols[l - 1][cc].c) v.set(p.first + rA_prev, p.second);
                cols.push_back(std::move(v));
            }
        cx.dcols.push_back(std::move(cols));
    }
    out.complex = std::move(cx);
    out.h = std::move(h);
    return out;
}

/* The long exact Ext sequence of 0 -> M' -> M -> M'' -> 0 against N:
 * nodes Ext^0(M'') -> Ext^0(M) -> Ext^0(M') -> Ext^1(M'') -> ... */
template <class K>
struct LongExactSegment {
    std::vector<FPModule<K>> nodes;
    std::vector<std::string> names;
    std::vector<ModuleMap<K>> maps;  // maps[j]: nodes[j] -> nodes[j+1]
    std::vector<bool> exact_at;      // one entry per interior node
    SESCertificate<K> input_cert;

    bool all_exact() const {
        for (bool b : exact_at)
            if (!b) return false;
        return true;
    }
};

template <class K>
LongExactSegment<K> dualize_ses(const ModuleMap<K>& f, const ModuleMap<K>& g,
                                const FPModule<K>& N, int window) {
    LongExactSegment<K> out;
    out.input_cert = certify_ses(f, g);
    if (!out.input_cert.ok()) throw Error("not-exact", "input sequence failed certification");
    const FPModule<K>& Mp = f.source;
    const FPModule<K>& Mpp = g.target;
    int L = window + 2;
    const Resolution<K>& A = get_resolution(Mp, L);
    const Resolution<K>& C = get_resolution(Mpp, L);
    Horseshoe<K> B = horseshoe(f, g, L);
    auto extA = ext_range_from_complex(complex_of(A), N, 0, window);
    auto extC = ext_range_from_complex(complex_of(C), N, 0, window);
    auto extB = ext_range_from_complex(B.complex, N, 0, window);
    int rn = std::max(1, N.ngens());
    const auto& one = N.ring->poly.field.one();
    for (int i = 0; i <= window; ++i) {
        out.nodes.push_back(extC[i].value());
        out.names.push_back("Ext^" + std::to_string(i) + "(M'',N)");
        out.nodes.push_back(extB[i].value());
        out.names.push_back("Ext^" + std::to_string(i) + "(M,N)");
        out.nodes.push_back(extA[i].value());
        out.names.push_back("Ext^" + std::to_string(i) + "(M',N)");
    }
    for (int i = 0; i <= window; ++i) {
        {   // g*: Ext^i(M'') -> Ext^i(M): inclusion of the C-block
            const auto& HC = extC[i].sq.ambient;
            const auto& HB = extB[i].sq.ambient;
            ModuleMap<K> amb{HC, HB, {}};
            int rC = rn == 0 ? 0 : HC.ngens() / rn;
            for (int r = 0; r < rC; ++r)
                for (int l = 0; l < rn; ++l) {
                    ModVec<K> v;
                    v.set((B.a_rank[i] + r) * rn + l, poly_const(N.ring->poly, one));
                    amb.cols.push_back(HB.nf(v));
                }
            out.maps.push_back(induced_subquotient_map(extC[i].sq, extB[i].sq, amb));
        }
        {   // f*: Ext^i(M) -> Ext^i(M'): projection onto the A-block
            const auto& HB = extB[i].sq.ambient;
            const auto& HA = extA[i].sq.ambient;
            ModuleMap<K> amb{HB, HA, {}};
            int rB = rn == 0 ? 0 : HB.ngens() / rn;
            for (int r = 0; r < rB; ++r)
                for (int l = 0; l < rn; ++l) {
                    ModVec<K> v;
                    if (r < B.a_rank[i]) v.set(r * rn + l, poly_const(N.ring->poly, one));
                    amb.cols.push_back(HA.nf(v));
                }
            out.maps.push_back(induced_subquotient_map(extB[i].sq, extA[i].sq, amb));
        }
        if (i < window) {  // ∂: Ext^i(M') -> Ext^{i+1}(M''): ψ ↦ ψ∘h_{i+1}
            const auto& HA = extA[i].sq.ambient;
            const auto& HC1 = extC[i + 1].sq.ambient;
            ModuleMap<K> amb{HA, HC1, {}};
            int rA = rn == 0 ? 0 : HA.ngens() / rn;
            for (int r = 0; r < rA; ++r)
                for (int l = 0; l < rn; ++l) {
                    ModVec<K> v;
                    if (i < int(B.h.size()))
                        for (size_t c = 0; c < B.h[i].size(); ++c) {
                            const Poly<K>* e = B.h[i][c].at(r);
                            if (e && !e->is_zero()) v.set(int(c) * rn + l, *e);
                        }
                    amb.cols.push_back(HC1.nf(v));
                }
            out.maps.push_back(induced_subquotient_map(extA[i].sq, extC[i + 1].sq, amb));
        }
    }
    for (size_t j = 0; j + 1 < out.maps.size(); ++j) {
        bool czero = map_is_zero(compose(out.maps[j + 1], out.maps[j]));
        auto im = image(out.maps[j]);
        auto ker = kernel(out.maps[j + 1]);
        out.exact_at.push_back(czero && im.module.hilbert() == ker.module.hilbert());
    }
    return out;
}

}  // namespace gradelink

#endif
