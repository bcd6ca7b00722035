#ifndef GRADELINK_HOMOLOGY_HPP
#define GRADELINK_HOMOLOGY_HPP

#include "gradelink/resolution.hpp"

namespace gradelink {

/* A chain of free modules: degs[i] are F_i generator degrees, dcols[i] the
 * columns of d_{i+1}: F_{i+1} -> F_i. Resolutions provide one; the
 * horseshoe construction builds another. */
template <class K>
struct ComplexData {
    std::vector<std::vector<int>> degs;
    std::vector<std::vector<ModVec<K>>> dcols;

    int levels() const { return int(degs.size()); }
    const std::vector<int>& level_degs(int i) const {
        static const std::vector<int> empty;
        return i < levels() ? degs[i] : empty;
    }
    int rank(int i) const { return int(level_degs(i).size()); }
};

template <class K>
ComplexData<K> complex_of(const Resolution<K>& r) {
    return ComplexData<K>{r.degs, r.dcols};
}

/* ---------- subquotients with class/section plumbing ---------- */

template <class K>
struct Subquotient {
    FPModule<K> value;    // minimal presentation of ker/im
    FPModule<K> ambient;  // where classes are represented
    KernelResult<K> ker;
    ModuleMap<K> proj;  // ker.module -> value
    std::shared_ptr<ModuleGB<K>> class_gb;    // [ker.inclusion | ambient.relations]
    std::shared_ptr<ModuleGB<K>> section_gb;  // [proj.cols | value.relations]

    /* class of an ambient vector that lies in the kernel */
    ModVec<K> class_of(const ModVec<K>& v) const {
        auto expr = class_gb->express(v);
        if (!expr) throw Error("internal", "vector is not a cycle");
        const auto& R = value.ring->poly;
        ModVec<K> out;
        for (int i = 0; i < ker.module.ngens(); ++i)
            if (!(*expr)[i].is_zero())
                out = mv_add(R, out, mv_mul_poly(R, proj.cols[i], (*expr)[i]));
        return value.nf(out);
    }

    /* an ambient representative of a value generator */
    ModVec<K> section_ambient(int gen) const {
        auto expr = section_gb->express(mv_unit(gen, value.ring->poly));
        if (!expr) throw Error("internal", "projection is not surjective");
        const auto& R = value.ring->poly;
        ModVec<K> out;
        for (int i = 0; i < ker.module.ngens(); ++i)
            if (!(*expr)[i].is_zero())
                out = mv_add(R, out, mv_mul_poly(R, ker.inclusion.cols[i], (*expr)[i]));
        return ambient.nf(out);
    }
};

template <class K>
std::shared_ptr<ModuleGB<K>> express_gb(const FPModule<K>& space,
                                        const std::vector<ModVec<K>>& primary) {
    std::vector<ModVec<K>> all = primary;
    for (auto& r : space.relations) all.push_back(r);
    auto ring = space.ring;
    auto ideal = ring->groebner().empty() ? nullptr : &ring->groebner();
    return std::make_shared<ModuleGB<K>>(ring->poly, std::max(1, space.ngens()),
                                         space.ngens() ? space.gen_degrees : std::vector<int>{0},
                                         all, ideal, true, ring->degree_cap);
}

/* homology at B of A --din--> B --dout--> C */
template <class K>
Subquotient<K> homology_at(const ModuleMap<K>& din, const ModuleMap<K>& dout) {
    Subquotient<K> H;
    H.ambient = dout.source;
    H.ker = kernel(dout);
    // lift din through the kernel inclusion
    auto lift_gb = express_gb(H.ambient, H.ker.inclusion.cols);
    ModuleMap<K> lifted{din.source, H.ker.module, {}};
    for (auto& c : din.cols) {
        auto expr = lift_gb->express(H.ambient.nf(c));
        if (!expr) throw Error("internal", "boundary is not a cycle");
        ModVec<K> col;
        for (int i = 0; i < H.ker.module.ngens(); ++i)
            if (!(*expr)[i].is_zero()) col.set(i, (*expr)[i]);
        lifted.cols.push_back(H.ker.module.nf(col));
    }
    auto cok = cokernel(lifted);
    H.value = cok.module;
    H.proj = cok.projection;
    H.class_gb = lift_gb;
    H.section_gb = express_gb(H.value, H.proj.cols);
    return H;
}

/* ---------- Ext ---------- */

/* Hom(F_i, N) as a raw direct sum ⊕_j N(shift by F_i gen degree j):
 * flat component (j, l) = j * N.ngens() + l. */
template <class K>
FPModule<K> cochain_module(const FPModule<K>& N, const std::vector<int>& fdegs) {
    int rn = N.ngens();
    std::vector<int> degs(fdegs.size() * rn);
    for (size_t j = 0; j < fdegs.size(); ++j)
        for (int l = 0; l < rn; ++l) degs[j * rn + l] = N.gen_degrees[l] - fdegs[j];
    std::vector<ModVec<K>> rels;
    for (size_t j = 0; j < fdegs.size(); ++j)
        for (auto& c : N.relations) {
            ModVec<K> v;
            for (auto& p : c.c) v.c.push_back({int(j) * rn + p.first, p.second});
            rels.push_back(std::move(v));
        }
    return FPModule<K>(N.ring, std::move(degs), std::move(rels));
}

/* δ: Hom(F_{i-1},N) -> Hom(F_i,N), ψ ↦ ψ∘d_i. */
template <class K>
ModuleMap<K> delta_map(const ComplexData<K>& cx, const FPModule<K>& N, int i,
                       const FPModule<K>& Hprev, const FPModule<K>& Hcur) {
    const auto& R = N.ring->poly;
    int rn = N.ngens();
    ModuleMap<K> d{Hprev, Hcur, {}};
    int rprev = cx.rank(i - 1);
    d.cols.assign(size_t(rprev) * rn, ModVec<K>{});
    if (i - 1 >= int(cx.dcols.size())) return d;  // zero differential
    const auto& cols = cx.dcols[i - 1];
    for (int r = 0; r < rprev; ++r)
        for (int l = 0; l < rn; ++l) {
            ModVec<K> img;
            for (size_t c = 0; c < cols.size(); ++c) {
                const Poly<K>* e = cols[c].at(r);
                if (e) img.set(int(c) * rn + l, *e);
            }
            d.cols[size_t(r) * rn + l] = Hcur.nf(img);
        }
    return d;
}

template <class K>
struct ExtData {
    int index = 0;
    Subquotient<K> sq;
    const FPModule<K>& value() const { return sq.value; }
};

/* Ext^i(M_cx, N) for i = lo..hi off an explicit complex. */
template <class K>
std::vector<ExtData<K>> ext_range_from_complex(const ComplexData<K>& cx, const FPModule<K>& N,
                                               int lo, int hi) {
    std::vector<ExtData<K>> out;
    std::vector<FPModule<K>> H(hi + 2);
    for (int i = 0; i <= hi + 1; ++i) H[i] = cochain_module(N, cx.level_degs(i));
    for (int i = lo; i <= hi; ++i) {
        ModuleMap<K> din = (i == 0) ? zero_map(fp_zero(N.ring), H[0])
                                    : delta_map(cx, N, i, H[i - 1], H[i]);
        ModuleMap<K> dout = delta_map(cx, N, i + 1, H[i], H[i + 1]);
        ExtData<K> e;
        e.index = i;
        e.sq = homology_at(din, dout);
        out.push_back(std::move(e));
    }
    return out;
}

template <class K>
std::vector<ExtData<K>> ext_range(const FPModule<K>& M, const FPModule<K>& N, int lo, int hi) {
    const Resolution<K>& r = get_resolution(M, hi + 1);
    return ext_range_from_complex(complex_of(r), N, lo, hi);
}

template <class K>
FPModule<K> ext_module(const FPModule<K>& M, const FPModule<K>& N, int i) {
    auto v = ext_range(M, N, i, i);
    return v[0].value();
}

/* ---------- Tor ---------- */

/* F_i ⊗ N with flat component (j, l). */
template <class K>
FPModule<K> chain_tensor_module(const FPModule<K>& N, const std::vector<int>& fdegs) {
    int rn = N.ngens();
    std::vector<int> degs(fdegs.size() * rn);
    for (size_t j = 0; j < fdegs.size(); ++j)
        for (int l = 0; l < rn; ++l) degs[j * rn + l] = N.gen_degrees[l] + fdegs[j];
    std::vector<ModVec<K>> rels;
    for (size_t j = 0; j < fdegs.size(); ++j)
        for (auto& c : N.relations) {
            ModVec<K> v;
            for (auto& p : c.c) v.c.push_back({int(j) * rn + p.first, p.second});
            rels.push_back(std::move(v));
        }
    return FPModule<K>(N.ring, std::move(degs), std::move(rels));
}

/* ∂ ⊗ 1 : F_i ⊗ N -> F_{i-1} ⊗ N. */
template <class K>
ModuleMap<K> boundary_map(const ComplexData<K>& cx, const FPModule<K>& N, int i,
                          const FPModule<K>& Tcur, const FPModule<K>& Tprev) {
    int rn = N.ngens();
    ModuleMap<K> d{Tcur, Tprev, {}};
    int rcur = cx.rank(i);
    d.cols.assign(size_t(rcur) * rn, ModVec<K>{});
    if (i - 1 >= int(cx.dcols.size()) || i == 0) return d;
    const auto& cols = cx.dcols[i - 1];
    for (int c = 0; c < rcur; ++c)
        for (int l = 0; l < rn; ++l) {
            ModVec<K> img;
            for (auto& p : cols[c].c) img.set(p.first * rn + l, p.second);
            d.cols[size_t(c) * rn + l] = Tprev.nf(img);
        }
    return d;
}

template <class K>
FPModule<K> tor_module(const FPModule<K>& M, const FPModule<K>& N, int i) {
    const Resolution<K>& r = get_resolution(M, i + 1);
    ComplexData<K> cx = complex_of(r);
    std::vector<FPModule<K>> T(i + 2);
    for (int l = 0; l <= i + 1; ++l) T[l] = chain_tensor_module(N, cx.level_degs(l));
    ModuleMap<K> din = boundary_map(cx, N, i + 1, T[i + 1], T[i]);
    ModuleMap<K> dout = (i == 0) ? zero_map(T[0], fp_zero(N.ring))
                                 : boundary_map(cx, N, i, T[i], T[i - 1]);
    return homology_at(din, dout).value;
}

/* ---------- grade / alpha / depth ---------- */

template <class K>
struct GradeResult {
    int value = -1;
    bool found = false;
};

template <class K>
GradeResult<K> grade(const FPModule<K>& M, const FPModule<K>& N, int cap) {
    if (M.is_zero_module()) throw Error("undefined", "grade of the zero module");
    for (int i = 0; i <= cap; ++i) {
        if (!ext_module(M, N, i).is_zero_module()) return {i, true};
    }
    return {-1, false};
}

template <class K>
struct AlphaResult {
    int value = -1;   // last nonvanishing index ≤ bound
    bool verified = true;  // false when Ext^bound ≠ 0 (sup may exceed bound)
};

template <class K>
AlphaResult<K> alpha(const FPModule<K>& M, const FPModule<K>& N, int bound) {
    AlphaResult<K> out;
    auto exts = ext_range(M, N, 0, bound);
    for (auto& e : exts)
        if (!e.value().is_zero_module()) out.value = e.index;
    out.verified = exts.empty() || exts.back().value().is_zero_module();
    return out;
}

template <class K>
FPModule<K> residue_field_module(std::shared_ptr<const QuotientRing<K>> ring) {
    std::vector<Poly<K>> vars;
    for (int i = 0; i < ring->poly.nvars(); ++i) vars.push_back(poly_var(ring->poly, i));
    return fp_cyclic(ring, vars);
}

template <class K>
int depth(const FPModule<K>& M) {
    if (M.is_zero_module()) throw Error("undefined", "depth of the zero module");
    auto k = residue_field_module(M.ring);
    auto g = grade(k, M, M.ring->poly.nvars() + 1);
    if (!g.found) throw Error("internal", "depth exceeded the variable count");
    return g.value;
}

}  // namespace gradelink

#endif
