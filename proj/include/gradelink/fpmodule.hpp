#ifndef GRADELINK_FPMODULE_HPP
#define GRADELINK_FPMODULE_HPP

#include <memory>

#include "gradelink/hilbert.hpp"
#include "gradelink/ring.hpp"

namespace gradelink {

/* Finitely presented graded module over a QuotientRing: cokernel of the
 * relation columns inside the free module on `gen_degrees`. Values are
 * immutable after construction; the presentation Groebner basis and Hilbert
 * series are computed once and shared by copies. */
template <class K>
class FPModule {
  public:
    std::shared_ptr<const QuotientRing<K>> ring;
    std::vector<int> gen_degrees;
    std::vector<ModVec<K>> relations;  // columns, entries normal-formed

    FPModule() = default;
    FPModule(std::shared_ptr<const QuotientRing<K>> rg, std::vector<int> degs,
             std::vector<ModVec<K>> rels)
        : ring(std::move(rg)), gen_degrees(std::move(degs)) {
        relations.reserve(rels.size());
        for (auto& c : rels) {
            ModVec<K> v;
            for (auto& p : c.c) {
                Poly<K> q = ring->normal_form(p.second);
                if (!q.is_zero()) v.c.push_back({p.first, std::move(q)});
            }
            if (!v.is_zero()) relations.push_back(std::move(v));
        }
        for (auto& c : relations)
            if (!mv_homogeneous_degree(ring->poly, c, gen_degrees))
                throw Error("inhomogeneous", "relation column is not homogeneous");
    }

    int ngens() const { return int(gen_degrees.size()); }

    /* Groebner basis of relations + I·F, for normal forms in the module. */
    const ModuleGB<K>& gb() const {
        if (!gb_) {
            auto ideal = ring->groebner().empty() ? nullptr : &ring->groebner();
            gb_ = std::make_shared<ModuleGB<K>>(ring->poly, std::max(1, ngens()), padded_degrees(),
                                                relations, ideal, false, ring->degree_cap);
        }
        return *gb_;
    }

    ModVec<K> nf(const ModVec<K>& v) const { return gb().nf(v); }
    bool elem_is_zero(const ModVec<K>& v) const { return nf(v).is_zero(); }

    bool is_zero_module() const {
        for (int i = 0; i < ngens(); ++i)
            if (!elem_is_zero(mv_unit(i, ring->poly))) return false;
        return true;
    }

    const HilbertSeries& hilbert() const {
        if (!hs_) {
            std::vector<std::vector<Mono>> leads(std::max(1, ngens()));
            for (auto& b : gb().basis()) leads[b.lcomp].push_back(b.lmono);
            for (auto& g : ring->groebner())
                for (int r = 0; r < std::max(1, ngens()); ++r) leads[r].push_back(g.lead_mono());
            auto shifts = padded_degrees();
            if (ngens() == 0) {
                HilbertSeries z;
                z.weights = ring->poly.grading;
                hs_ = std::make_shared<HilbertSeries>(std::move(z));
            } else {
                hs_ = std::make_shared<HilbertSeries>(hilbert_of_lead_module(
                    leads, shifts, ring->poly.grading, ring->poly.nvars()));
            }
        }
        return *hs_;
    }

    long long dim_in_degree(int d) const { return hilbert().coefficient(d); }

    /* k-basis of the degree-d graded piece as module elements. */
    std::vector<ModVec<K>> basis_in_degree(int d) const {
        std::vector<ModVec<K>> out;
        const int n = ring->poly.nvars();
        for (int i = 0; i < ngens(); ++i) {
            int need = d - gen_degrees[i];
            if (need < 0) continue;
            for (auto& m : ring->standard_monomials(need)) {
                ModVec<K> v;
                v.set(i, poly_term(ring->poly, m, ring->poly.field.one()));
                ModVec<K> r = nf(v);
                // standard monomials of F/(lead module): keep those not reducible
                if (!r.is_zero() && mv_eq(ring->poly, r, v)) out.push_back(std::move(v));
                (void)n;
            }
        }
        return out;
    }

    /* Opaque per-value cache slot shared by copies (resolutions attach here;
     * concurrent readers are safe once a value is published). */
    mutable std::shared_ptr<void> aux_cache;

  private:
    mutable std::shared_ptr<ModuleGB<K>> gb_;
    mutable std::shared_ptr<HilbertSeries> hs_;

    std::vector<int> padded_degrees() const {
        if (ngens() > 0) return gen_degrees;
        return {0};
    }
};

/* Degree-0 homogeneous map given on generators: column j is the image of
 * source generator j, as a vector over the target's generators. */
template <class K>
struct ModuleMap {
    FPModule<K> source, target;
    std::vector<ModVec<K>> cols;

    const QuotientRing<K>& ring() const { return *source.ring; }
};

/* ---------- constructors ---------- */

template <class K>
FPModule<K> fp_free(std::shared_ptr<const QuotientRing<K>> ring, std::vector<int> degrees) {
    return FPModule<K>(std::move(ring), std::move(degrees), {});
}

template <class K>
FPModule<K> fp_zero(std::shared_ptr<const QuotientRing<K>> ring) {
    return FPModule<K>(std::move(ring), {}, {});
}

/* Cyclic module R/ideal. */
template <class K>
FPModule<K> fp_cyclic(std::shared_ptr<const QuotientRing<K>> ring, const std::vector<Poly<K>>& ideal) {
    std::vector<ModVec<K>> rels;
    for (auto& f : ideal) {
        ModVec<K> v;
        v.set(0, f);
        if (!v.is_zero()) rels.push_back(std::move(v));
    }
    return FPModule<K>(std::move(ring), {0}, std::move(rels));
}

template <class K>
ModuleMap<K> identity_map(const FPModule<K>& M) {
    ModuleMap<K> f{M, M, {}};
    for (int i = 0; i < M.ngens(); ++i) f.cols.push_back(mv_unit(i, M.ring->poly));
    return f;
}

template <class K>
ModuleMap<K> zero_map(const FPModule<K>& src, const FPModule<K>& tgt) {
    ModuleMap<K> f{src, tgt, {}};
    f.cols.assign(src.ngens(), ModVec<K>{});
    return f;
}

/* ---------- map utilities ---------- */

template <class K>
bool map_well_defined(const ModuleMap<K>& f) {
    const auto& R = f.source.ring->poly;
    if (int(f.cols.size()) != f.source.ngens()) return false;
    for (int j = 0; j < f.source.ngens(); ++j) {
        auto d = mv_homogeneous_degree(R, f.cols[j], f.target.gen_degrees);
        if (!d) return false;
        if (!f.cols[j].is_zero() && *d != f.source.gen_degrees[j]) return false;
    }
    for (auto& rel : f.source.relations) {
        ModVec<K> img;
        for (auto& p : rel.c) img = mv_axpy(R, img, R.field.one(), Mono::unit(),
                                            mv_mul_poly(R, f.cols[p.first], p.second));
        if (!f.target.elem_is_zero(img)) return false;
    }
    return true;
}

template <class K>
ModVec<K> map_apply(const ModuleMap<K>& f, const ModVec<K>& v) {
    const auto& R = f.source.ring->poly;
    ModVec<K> img;
    for (auto& p : v.c)
        img = mv_add(R, img, mv_mul_poly(R, f.cols[p.first], p.second));
    return img;
}

template <class K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f) {
    // g ∘ f
    ModuleMap<K> h{f.source, g.target, {}};
    h.cols.reserve(f.cols.size());
    for (auto& c : f.cols) h.cols.push_back(g.target.nf(map_apply(g, c)));
    return h;
}

template <class K>
bool maps_equal(const ModuleMap<K>& f, const ModuleMap<K>& g) {
    if (f.cols.size() != g.cols.size()) return false;
    const auto& R = f.source.ring->poly;
    for (size_t j = 0; j < f.cols.size(); ++j) {
        ModVec<K> d = mv_add(R, f.cols[j], mv_neg(R, g.cols[j]));
        if (!f.target.elem_is_zero(d)) return false;
    }
    return true;
}

template <class K>
bool map_is_zero(const ModuleMap<K>& f) {
    for (auto& c : f.cols)
        if (!f.target.elem_is_zero(c)) return false;
    return true;
}

/* multiplication by a homogeneous f: M(-deg f) -> M */
template <class K>
ModuleMap<K> mult_map(const FPModule<K>& M, const Poly<K>& f) {
    auto d = homogeneous_degree(M.ring->poly, f);
    if (!d) throw Error("inhomogeneous", "multiplier not homogeneous");
    std::vector<int> degs = M.gen_degrees;
    for (auto& a : degs) a += *d;
    FPModule<K> shifted(M.ring, degs, M.relations);
    ModuleMap<K> mm{shifted, M, {}};
    for (int i = 0; i < M.ngens(); ++i) {
        ModVec<K> v;
        Poly<K> q = M.ring->normal_form(f);
        if (!q.is_zero()) v.set(i, q);
        mm.cols.push_back(M.nf(v));
    }
    return mm;
}

/* ---------- syzygies over the quotient ring ---------- */

template <class K>
std::vector<ModVec<K>> syzygies_over_ring(const QuotientRing<K>& ring, int ncomps,
                                          const std::vector<int>& shifts,
                                          const std::vector<ModVec<K>>& cols) {
    if (cols.empty()) return {};
    auto ideal = ring.groebner().empty() ? nullptr : &ring.groebner();
    ModuleGB<K> gb(ring.poly, std::max(1, ncomps), shifts.empty() ? std::vector<int>{0} : shifts,
                   cols, ideal, true, ring.degree_cap);
    if (gb.truncated())
        throw Error("degree-cap", "syzygy computation hit the degree cap");
    return gb.syzygies();
}

/* Minimal generator selection for graded submodules: process candidates in
 * weakly increasing degree, keep those outside the span of earlier keeps
 * (plus an optional base submodule). Returns indices kept. */
template <class K>
std::vector<int> minimal_generator_filter(const QuotientRing<K>& ring, int ncomps,
                                          const std::vector<int>& shifts,
                                          const std::vector<ModVec<K>>& base,
                                          const std::vector<ModVec<K>>& candidates) {
    auto ideal = ring.groebner().empty() ? nullptr : &ring.groebner();
    std::vector<int> order(candidates.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::vector<int> degs(candidates.size(), 0);
    for (size_t i = 0; i < candidates.size(); ++i) {
        auto d = mv_homogeneous_degree(ring.poly, candidates[i], shifts);
        if (!d) throw Error("inhomogeneous", "candidate generator not homogeneous");
        degs[i] = *d;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degs[a] < degs[b]; });
    ModuleGB<K> gb(ring.poly, std::max(1, ncomps), shifts.empty() ? std::vector<int>{0} : shifts,
                   base, ideal, false, ring.degree_cap);
    std::vector<int> kept;
    for (int idx : order) {
        if (candidates[idx].is_zero()) continue;
        if (!gb.nf(candidates[idx]).is_zero()) {
            kept.push_back(idx);
            gb.add_generator(candidates[idx]);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/* ---------- minimal presentations ---------- */

template <class K>
struct MinimalPresentation {
    FPModule<K> module;
    ModuleMap<K> onto;  // original -> minimal, an isomorphism given by substitution
    ModuleMap<K> into;  // minimal -> original (generator inclusion)
};

template <class K>
MinimalPresentation<K> minimal_presentation(const FPModule<K>& M) {
    const auto& R = M.ring->poly;
    int r0 = M.ngens();
    std::vector<int> degs = M.gen_degrees;
    // relation matrix as rows-of-map: A[i] over columns
    std::vector<ModVec<K>> cols = M.relations;
    std::vector<bool> gen_alive(r0, true), col_alive(cols.size(), true);
    // proj[i] = expression of original generator i in surviving generators
    std::vector<ModVec<K>> proj(r0);
    for (int i = 0; i < r0; ++i) proj[i] = mv_unit(i, R);

    auto entry = [&](int c, int i) -> Poly<K> {
        const Poly<K>* p = cols[c].at(i);
        return p ? *p : poly_zero<K>();
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c < cols.size() && !changed; ++c) {
            if (!col_alive[c]) continue;
            for (auto& p : cols[c].c) {
                int i = p.first;
                if (!gen_alive[i]) continue;
                const Poly<K>& u = p.second;
                if (u.t.size() == 1 && u.lead_mono().is_unit(R.nvars())) {
                    // unit entry: generator i is redundant via column c
                    auto uinv = R.field.inv(u.lead_coeff());
                    // substitution: e_i = -(1/u) Σ_{j≠i} A[j][c] e_j
                    ModVec<K> subst;
                    for (auto& q : cols[c].c) {
                        if (q.first == i) continue;
                        Poly<K> t = scale(R, q.second, R.field.neg(uinv));
                        if (!t.is_zero()) subst.c.push_back({q.first, std::move(t)});
                    }
                    // update other columns: col' = col - (A[i][col]/u)·col_c,
                    // equivalently substitute e_i
                    for (size_t c2 = 0; c2 < cols.size(); ++c2) {
                        if (c2 == c || !col_alive[c2]) continue;
                        Poly<K> a = entry(int(c2), i);
                        if (a.is_zero()) continue;
                        Poly<K> factor = scale(R, a, R.field.neg(uinv));
                        cols[c2] = mv_add(R, cols[c2], mv_mul_poly(R, cols[c], factor));
                    }
                    // rewrite projections through the substitution
                    for (int g = 0; g < r0; ++g) {
                        const Poly<K>* coef = proj[g].at(i);
                        if (!coef) continue;
                        Poly<K> a = *coef;
                        ModVec<K> without;
                        for (auto& q : proj[g].c)
                            if (q.first != i) without.c.push_back(q);
                        proj[g] = mv_add(R, without, mv_mul_poly(R, subst, a));
                    }
                    gen_alive[i] = false;
                    col_alive[c] = false;
                    changed = true;
                    break;
                }
            }
        }
    }

    // reindex surviving generators
    std::vector<int> new_index(r0, -1);
    std::vector<int> new_degs;
    for (int i = 0; i < r0; ++i)
        if (gen_alive[i]) {
            new_index[i] = int(new_degs.size());
            new_degs.push_back(degs[i]);
        }
    auto reindex = [&](const ModVec<K>& v) {
        ModVec<K> out;
        for (auto& p : v.c) {
            if (new_index[p.first] < 0) throw Error("internal", "dead generator survived");
            out.c.push_back({new_index[p.first], p.second});
        }
        std::sort(out.c.begin(), out.c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };
    std::vector<ModVec<K>> live_cols;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (!col_alive[c]) continue;
        ModVec<K> v;
        for (auto& p : cols[c].c) {
            if (!gen_alive[p.first]) throw Error("internal", "column touches dead generator");
            Poly<K> q = M.ring->normal_form(p.second);
            if (!q.is_zero()) v.c.push_back({p.first, std::move(q)});
        }
        if (!v.is_zero()) live_cols.push_back(reindex(v));
    }
    // minimalize the relation columns themselves
    std::vector<int> kept = minimal_generator_filter(*M.ring, int(new_degs.size()),
                                                     new_degs.empty() ? std::vector<int>{0} : new_degs,
                                                     {}, live_cols);
    std::vector<ModVec<K>> min_cols;
    for (int idx : kept) min_cols.push_back(live_cols[idx]);

    FPModule<K> out(M.ring, new_degs, std::move(min_cols));
    ModuleMap<K> onto{M, out, {}};
    for (int i = 0; i < r0; ++i) onto.cols.push_back(out.nf(reindex(proj[i])));
    ModuleMap<K> into{out, M, {}};
    for (int i = 0; i < r0; ++i)
        if (gen_alive[i]) into.cols.push_back(mv_unit(i, R));
    return {std::move(out), std::move(onto), std::move(into)};
}

template <class K>
int minimal_generator_count(const FPModule<K>& M) {
    return minimal_presentation(M).module.ngens();
}

/* ---------- kernel / image / cokernel / sums ---------- */

template <class K>
struct SubmoduleResult {
    FPModule<K> module;
    ModuleMap<K> inclusion;  // module -> ambient
};

/* Present the subquotient (span(gens)+span(ambient_rels))/span(ambient_rels)
 * of the free module with shifts `amb_shifts`. */
template <class K>
SubmoduleResult<K> present_subquotient(const std::shared_ptr<const QuotientRing<K>>& ring,
                                       const FPModule<K>& ambient,
                                       const std::vector<ModVec<K>>& gens) {
    const auto& R = ring->poly;
    std::vector<int> kept = minimal_generator_filter(*ring, std::max(1, ambient.ngens()),
                                                     ambient.ngens() ? ambient.gen_degrees : std::vector<int>{0},
                                                     ambient.relations, gens);
    std::vector<ModVec<K>> sub_gens;
    std::vector<int> sub_degs;
    for (int idx : kept) {
        sub_gens.push_back(ambient.nf(gens[idx]));
        auto d = mv_homogeneous_degree(R, gens[idx], ambient.gen_degrees);
        sub_degs.push_back(*d);
    }
    // relations: syzygies of [sub_gens | ambient relations], first block
    std::vector<ModVec<K>> all = sub_gens;
    for (auto& r : ambient.relations) all.push_back(r);
    std::vector<ModVec<K>> syz = syzygies_over_ring(*ring, std::max(1, ambient.ngens()),
                                                    ambient.ngens() ? ambient.gen_degrees : std::vector<int>{0}, all);
    std::vector<ModVec<K>> rels;
    int s = int(sub_gens.size());
    for (auto& z : syz) {
        ModVec<K> first;
        for (auto& p : z.c)
            if (p.first < s) first.c.push_back(p);
        if (!first.is_zero()) rels.push_back(std::move(first));
    }
    FPModule<K> sub(ring, sub_degs, std::move(rels));
    auto min = minimal_presentation(sub);
    ModuleMap<K> incl{min.module, ambient, {}};
    for (auto& c : min.into.cols) {
        // min generator -> sub generator combination -> ambient vector
        ModVec<K> v;
        for (auto& p : c.c) v = mv_add(R, v, mv_mul_poly(R, sub_gens[p.first], p.second));
        incl.cols.push_back(v);
    }
    return {min.module, std::move(incl)};
}

template <class K>
SubmoduleResult<K> image(const ModuleMap<K>& f) {
    return present_subquotient(f.source.ring, f.target, f.cols);
}

template <class K>
struct CokernelResult {
    FPModule<K> module;
    ModuleMap<K> projection;  // target -> module
};

template <class K>
CokernelResult<K> cokernel(const ModuleMap<K>& f) {
    std::vector<ModVec<K>> rels = f.target.relations;
    for (auto& c : f.cols)
        if (!c.is_zero()) rels.push_back(c);
    FPModule<K> raw(f.target.ring, f.target.gen_degrees, std::move(rels));
    auto min = minimal_presentation(raw);
    ModuleMap<K> proj{f.target, min.module, min.onto.cols};
    return {min.module, std::move(proj)};
}

template <class K>
struct KernelResult {
    FPModule<K> module;
    ModuleMap<K> inclusion;  // module -> source of f
};

template <class K>
KernelResult<K> kernel(const ModuleMap<K>& f) {
    const auto& R = f.source.ring->poly;
    // syzygies of [f.cols | target relations]; first-block coordinates are
    // the vectors u over source generators with f(u) ∈ span(target rels)
    std::vector<ModVec<K>> all = f.cols;
    for (auto& r : f.target.relations) all.push_back(r);
    // guard: zero columns of f must still be present as unit syzygies; the
    // engine handles them (zero generators reduce instantly, giving e_i)
    std::vector<ModVec<K>> syz = syzygies_over_ring(*f.source.ring, std::max(1, f.target.ngens()),
                                                    f.target.ngens() ? f.target.gen_degrees
                                                                     : std::vector<int>{0},
                                                    all);
    int s = f.source.ngens();
    std::vector<ModVec<K>> pre;
    for (auto& z : syz) {
        ModVec<K> first;
        for (auto& p : z.c)
            if (p.first < s) first.c.push_back(p);
        if (!first.is_zero()) pre.push_back(std::move(first));
    }
    auto sub = present_subquotient(f.source.ring, f.source, pre);
    return {sub.module, sub.inclusion};
}

template <class K>
FPModule<K> direct_sum(const FPModule<K>& A, const FPModule<K>& B) {
    const auto& R = A.ring->poly;
    std::vector<int> degs = A.gen_degrees;
    degs.insert(degs.end(), B.gen_degrees.begin(), B.gen_degrees.end());
    std::vector<ModVec<K>> rels = A.relations;
    for (auto& c : B.relations) {
        ModVec<K> v;
        for (auto& p : c.c) v.c.push_back({p.first + A.ngens(), p.second});
        rels.push_back(std::move(v));
    }
    (void)R;
    return FPModule<K>(A.ring, std::move(degs), std::move(rels));
}

template <class K>
FPModule<K> twist(const FPModule<K>& M, int d) {
    // M(d): generator of degree a sits in degree a - d
    std::vector<int> degs = M.gen_degrees;
    for (auto& a : degs) a -= d;
    return FPModule<K>(M.ring, std::move(degs), M.relations);
}

/* ---------- tensor and Hom ---------- */

template <class K>
struct TensorResult {
    FPModule<K> module;
    // class of e_i ⊗ e_j in the minimal presentation
    std::vector<std::vector<ModVec<K>>> pure;
};

template <class K>
TensorResult<K> tensor(const FPModule<K>& M, const FPModule<K>& N) {
    const auto& R = M.ring->poly;
    int rm = M.ngens(), rn = N.ngens();
    auto flat = [&](int i, int j) { return i * rn + j; };
    std::vector<int> degs(rm * rn, 0);
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) degs[flat(i, j)] = M.gen_degrees[i] + N.gen_degrees[j];
    std::vector<ModVec<K>> rels;
    for (auto& c : M.relations)
        for (int j = 0; j < rn; ++j) {
            ModVec<K> v;
            for (auto& p : c.c) v.c.push_back({flat(p.first, j), p.second});
            std::sort(v.c.begin(), v.c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rels.push_back(std::move(v));
        }
    for (auto& c : N.relations)
        for (int i = 0; i < rm; ++i) {
            ModVec<K> v;
            for (auto& p : c.c) v.c.push_back({flat(i, p.first), p.second});
            std::sort(v.c.begin(), v.c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rels.push_back(std::move(v));
        }
    FPModule<K> raw(M.ring, std::move(degs), std::move(rels));
    auto min = minimal_presentation(raw);
    TensorResult<K> out;
    out.module = min.module;
    out.pure.assign(rm, std::vector<ModVec<K>>(rn));
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) out.pure[i][j] = min.onto.cols[flat(i, j)];
    (void)R;
    return out;
}

template <class K>
struct HomResult {
    FPModule<K> module;           // Hom_R(M, N)
    FPModule<K> ambient;          // ⊕_i N(a_i) where a_i = deg of M-gen i
    ModuleMap<K> inclusion;       // module -> ambient
    int m_gens, n_gens;

    /* The homomorphism M -> N represented by an ambient vector. */
    ModuleMap<K> to_map(const FPModule<K>& M, const FPModule<K>& N, const ModVec<K>& amb) const {
        ModuleMap<K> f{M, N, {}};
        f.cols.assign(m_gens, ModVec<K>{});
        for (auto& p : amb.c) {
            int i = p.first / n_gens;
            int j = p.first % n_gens;
            f.cols[i].set(j, p.second);
        }
        for (auto& c : f.cols) c = N.nf(c);
        return f;
    }

    ModVec<K> elem_to_ambient(const ModVec<K>& hom_elem, const PolyRing<K>& R) const {
        ModVec<K> amb;
        for (auto& p : hom_elem.c)
            amb = mv_add(R, amb, mv_mul_poly(R, inclusion.cols[p.first], p.second));
        return amb;
    }
};

/* Hom_R(M, N) = ker(⊕_i N(a_i) --compose with presentation--> ⊕_j N(d_j)). */
template <class K>
HomResult<K> hom_module(const FPModule<K>& M, const FPModule<K>& N) {
    const auto& R = M.ring->poly;
    int rm = M.ngens(), rn = N.ngens();
    int r1 = int(M.relations.size());
    // P0 = ⊕_i N(a_i): flat index i*rn + j, degree b_j - a_i
    std::vector<int> p0(rm * rn), p1(r1 * rn);
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) p0[i * rn + j] = N.gen_degrees[j] - M.gen_degrees[i];
    std::vector<int> rel_degs(r1, 0);
    for (int c = 0; c < r1; ++c) {
        auto d = mv_homogeneous_degree(R, M.relations[c], M.gen_degrees);
        rel_degs[c] = *d;
        for (int j = 0; j < rn; ++j) p1[c * rn + j] = N.gen_degrees[j] - rel_degs[c];
    }
    FPModule<K> P0raw, P1raw;
    {
        std::vector<ModVec<K>> rels0;
        for (int i = 0; i < rm; ++i)
            for (auto& c : N.relations) {
                ModVec<K> v;
                for (auto& p : c.c) v.c.push_back({i * rn + p.first, p.second});
                rels0.push_back(std::move(v));
            }
        P0raw = FPModule<K>(M.ring, p0, std::move(rels0));
        std::vector<ModVec<K>> rels1;
        for (int c = 0; c < r1; ++c)
            for (auto& cc : N.relations) {
                ModVec<K> v;
                for (auto& p : cc.c) v.c.push_back({c * rn + p.first, p.second});
                rels1.push_back(std::move(v));
            }
        P1raw = FPModule<K>(M.ring, p1, std::move(rels1));
    }
    // δ(φ)_c = Σ_i A[i][c]·φ_i
    ModuleMap<K> delta{P0raw, P1raw, {}};
    delta.cols.assign(rm * rn, ModVec<K>{});
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) {
            ModVec<K> img;
            for (int c = 0; c < r1; ++c) {
                const Poly<K>* a = M.relations[c].at(i);
                if (!a) continue;
                img.set(c * rn + j, M.ring->normal_form(*a));
            }
            delta.cols[i * rn + j] = std::move(img);
        }
    auto ker = kernel(delta);
    HomResult<K> out;
    out.module = ker.module;
    out.ambient = P0raw;
    out.inclusion = ker.inclusion;
    out.m_gens = rm;
    out.n_gens = rn;
    return out;
}

/* Coordinates of a (well-defined) map f: M -> N inside hom_module(M,N):
 * expression of its ambient vector in the Hom generators. */
template <class K>
std::optional<std::vector<Poly<K>>> hom_coordinates(const HomResult<K>& H, const ModuleMap<K>& f) {
    const auto& R = f.source.ring->poly;
    ModVec<K> amb;
    for (int i = 0; i < H.m_gens; ++i) {
        const ModVec<K>& col = f.cols[i];
        for (auto& p : col.c) amb.set(i * H.n_gens + p.first, p.second);
    }
    // solve incl·x = amb modulo ambient relations
    std::vector<ModVec<K>> all = H.inclusion.cols;
    for (auto& r : H.ambient.relations) all.push_back(r);
    auto ideal = f.source.ring->groebner().empty() ? nullptr : &f.source.ring->groebner();
    ModuleGB<K> gb(R, std::max(1, H.ambient.ngens()),
                   H.ambient.ngens() ? H.ambient.gen_degrees : std::vector<int>{0}, all, ideal, true,
                   f.source.ring->degree_cap);
    auto expr = gb.express(amb);
    if (!expr) return std::nullopt;
    expr->resize(H.module.ngens());
    return expr;
}

/* ---------- annihilator ---------- */

/* Ann(M) = {f : f·e_i ∈ relations for all i}, via one syzygy computation on
 * the stacked column (e_0,...,e_{r-1}) against blockwise relations. */
template <class K>
std::vector<Poly<K>> annihilator(const FPModule<K>& M) {
    const auto& R = M.ring->poly;
    int r0 = M.ngens();
    if (r0 == 0) {
        return {poly_const(R, R.field.one())};  // Ann(0) = R
    }
    int amb = r0 * r0;  // block i holds a copy of F0 shifted by -a_i
    std::vector<int> shifts(amb);
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r0; ++j) shifts[i * r0 + j] = M.gen_degrees[j] - M.gen_degrees[i];
    std::vector<ModVec<K>> cols;
    ModVec<K> stacked;
    for (int i = 0; i < r0; ++i) stacked.set(i * r0 + i, poly_const(R, R.field.one()));
    cols.push_back(std::move(stacked));
    for (int i = 0; i < r0; ++i)
        for (auto& rel : M.relations) {
            ModVec<K> v;
            for (auto& p : rel.c) v.c.push_back({i * r0 + p.first, p.second});
            cols.push_back(std::move(v));
        }
    auto syz = syzygies_over_ring(*M.ring, amb, shifts, cols);
    std::vector<Poly<K>> gens;
    for (auto& z : syz) {
        const Poly<K>* f = z.at(0);
        if (f && !f->is_zero()) gens.push_back(M.ring->normal_form(*f));
    }
    // canonicalize as a reduced GB of the ideal (within the quotient ring:
    // include the ring ideal and reduce)
    std::vector<Poly<K>> all = gens;
    for (auto& g : M.ring->ideal_gens) all.push_back(g);
    auto gb = groebner_basis(M.ring->poly, all, M.ring->degree_cap);
    std::vector<Poly<K>> out;
    for (auto& g : gb)
        if (!M.ring->is_zero_mod(g)) out.push_back(g);
    return out;
}

}  // namespace gradelink

#endif
