#ifndef GRADELINK_RESOLUTION_HPP
#define GRADELINK_RESOLUTION_HPP

#include "gradelink/fpmodule.hpp"

namespace gradelink {

/* Minimal graded free resolution, built one syzygy step at a time. Each
 * differential's columns minimally generate the kernel of the previous one,
 * which forces all entries into the maximal ideal. Cached on the module and
 * extended in place when a longer stretch is requested. */
template <class K>
struct Resolution {
    FPModule<K> module;
    MinimalPresentation<K> min;              // augmentation F_0 -> module
    std::vector<std::vector<int>> degs;      // generator degrees of F_0, F_1, ...
    std::vector<std::vector<ModVec<K>>> dcols;  // dcols[i] = columns of d_{i+1}: F_{i+1} -> F_i
    bool complete = false;

    int length() const { return int(degs.size()) - 1; }
    int rank(int i) const { return i < int(degs.size()) ? int(degs[i].size()) : 0; }
};

/* Invariants: degs[i] are the F_i generator degrees; dcols[i] are the
 * columns of d_{i+1}: F_{i+1} -> F_i, expressed over F_i components, and
 * degs[i+1] are their column degrees. */
template <class K>
void extend_resolution(Resolution<K>& res, const QuotientRing<K>& ring, int length) {
    while (res.length() < length && !res.complete) {
        int L = res.length();
        const std::vector<ModVec<K>>& dL = res.dcols.back();  // columns over F_{L-1}
        const std::vector<int>& shifts = res.degs[L - 1];
        std::vector<ModVec<K>> syz =
            syzygies_over_ring(ring, std::max(1, int(shifts.size())),
                               shifts.empty() ? std::vector<int>{0} : shifts, dL);
        std::vector<int> kept = minimal_generator_filter(ring, int(dL.size()), res.degs[L], {}, syz);
        if (kept.empty()) {
            res.complete = true;
            break;
        }
        std::vector<ModVec<K>> cols;
        std::vector<int> newdegs;
        for (int idx : kept) {
            cols.push_back(syz[idx]);
            newdegs.push_back(*mv_homogeneous_degree(ring.poly, syz[idx], res.degs[L]));
        }
        res.dcols.push_back(std::move(cols));
        res.degs.push_back(std::move(newdegs));
    }
}

/* Fetch (building or extending) the cached resolution of M to `length`. */
template <class K>
const Resolution<K>& get_resolution(const FPModule<K>& M, int length) {
    auto cached = std::static_pointer_cast<Resolution<K>>(M.aux_cache);
    if (!cached) {
        auto res = std::make_shared<Resolution<K>>();
        res->module = M;
        res->min = minimal_presentation(M);
        res->degs.push_back(res->min.module.gen_degrees);
        if (res->min.module.relations.empty()) {
            res->complete = true;  // free module: length-0 resolution
        } else {
            std::vector<int> d1degs;
            for (auto& c : res->min.module.relations)
                d1degs.push_back(*mv_homogeneous_degree(M.ring->poly, c, res->degs[0]));
            res->dcols.push_back(res->min.module.relations);
            res->degs.push_back(std::move(d1degs));
        }
        M.aux_cache = res;
        cached = res;
    }
    extend_resolution(*cached, *M.ring, length);
    return *cached;
}

/* Spec-facing summary of a resolution request. */
template <class K>
struct FreeResolutionReport {
    std::vector<int> ranks;
    std::vector<std::vector<int>> degs;
    bool complete;
};

template <class K>
FreeResolutionReport<K> free_resolution(const FPModule<K>& M, int length) {
    const Resolution<K>& r = get_resolution(M, length);
    FreeResolutionReport<K> out;
    int upto = std::min(length, r.length());
    for (int i = 0; i <= upto; ++i) {
        out.ranks.push_back(r.rank(i));
        out.degs.push_back(r.degs[i]);
    }
    out.complete = r.complete && r.length() <= length;
    return out;
}

/* d_i · d_{i+1} = 0 certification. */
template <class K>
bool resolution_composes_to_zero(const Resolution<K>& r, const QuotientRing<K>& ring) {
    for (size_t i = 0; i + 1 < r.dcols.size(); ++i) {
        const std::vector<ModVec<K>>& a = r.dcols[i];      // d_{i+1}
        const std::vector<ModVec<K>>& b = r.dcols[i + 1];  // d_{i+2}
        for (auto& col : b) {
            ModVec<K> acc;
            for (auto& p : col.c)
                acc = mv_add(ring.poly, acc, mv_mul_poly(ring.poly, a[p.first], p.second));
            ModVec<K> nf;
            for (auto& p : acc.c) {
                Poly<K> q = ring.normal_form(p.second);
                if (!q.is_zero()) nf.c.push_back({p.first, q});
            }
            if (!nf.is_zero()) return false;
        }
    }
    return true;
}

/* No unit entries in any differential (graded minimality). */
template <class K>
bool resolution_is_minimal(const Resolution<K>& r, const QuotientRing<K>& ring) {
    auto has_unit = [&](const std::vector<ModVec<K>>& cols) {
        for (auto& c : cols)
            for (auto& p : c.c)
                if (!p.second.is_zero() && p.second.lead_mono().is_unit(ring.poly.nvars()))
                    return true;
        return false;
    };
    if (has_unit(r.min.module.relations)) return false;
    for (auto& d : r.dcols)
        if (has_unit(d)) return false;
    return true;
}

}  // namespace gradelink

#endif
