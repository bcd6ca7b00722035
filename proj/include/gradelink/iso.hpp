#ifndef GRADELINK_ISO_HPP
#define GRADELINK_ISO_HPP

#include <random>

#include "gradelink/homology.hpp"

namespace gradelink {

enum class IsoStatus { Verified, Refuted, Inconclusive };

template <class K>
struct IsoCertificate {
    IsoStatus status = IsoStatus::Inconclusive;
    ModuleMap<K> map, inverse;  // populated when verified: map: M -> twist(N, twist_used)
    int twist_used = 0;
    std::string obstruction;  // named invariant mismatch when refuted
    int budget_used = 0;
};

template <class K>
typename K::Elem random_unit(const K& k, std::mt19937_64& rng) {
    // small nonzero scalars keep rational arithmetic tame
    long v = long(rng() % 7) - 3;
    if (v == 0) v = 1;
    return k.from_int(v);
}

namespace detail {

/* dim_k of M/(x_S)·M per degree over a window (or totals when Artinian). */
template <class K>
HilbertSeries covariable_quotient_hs(const FPModule<K>& M, const std::vector<int>& vars) {
    std::vector<ModVec<K>> rels = M.relations;
    for (int v : vars)
        for (int i = 0; i < M.ngens(); ++i) {
            ModVec<K> r;
            r.set(i, poly_var(M.ring->poly, v));
            rels.push_back(std::move(r));
        }
    FPModule<K> Q(M.ring, M.gen_degrees, std::move(rels));
    return Q.hilbert();
}

}  // namespace detail

/* Try to verify that a specific well-defined map is an isomorphism; builds
 * the certified inverse. Assumes equal Hilbert series (so surjectivity
 * implies bijectivity). */
template <class K>
std::optional<ModuleMap<K>> invert_if_iso(const ModuleMap<K>& f) {
    const auto& R = f.source.ring->poly;
    auto gb = express_gb(f.target, f.cols);
    // surjective: every target generator lies in the image
    std::vector<std::vector<Poly<K>>> pre;
    for (int j = 0; j < f.target.ngens(); ++j) {
        auto expr = gb->express(mv_unit(j, R));
        if (!expr) return std::nullopt;
        pre.push_back(std::move(*expr));
    }
    ModuleMap<K> inv{f.target, f.source, {}};
    for (int j = 0; j < f.target.ngens(); ++j) {
        ModVec<K> col;
        for (int i = 0; i < f.source.ngens(); ++i)
            if (!pre[j][i].is_zero()) col.set(i, pre[j][i]);
        inv.cols.push_back(f.source.nf(col));
    }
    if (!map_well_defined(inv)) return std::nullopt;
    if (!maps_equal(compose(inv, f), identity_map(f.source))) return std::nullopt;
    if (!maps_equal(compose(f, inv), identity_map(f.target))) return std::nullopt;
    return inv;
}

/* Semidecision: refute by a computable invariant, verify by explicit map
 * search over the degree-0 part of Hom, or give up after `budget`
 * candidates. When allow_twist is set the unique degree shift compatible
 * with the Hilbert series is tried. */
template <class K>
IsoCertificate<K> iso_search(const FPModule<K>& M, const FPModule<K>& N, int budget,
                             uint64_t seed = 1, bool allow_twist = false) {
    IsoCertificate<K> cert;
    const auto& k = M.ring->poly.field;
    const auto& hsM = M.hilbert();
    const auto& hsN = N.hilbert();
    bool zM = hsM.is_zero(), zN = hsN.is_zero();
    if (zM != zN) {
        cert.status = IsoStatus::Refuted;
        cert.obstruction = "hilbert-series";
        return cert;
    }
    if (zM && zN) {
        cert.status = IsoStatus::Verified;
        cert.map = zero_map(M, N);
        cert.inverse = zero_map(N, M);
        return cert;
    }
    int twist_t = 0;
    if (allow_twist) {
        int dM = hsM.num.begin()->first, dN = hsN.num.begin()->first;
        twist_t = dN - dM;
    }
    FPModule<K> NN = twist_t == 0 ? N : twist(N, twist_t);
    if (!(NN.hilbert() == hsM)) {
        cert.status = IsoStatus::Refuted;
        cert.obstruction = "hilbert-series";
        return cert;
    }
    cert.twist_used = twist_t;
    if (minimal_generator_count(M) != minimal_generator_count(NN)) {
        cert.status = IsoStatus::Refuted;
        cert.obstruction = "minimal-generators";
        return cert;
    }
    {
        auto aM = annihilator(M);
        auto aN = annihilator(NN);
        bool same = aM.size() == aN.size();
        if (same)
            for (size_t i = 0; i < aM.size(); ++i)
                if (!eq(M.ring->poly, aM[i], aN[i])) { same = false; break; }
        if (!same) {
            cert.status = IsoStatus::Refuted;
            cert.obstruction = "annihilator";
            return cert;
        }
    }
    // per-variable-subset cogenerator profile (exact, iso-invariant)
    {
        const int nv = M.ring->poly.nvars();
        for (int mask = 1; mask < (1 << nv); ++mask) {
            std::vector<int> vars;
            for (int v = 0; v < nv; ++v)
                if (mask & (1 << v)) vars.push_back(v);
            auto hM = detail::covariable_quotient_hs(M, vars);
            auto hN = detail::covariable_quotient_hs(NN, vars);
            if (!(hM == hN)) {
                cert.status = IsoStatus::Refuted;
                cert.obstruction = "covariable-profile";
                return cert;
            }
        }
    }
    // Hom dimension counts on Artinian inputs: iso forces
    // dim Hom(M,N) = dim End(M) = dim End(N)
    if (hsM.is_artinian()) {
        auto dMN = hom_module(M, NN).module.hilbert();
        auto dM = hom_module(M, M).module.hilbert();
        auto dN = hom_module(NN, NN).module.hilbert();
        long long a = dMN.is_zero() ? 0 : dMN.total_dimension();
        long long b = dM.is_zero() ? 0 : dM.total_dimension();
        long long c = dN.is_zero() ? 0 : dN.total_dimension();
        if (a != b || a != c) {
            cert.status = IsoStatus::Refuted;
            cert.obstruction = "hom-dimension";
            return cert;
        }
    }
    // explicit search over degree-0 homomorphisms
    auto H = hom_module(M, NN);
    auto basis0 = H.module.basis_in_degree(0);
    std::vector<ModuleMap<K>> cand;
    for (auto& b : basis0) cand.push_back(H.to_map(M, NN, H.elem_to_ambient(b, M.ring->poly)));
    std::mt19937_64 rng(seed);
    int tried = 0;
    auto attempt = [&](const ModuleMap<K>& f) -> bool {
        ++tried;
        auto inv = invert_if_iso(f);
        if (!inv) return false;
        cert.status = IsoStatus::Verified;
        cert.map = f;
        cert.inverse = *inv;
        cert.budget_used = tried;
        return true;
    };
    for (auto& f : cand) {
        if (tried >= budget) break;
        if (attempt(f)) return cert;
    }
    while (tried < budget && !basis0.empty()) {
        // random small combination of the basis maps
        ModuleMap<K> f = zero_map(M, NN);
        const auto& R = M.ring->poly;
        for (auto& g : cand) {
            auto c = k.from_int(long(rng() % 5) - 2);
            if (k.is_zero(c)) continue;
            for (int j = 0; j < M.ngens(); ++j)
                f.cols[j] = mv_add(R, f.cols[j], mv_scale(R, g.cols[j], c));
        }
        for (auto& col : f.cols) col = NN.nf(col);
        if (attempt(f)) return cert;
    }
    cert.status = IsoStatus::Inconclusive;
    cert.budget_used = tried;
    return cert;
}

}  // namespace gradelink

#endif
