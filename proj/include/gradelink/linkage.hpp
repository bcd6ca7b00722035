#ifndef GRADELINK_LINKAGE_HPP
#define GRADELINK_LINKAGE_HPP

#include "gradelink/endsplit.hpp"
#include "gradelink/gcdim.hpp"

namespace gradelink {

/* same matrix, source and target twisted in parallel */
template <class K>
ModuleMap<K> retwist_map(const ModuleMap<K>& f, int t) {
    if (t == 0) return f;
    return ModuleMap<K>{twist(f.source, t), twist(f.target, t), f.cols};
}

/* ---------- quasi-Gorenstein detection ---------- */

template <class K>
struct QuasiGorensteinReport {
    int q = 0;
    GcMembership<K> membership;
    IsoCertificate<K> self_duality;  // Q vs Ext^q(Q,C), twist allowed
    bool verified = false;
    std::string obstruction;
};

template <class K>
QuasiGorensteinReport<K> is_quasi_gorenstein(const FPModule<K>& Q, const FPModule<K>& C,
                                             int bound, int budget = 32, uint64_t seed = 1) {
    QuasiGorensteinReport<K> rep;
    auto gq = grade(Q, C, bound + 2);
    if (!gq.found) throw Error("grade-unbounded", "grade of Q not found below the cap");
    rep.q = gq.value;
    rep.membership = is_gc_zero(Q, C, rep.q, bound, seed);
    auto E = ext_module(Q, C, rep.q);
    rep.self_duality = iso_search(Q, E, budget, seed, /*allow_twist=*/true);
    rep.verified = rep.membership.member && rep.self_duality.status == IsoStatus::Verified;
    if (!rep.membership.member)
        rep.obstruction = "not in G_C^q: " + rep.membership.obstruction;
    else if (rep.self_duality.status == IsoStatus::Refuted)
        rep.obstruction = "self-duality refuted: " + rep.self_duality.obstruction;
    else if (rep.self_duality.status == IsoStatus::Inconclusive)
        rep.obstruction = "self-duality inconclusive at budget";
    return rep;
}

/* ---------- the link operator ---------- */

template <class K>
struct LinkResult {
    int g = 0;
    QuasiGorensteinReport<K> qg;
    ModuleMap<K> phi;         // Q -> M, surjective, grade-preserving
    ModuleMap<K> dual_map;    // ε: Ext^g(M,C)(twisted) -> Q
    FPModule<K> link;         // L_Q(M) = coker ε
    ModuleMap<K> projection;  // Q -> link
    bool epi_ok = false;
    bool dual_injective = false;
    bool sequence_exact = false;  // Hilbert accounting of 0 -> Ext^g(M,C) -> Q -> L -> 0
    bool grade_preserved = false;
    int link_grade = -1;
};

template <class K>
LinkResult<K> link(const FPModule<K>& Q, const FPModule<K>& C, const ModuleMap<K>& phi,
                   int bound, int budget = 32, uint64_t seed = 1) {
    LinkResult<K> out;
    out.qg = is_quasi_gorenstein(Q, C, bound, budget, seed);
    if (!out.qg.verified) {
        // refuted preconditions are input errors; budget exhaustion is not
        bool inconclusive = out.qg.self_duality.status == IsoStatus::Inconclusive &&
                            out.qg.membership.member;
        throw Error(inconclusive ? "no-alpha" : "pre-not-qg",
                    "Q is not certified C-quasi-Gorenstein: " + out.qg.obstruction);
    }
    out.g = out.qg.q;
    out.phi = phi;
    if (!map_well_defined(phi)) throw Error("bad-map", "phi is not a well-defined map");
    if (!cokernel(phi).module.is_zero_module())
        throw Error("not-epi", "phi is not surjective onto its target");
    auto gM = grade(phi.target, C, out.g + bound + 2);
    out.epi_ok = gM.found && gM.value == out.g;
    if (!out.epi_ok)
        throw Error("not-epi", "im(phi) does not have the grade of Q (Epi condition)");
    // ε = α^{-1} ∘ Ext^g(φ, C): Ext^g(M,C) (twisted) -> Q
    auto ind = ext_induced(phi, C, out.g);
    int t = out.qg.self_duality.twist_used;
    ModuleMap<K> extphi = retwist_map(ind.map, t);
    ModuleMap<K> eps = compose(out.qg.self_duality.inverse, extphi);
    out.dual_map = eps;
    out.dual_injective = kernel(eps).module.is_zero_module();
    auto cok = cokernel(eps);
    out.link = cok.module;
    out.projection = cok.projection;
    out.sequence_exact = out.dual_injective &&
                         eps.source.hilbert().plus(out.link.hilbert()) == Q.hilbert();
    if (out.link.is_zero_module()) {
        out.link_grade = -1;
        out.grade_preserved = true;  // vacuous for the zero link
    } else {
        auto gl = grade(out.link, C, out.g + bound + 2);
        out.link_grade = gl.found ? gl.value : -1;
        out.grade_preserved = gl.found && gl.value == out.g;
    }
    return out;
}

/* surjections in the degree-0 part of Hom(Q, M): basis elements first, then
 * seeded random combinations, up to `budget` candidates */
template <class K>
std::vector<ModuleMap<K>> find_surjections(const FPModule<K>& Q, const FPModule<K>& M,
                                           int budget = 32, uint64_t seed = 1) {
    const auto& R = Q.ring->poly;
    const auto& k = R.field;
    auto H = hom_module(Q, M);
    std::vector<ModuleMap<K>> cand;
    for (auto& b : H.module.basis_in_degree(0))
        cand.push_back(H.to_map(Q, M, H.elem_to_ambient(b, R)));
    std::vector<ModuleMap<K>> out;
    int tried = 0;
    auto surjective = [&](const ModuleMap<K>& f) {
        return cokernel(f).module.is_zero_module();
    };
    for (auto& f : cand) {
        if (tried++ >= budget) return out;
        if (surjective(f)) out.push_back(f);
    }
    std::mt19937_64 rng(seed);
    while (tried++ < budget && !cand.empty()) {
        ModuleMap<K> f = zero_map(Q, M);
        for (auto& g : cand) {
            auto c = k.from_int(long(rng() % 5) - 2);
            if (k.is_zero(c)) continue;
            for (int j = 0; j < Q.ngens(); ++j)
                f.cols[j] = mv_add(R, f.cols[j], mv_scale(R, g.cols[j], c));
        }
        for (auto& col : f.cols) col = M.nf(col);
        if (surjective(f)) {
            bool dup = false;
            for (auto& g : out)
                if (maps_equal(f, g)) { dup = true; break; }
            if (!dup) out.push_back(f);
        }
    }
    return out;
}

template <class K>
std::optional<ModuleMap<K>> find_surjection(const FPModule<K>& Q, const FPModule<K>& M,
                                            int budget = 32, uint64_t seed = 1) {
    auto all = find_surjections(Q, M, budget, seed);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/* ---------- stability ---------- */

enum class Stability { Stable, Unstable, Inconclusive };

template <class K>
struct StabilityVerdict {
    Stability status = Stability::Inconclusive;
    std::optional<FPModule<K>> witness;  // a summand in G_C^g when unstable
    std::string method;
};

template <class K>
StabilityVerdict<K> stability_check(const FPModule<K>& M, const FPModule<K>& C, int g,
                                    int bound, int budget = 32, uint64_t seed = 1) {
    StabilityVerdict<K> out;
    if (M.is_zero_module()) {
        out.status = Stability::Stable;  // no summands at all
        out.method = "zero module";
        return out;
    }
    auto gM = grade(M, C, g + bound + 2);
    if (gM.found && gM.value == g && is_gc_zero(M, C, g, bound, seed).member) {
        out.status = Stability::Unstable;
        out.witness = M;
        out.method = "identity idempotent: M itself lies in G_C^g";
        return out;
    }
    if (minimal_generator_count(M) == 1) {
        out.status = Stability::Stable;  // cyclic modules are indecomposable
        out.method = "cyclic, hence indecomposable, and M is not in G_C^g";
        return out;
    }
    if (M.hilbert().is_artinian()) {
        auto dM = artinian_from_fp(M);
        std::mt19937_64 rng(seed);
        auto dec = decompose_indecomposables(dM, budget, rng);
        for (auto& piece : dec.pieces) {
            FPModule<K> P = fp_from_artinian(piece);
            auto gp = grade(P, C, g + bound + 2);
            if (gp.found && gp.value == g && is_gc_zero(P, C, g, bound, seed).member) {
                out.status = Stability::Unstable;
                out.witness = P;
                out.method = "indecomposable summand in G_C^g (End-algebra split)";
                return out;
            }
        }
        if (dec.certified) {
            out.status = Stability::Stable;
            out.method = "full graded Krull-Schmidt decomposition, no summand in G_C^g";
        } else {
            out.status = Stability::Inconclusive;
            out.method = "End-algebra splitting budget exhausted";
        }
        return out;
    }
    // non-Artinian: over a regular ambient ring with C = R the members of
    // G_C^0 are free, so a free-summand pairing test is decisive at g = 0
    bool polynomial_ring = M.ring->ideal_gens.empty();
    bool c_is_free_rank1 = C.ngens() == 1 && C.relations.empty();
    if (polynomial_ring && c_is_free_rank1 && g == 0) {
        const auto& R = M.ring->poly;
        for (int d0 : M.gen_degrees) {
            FPModule<K> F1 = fp_free(M.ring, {d0});
            auto Hto = hom_module(M, F1);
            auto Hfrom = hom_module(F1, M);
            auto bto = Hto.module.basis_in_degree(0);
            auto bfrom = Hfrom.module.basis_in_degree(0);
            for (auto& a : bto)
                for (auto& b : bfrom) {
                    auto fa = Hto.to_map(M, F1, Hto.elem_to_ambient(a, R));
                    auto fb = Hfrom.to_map(F1, M, Hfrom.elem_to_ambient(b, R));
                    auto comp = compose(fa, fb);  // F1 -> F1
                    if (!comp.cols.empty() && !comp.cols[0].is_zero()) {
                        out.status = Stability::Unstable;
                        out.witness = F1;
                        out.method = "split free summand (pairing test)";
                        return out;
                    }
                }
        }
        out.status = Stability::Stable;
        out.method = "no free summand over a regular ring (pairing test; G_R^0 = free)";
        return out;
    }
    out.status = Stability::Inconclusive;
    out.method = "no exact path for non-Artinian input of this shape";
    return out;
}

/* ---------- horizontal linkage ---------- */

template <class K>
struct HorizontalLinkReport {
    int g = 0;
    bool cover_minimal = false;     // ker φ ⊆ m·Q
    LinkResult<K> first;
    std::optional<LinkResult<K>> second;
    IsoCertificate<K> definition_route;  // M vs L_Q^2(M)
    StabilityVerdict<K> stability;
    bool torsionless_at_1 = false;
    bool criterion_route = false;    // stable ∧ torsionless
    bool definition_conclusive = false;
    bool definition_linked = false;
    bool prop46_hs_exact = false;    // 0 -> Ext^{g+1}(D,C) -> M -> L² -> 0 accounting
    bool routes_agree = true;
    std::string note;
};

template <class K>
HorizontalLinkReport<K> horizontal_link_check(const FPModule<K>& M, const FPModule<K>& Q,
                                              const FPModule<K>& C, int bound, int budget = 32,
                                              uint64_t seed = 1) {
    HorizontalLinkReport<K> rep;
    auto phi_opt = find_surjection(Q, M, budget, seed);
    if (!phi_opt) throw Error("not-epi", "no surjection Q -> M found in the Hom budget");
    rep.first = link(Q, C, *phi_opt, bound, budget, seed);
    rep.g = rep.first.g;
    // minimal cover: the kernel of φ is superfluous, ker φ ⊆ m·Q
    {
        auto ker = kernel(*phi_opt);
        std::vector<ModVec<K>> mQ = Q.relations;
        const auto& R = Q.ring->poly;
        for (int v = 0; v < R.nvars(); ++v)
            for (int i = 0; i < Q.ngens(); ++i) {
                ModVec<K> r;
                r.set(i, poly_var(R, v));
                mQ.push_back(std::move(r));
            }
        auto ideal = Q.ring->groebner().empty() ? nullptr : &Q.ring->groebner();
        ModuleGB<K> gb(R, std::max(1, Q.ngens()), Q.gen_degrees, mQ, ideal, false,
                       Q.ring->degree_cap);
        rep.cover_minimal = true;
        for (auto& col : ker.inclusion.cols)
            if (!gb.nf(col).is_zero()) { rep.cover_minimal = false; break; }
    }
    // definition route: L² via the canonical second surjection Q -> L_Q(M)
    if (rep.first.link.is_zero_module()) {
        rep.definition_conclusive = true;
        rep.definition_linked = M.is_zero_module();
        rep.definition_route.status = rep.definition_linked ? IsoStatus::Verified : IsoStatus::Refuted;
        rep.definition_route.obstruction = "L_Q(M) = 0";
    } else if (rep.first.link_grade != rep.g) {
        rep.definition_conclusive = false;
        rep.note = "first link changed grade; canonical second surjection is not in Epi(Q)";
    } else {
        rep.second = link(Q, C, rep.first.projection, bound, budget, seed);
        rep.definition_route = iso_search(M, rep.second->link, budget, seed, /*twist*/ true);
        rep.definition_conclusive = rep.definition_route.status != IsoStatus::Inconclusive;
        rep.definition_linked = rep.definition_route.status == IsoStatus::Verified;
    }
    rep.stability = stability_check(M, C, rep.g, bound, budget, seed);
    auto t = torsionless_check(M, C, rep.g, 1, seed);
    rep.torsionless_at_1 = !t.empty() && t[0].second;
    rep.criterion_route =
        rep.stability.status == Stability::Stable && rep.torsionless_at_1;
    // Prop 4.6 accounting for the stable case
    if (rep.second) {
        auto D = transpose(M, C, rep.g, seed);
        rep.prop46_hs_exact =
            D.evaluation_kernel.hilbert().plus(rep.second->link.hilbert()) == M.hilbert();
    }
    if (rep.cover_minimal && rep.definition_conclusive &&
        rep.stability.status != Stability::Inconclusive) {
        rep.routes_agree = (rep.definition_linked == rep.criterion_route);
    }
    return rep;
}

/* ---------- direct linkage of a pair ---------- */

template <class K>
struct LinkedPairReport {
    QuasiGorensteinReport<K> qg;
    bool linked = false;
    std::string obstruction;
    std::optional<LinkResult<K>> link_m, link_n;
    IsoCertificate<K> m_matches, n_matches;  // M ≅ L_Q(N), N ≅ L_Q(M)
};

template <class K>
LinkedPairReport<K> linked_pair_check(const FPModule<K>& M, const FPModule<K>& N,
                                      const FPModule<K>& Q, const FPModule<K>& C, int bound,
                                      int budget = 32, uint64_t seed = 1) {
    LinkedPairReport<K> rep;
    rep.qg = is_quasi_gorenstein(Q, C, bound, budget, seed);
    if (!rep.qg.verified) {
        rep.obstruction = "Q is not C-quasi-Gorenstein: " + rep.qg.obstruction;
        return rep;
    }
    if (M.is_zero_module() || N.is_zero_module()) {
        rep.obstruction = "zero module cannot be linked (grade condition fails)";
        return rep;
    }
    auto phis = find_surjections(Q, M, budget, seed);
    auto psis = find_surjections(Q, N, budget, seed);
    if (phis.empty() || psis.empty()) {
        rep.obstruction = "no surjection from Q found within budget";
        return rep;
    }
    // the two conditions of the definition are separate existentials: some
    // φ with im = M must link to N, and some ψ with im = N must link to M
    bool side_n = false, side_m = false;
    for (auto& phi : phis) {
        auto L = link(Q, C, phi, bound, budget, seed);
        auto cert = iso_search(N, L.link, budget, seed, true);
        if (cert.status == IsoStatus::Verified) {
            rep.link_m = L;
            rep.n_matches = cert;
            side_n = true;
            break;
        }
        if (!rep.link_m) {
            rep.link_m = L;
            rep.n_matches = cert;
        }
    }
    for (auto& psi : psis) {
        auto L = link(Q, C, psi, bound, budget, seed);
        auto cert = iso_search(M, L.link, budget, seed, true);
        if (cert.status == IsoStatus::Verified) {
            rep.link_n = L;
            rep.m_matches = cert;
            side_m = true;
            break;
        }
        if (!rep.link_n) {
            rep.link_n = L;
            rep.m_matches = cert;
        }
    }
    rep.linked = side_m && side_n;
    if (!rep.linked && rep.obstruction.empty()) {
        rep.obstruction = "link images do not match the pair";
    }
    return rep;
}

/* ---------- local duality vanishing ---------- */

template <class K>
struct LocalDualityReport {
    int dim_ring = 0;
    bool ring_cm = false;
    std::vector<std::pair<int, bool>> vanishing;  // (i, H^i_m(M) = 0?)
};

template <class K>
LocalDualityReport<K> local_duality_report(const FPModule<K>& M, const FPModule<K>& omega,
                                           int lo, int hi) {
    LocalDualityReport<K> rep;
    FPModule<K> freeR = fp_free(M.ring, {0});
    rep.dim_ring = freeR.hilbert().dimension();
    rep.ring_cm = depth(freeR) == rep.dim_ring;
    if (!rep.ring_cm) throw Error("not-cm", "local duality requires a Cohen-Macaulay ring");
    int a = std::max(0, lo), b = std::min(rep.dim_ring, hi);
    for (int i = a; i <= b; ++i) {
        bool vanish = ext_module(M, omega, rep.dim_ring - i).is_zero_module();
        rep.vanishing.push_back({i, vanish});
    }
    return rep;
}

/* ---------- the closing-corollary audit ---------- */

template <class K>
struct SummaryAuditReport {
    bool clause_gc_member = false;        // (i)  M ∈ G_ω^g
    bool clause_horizontal = false;       // (ii) M horizontally linked by Q
    bool clause_depth = false;            // (iii) depth(M) ≥ depth(R) − g at m
    bool clause_local_duality = false;    // (iv) H^i_m(M⊗ω)=0 for g < i < d
    bool window_empty = false;
    int g = 0, d = 0;
};

template <class K>
SummaryAuditReport<K> summary_corollary_audit(const FPModule<K>& M, const FPModule<K>& Q,
                                              const FPModule<K>& omega, int bound,
                                              int budget = 32, uint64_t seed = 1) {
    SummaryAuditReport<K> rep;
    FPModule<K> freeR = fp_free(M.ring, {0});
    rep.d = freeR.hilbert().dimension();
    auto gM = grade(M, omega, bound + 2);
    if (!gM.found) throw Error("grade-unbounded", "grade of M not found");
    rep.g = gM.value;
    rep.clause_gc_member = is_gc_zero(M, omega, rep.g, bound, seed).member;
    auto h = horizontal_link_check(M, Q, omega, bound, budget, seed);
    rep.clause_horizontal = h.definition_conclusive ? h.definition_linked : h.criterion_route;
    rep.clause_depth = depth(M) >= depth(freeR) - rep.g;
    rep.window_empty = !(rep.g + 1 < rep.d);
    if (rep.window_empty) {
        rep.clause_local_duality = true;
    } else {
        auto TC = tensor(M, omega).module;
        auto ld = local_duality_report(TC, omega, rep.g + 1, rep.d - 1);
        rep.clause_local_duality = true;
        for (auto& [i, z] : ld.vanishing)
            if (!z) rep.clause_local_duality = false;
    }
    return rep;
}

}  // namespace gradelink

#endif
