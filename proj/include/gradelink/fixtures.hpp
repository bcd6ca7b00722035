#ifndef GRADELINK_FIXTURES_HPP
#define GRADELINK_FIXTURES_HPP

#include "gradelink/artinian.hpp"
#include "gradelink/linkage.hpp"

namespace gradelink {

/* Example-ring kit: the Koszul plane, the level-1 trivial extension
 * k[X,Y]/(X,Y)^2 with its two semidualizing modules, and the level-2
 * extension S = R[U,V]/(U,V)^2 with four. */

template <class K>
struct TowerLevel1 {
    std::shared_ptr<const QuotientRing<K>> ring;
    FPModule<K> free1;   // R
    FPModule<K> omega;   // Hom_k(R,k)
    FPModule<K> k;       // residue field
};

template <class K>
TowerLevel1<K> tower_level1(K field, int cap = 40) {
    PolyRing<K> P(std::move(field), {"X", "Y"}, MonomialOrder{OrderKind::Grevlex, {}});
    std::vector<Poly<K>> ideal = {poly_parse(P, "X^2"), poly_parse(P, "X*Y"), poly_parse(P, "Y^2")};
    std::shared_ptr<const QuotientRing<K>> ring =
        std::make_shared<QuotientRing<K>>(std::move(P), std::move(ideal), cap);
    TowerLevel1<K> t;
    t.ring = ring;
    t.free1 = fp_free(ring, {0});
    t.omega = k_dual(t.free1);
    std::vector<Poly<K>> vars = {poly_var(ring->poly, 0), poly_var(ring->poly, 1)};
    t.k = fp_cyclic(ring, vars);
    return t;
}

template <class K>
struct TowerLevel2 {
    std::shared_ptr<const QuotientRing<K>> ring;  // S
    FPModule<K> free1;   // S
    FPModule<K> c1;      // Hom_R(S, R)
    FPModule<K> c2;      // S ⊗_R ω_R
    FPModule<K> omega;   // ω_S = Hom_k(S,k)
    FPModule<K> rmod;    // R = S/(U,V)
    FPModule<K> k;       // residue field
};

template <class K>
TowerLevel2<K> tower_level2(K field, int cap = 40) {
    PolyRing<K> P(std::move(field), {"X", "Y", "U", "V"}, MonomialOrder{OrderKind::Grevlex, {}});
    std::vector<Poly<K>> ideal;
    for (auto s : {"X^2", "X*Y", "Y^2", "U^2", "U*V", "V^2"}) ideal.push_back(poly_parse(P, s));
    std::shared_ptr<const QuotientRing<K>> ring =
        std::make_shared<QuotientRing<K>>(std::move(P), std::move(ideal), cap);
    TowerLevel2<K> t;
    t.ring = ring;
    t.free1 = fp_free(ring, {0});
    t.omega = k_dual(t.free1);
    t.rmod = fp_cyclic(ring, {poly_var(ring->poly, 2), poly_var(ring->poly, 3)});  // S/(U,V)
    std::vector<Poly<K>> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(poly_var(ring->poly, i));
    t.k = fp_cyclic(ring, vars);
    // the two mixed candidates, via the dense subring kits over R = k[X,Y]-part
    auto modelS = artinian_from_fp(t.free1);
    auto modelR = artinian_from_fp(t.rmod);
    std::vector<int> rvars = {0, 1};
    t.c1 = fp_from_artinian(dense_hom_subring(modelS, modelR, rvars));
    auto modelOmegaR = dense_k_dual(modelR);
    t.c2 = fp_from_artinian(dense_tensor_subring(modelS, modelOmegaR, rvars));
    return t;
}

/* Gorenstein Artinian ring where k ⊕ R honestly is R-quasi-Gorenstein and
 * links k with R: the complete intersection k[X,Y]/(X^2,Y^2). */
template <class K>
struct GorensteinWorld {
    std::shared_ptr<const QuotientRing<K>> ring;
    FPModule<K> free1, k, soc;  // soc ≅ k embedded as the socle
};

template <class K>
GorensteinWorld<K> gorenstein_ci(K field, int cap = 40) {
    PolyRing<K> P(std::move(field), {"X", "Y"}, MonomialOrder{OrderKind::Grevlex, {}});
    std::vector<Poly<K>> ideal = {poly_parse(P, "X^2"), poly_parse(P, "Y^2")};
    std::shared_ptr<const QuotientRing<K>> ring =
        std::make_shared<QuotientRing<K>>(std::move(P), std::move(ideal), cap);
    GorensteinWorld<K> w;
    w.ring = ring;
    w.free1 = fp_free(ring, {0});
    std::vector<Poly<K>> vars = {poly_var(ring->poly, 0), poly_var(ring->poly, 1)};
    w.k = fp_cyclic(ring, vars);
    w.soc = w.k;
    return w;
}

/* Generated Artinian fixtures for the linkage property suite: pairs
 * (ring, module, C) with stable modules over non-Gorenstein rings plus the
 * degenerate dualizing cases. */
template <class K>
struct PropertyFixture {
    std::string name;
    std::shared_ptr<const QuotientRing<K>> ring;
    FPModule<K> module;       // M, grade 0
    FPModule<K> coefficient;  // C, semidualizing
    FPModule<K> qg_module;    // a C-quasi-Gorenstein module covering M
};

template <class K>
std::vector<PropertyFixture<K>> linkage_property_fixtures(const K& field) {
    std::vector<PropertyFixture<K>> out;
    auto add_ring = [&](const std::string& tag, std::vector<std::string> vars,
                        std::vector<std::string> ideal) {
        PolyRing<K> P(field, vars, MonomialOrder{OrderKind::Grevlex, {}});
        std::vector<Poly<K>> gens;
        for (auto& s : ideal) gens.push_back(poly_parse(P, s));
        std::shared_ptr<const QuotientRing<K>> rg =
            std::make_shared<QuotientRing<K>>(std::move(P), std::move(gens), 40);
        return std::pair<std::string, std::shared_ptr<const QuotientRing<K>>>{tag, rg};
    };
    auto rings = {
        add_ring("sq-zero-2", {"X", "Y"}, {"X^2", "X*Y", "Y^2"}),
        add_ring("sq-zero-3", {"X", "Y", "Z"}, {"X^2", "X*Y", "X*Z", "Y^2", "Y*Z", "Z^2"}),
        add_ring("mixed-soc", {"X", "Y"}, {"X^2", "X*Y", "Y^3"}),
        add_ring("ci-gor", {"X", "Y"}, {"X^2", "Y^2"}),
        add_ring("chain-4", {"X", "Y"}, {"X^2", "X*Y^2", "Y^4"}),
    };
    for (auto& [tag, ring] : rings) {
        FPModule<K> free1 = fp_free(ring, {0});
        std::vector<Poly<K>> vars;
        for (int i = 0; i < ring->poly.nvars(); ++i) vars.push_back(poly_var(ring->poly, i));
        FPModule<K> k = fp_cyclic(ring, vars);
        FPModule<K> omega = k_dual(free1);
        // residue field against C = R, with the free cover (always QG)
        out.push_back({tag + ":k:R", ring, k, free1, free1});
        // maximal ideal against C = R (stable whenever R is not Gorenstein)
        {
            auto mm = kernel(ModuleMap<K>{free1, k, {mv_unit(0, ring->poly)}});
            out.push_back({tag + ":m:R", ring, mm.module,
                           free1, fp_free(ring, mm.module.gen_degrees)});
        }
        // the degenerate dualizing side: everything is in G_ω^0
        out.push_back({tag + ":k:omega", ring, k, omega,
                       direct_sum(k, k_dual(k))});
    }
    return out;
}

}  // namespace gradelink

#endif
