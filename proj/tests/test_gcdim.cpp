#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradelink/artinian.hpp"
#include "gradelink/gcdim.hpp"
#include "helpers.hpp"

using namespace gradelink;
using namespace gltest;

namespace {
struct KoszulWorld {
    std::shared_ptr<const QuotientRing<QQ>> R;
    FPModule<QQ> free1, k, Rx;
    KoszulWorld() {
        R = make_ring({"x", "y"}, {});
        free1 = fp_free(R, {0});
        k = residue_field(R);
        Rx = fp_cyclic(R, {poly_parse(R->poly, "x")});
    }
};
struct ArtinianWorld {
    std::shared_ptr<const QuotientRing<QQ>> A;
    FPModule<QQ> RA, k, omega;
    ArtinianWorld() {
        A = make_ring({"X", "Y"}, {"X^2", "X*Y", "Y^2"});
        RA = fp_free(A, {0});
        k = residue_field(A);
        omega = k_dual(RA);
    }
};
}  // namespace

TEST_CASE("semidualizing: R always verifies; omega verifies; k is refuted") {
    KoszulWorld W;
    auto repR = is_semidualizing(W.free1, 4);
    CHECK(repR.verdict);
    CHECK(repR.homothety.status == IsoStatus::Verified);
    auto repk = is_semidualizing(W.k, 4);
    CHECK(!repk.verdict);
    CHECK(repk.homothety.status == IsoStatus::Refuted);
    CHECK(repk.homothety.obstruction == "hilbert-series");

    ArtinianWorld V;
    auto repO = is_semidualizing(V.omega, 6);
    CHECK(repO.verdict);
    for (auto& [i, z] : repO.ext_vanishing) CHECK(z);
    // R itself over the Artinian ring
    CHECK(is_semidualizing(V.RA, 6).verdict);
}

TEST_CASE("regular sequence search") {
    KoszulWorld W;
    auto ann = annihilator(W.k);
    auto w = find_regular_sequence(ann, W.free1, 2);
    REQUIRE(w.found);
    CHECK(w.verified_length == 2);
    auto w0 = find_regular_sequence(ann, W.free1, 0);
    CHECK(w0.found);
    CHECK(w0.elements.empty());
    auto annx = annihilator(W.Rx);
    auto w1 = find_regular_sequence(annx, W.free1, 1);
    REQUIRE(w1.found);
    CHECK(poly_str(W.R->poly, w1.elements[0]) == "x");
    // over the Artinian ring nothing is regular: budget exhausts honestly
    ArtinianWorld V;
    auto bad = find_regular_sequence(annihilator(V.k), V.RA, 1, 1, 8);
    CHECK(!bad.found);
}

TEST_CASE("transpose: free modules and perfect modules have vanishing data") {
    KoszulWorld W;
    auto Dfree = transpose(fp_free(W.R, {0, 1}), W.free1, 0);
    CHECK(Dfree.transpose.is_zero_module());
    CHECK(Dfree.four_term_exact);
    // k in grade 2: R/(x,y) is free over R/(x,y), so D = 0 and k is reflexive
    auto Dk = transpose(W.k, W.free1, 2);
    CHECK(Dk.transpose.is_zero_module());
    CHECK(Dk.evaluation_kernel.is_zero_module());
    CHECK(Dk.evaluation_cokernel.is_zero_module());
    CHECK(Dk.four_term_exact);
    // R/(x) in grade 1 likewise
    auto Dx = transpose(W.Rx, W.free1, 1);
    CHECK(Dx.transpose.is_zero_module());
    CHECK(Dx.four_term_exact);
}

TEST_CASE("transpose over the Artinian ring: classical Auslander transpose of k") {
    ArtinianWorld V;
    auto D = transpose(V.k, V.RA, 0);
    CHECK(!D.transpose.is_zero_module());
    CHECK(D.four_term_exact);
    // k is not torsionless over the non-Gorenstein ring: the kernel of the
    // evaluation map is nonzero against R...
    // compare with the omega-dual picture where k is reflexive
    auto Domega = transpose(V.k, V.omega, 0);
    CHECK(Domega.four_term_exact);
    CHECK(Domega.evaluation_kernel.is_zero_module());
    CHECK(Domega.evaluation_cokernel.is_zero_module());
}

TEST_CASE("is_gc_zero: paper's grade ladder examples") {
    KoszulWorld W;
    auto m1 = is_gc_zero(W.Rx, W.free1, 1, 4);
    CHECK(m1.member);
    auto m2 = is_gc_zero(W.k, W.free1, 2, 4);
    CHECK(m2.member);
    ArtinianWorld V;
    auto m3 = is_gc_zero(V.k, V.RA, 0, 4);
    CHECK(!m3.member);
    CHECK(m3.obstruction == "Ext^1(M,C) != 0");
    // wrong grade errors
    CHECK_THROWS_AS(is_gc_zero(W.k, W.free1, 1, 4), Error);
    // against omega everything Artinian is reflexive
    auto m4 = is_gc_zero(V.k, V.omega, 0, 4);
    CHECK(m4.member);
    auto m5 = is_gc_zero(direct_sum(V.k, V.RA), V.omega, 0, 4);
    CHECK(m5.member);
}

TEST_CASE("gc_resolution of k over Q[x,y]") {
    KoszulWorld W;
    SUBCASE("j = 1: the paper's two-step R/(x) resolution") {
        auto res = gc_resolution(W.k, W.free1, 1, 4, 4);
        REQUIRE(res.complete);
        REQUIRE(res.terms.size() == 2);
        CHECK(res.terms[0].hilbert() == W.Rx.hilbert());
        CHECK(res.terms[1].hilbert() == W.Rx.hilbert().shifted(1));
        // the witness is one of the two variables (deterministic: first
        // annihilator generator that certifies)
        std::string x0 = poly_str(W.R->poly, res.regular_sequence[0]);
        CHECK((x0 == "x" || x0 == "y"));
    }
    SUBCASE("j = 0: the Koszul complex") {
        auto res = gc_resolution(W.k, W.free1, 0, 4, 4);
        REQUIRE(res.complete);
        REQUIRE(res.terms.size() == 3);
        CHECK(minimal_generator_count(res.terms[0]) == 1);
        CHECK(minimal_generator_count(res.terms[1]) == 2);
        CHECK(minimal_generator_count(res.terms[2]) == 1);
        for (auto& t : res.terms) CHECK(t.relations.empty());  // free terms
    }
    SUBCASE("member gives length 0") {
        auto res = gc_resolution(W.Rx, W.free1, 1, 3, 4);
        CHECK(res.complete);
        CHECK(res.terms.size() == 1);
    }
}

TEST_CASE("gc_dimension: the 2-j ladder and chain corollary") {
    KoszulWorld W;
    std::vector<int> want = {2, 1, 0};
    for (int j = 0; j <= 2; ++j) {
        auto d = gc_dimension(W.k, W.free1, j, 6);
        REQUIRE(d.certified);
        CHECK(*d.value == want[j]);
    }
    // Cor 2.7 chain with gaps of one, and Thm 2.8 simultaneity
    auto d0 = gc_dimension(W.Rx, W.free1, 0, 6);
    auto d1 = gc_dimension(W.Rx, W.free1, 1, 6);
    REQUIRE(d0.certified);
    REQUIRE(d1.certified);
    CHECK(*d0.value == 1);
    CHECK(*d1.value == 0);
    // infinite dimension stays uncertified
    ArtinianWorld V;
    auto dinf = gc_dimension(V.k, V.RA, 0, 5);
    CHECK(!dinf.certified);
}

TEST_CASE("Auslander-Bridger formula (corrected -j reading)") {
    KoszulWorld W;
    FPModule<QQ> freeR = fp_free(W.R, {0});
    int dR = depth(freeR);
    for (auto& [M, g] : std::vector<std::pair<FPModule<QQ>, int>>{{W.k, 2}, {W.Rx, 1}}) {
        for (int j = 0; j <= g; ++j) {
            auto d = gc_dimension(M, W.free1, j, 6);
            REQUIRE(d.certified);
            CHECK(*d.value == dR - depth(M) - j);
        }
    }
}

TEST_CASE("torsionless checks") {
    KoszulWorld W;
    auto t = torsionless_check(W.Rx, W.free1, 1, 3);
    for (auto& [i, z] : t) CHECK(z);
    ArtinianWorld V;
    auto t2 = torsionless_check(V.k, V.omega, 0, 1);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].second);  // k is omega-reflexive: torsionless at 1
    // Against R the evaluation map k -> Hom(Hom(k,R),R) sends 1 to f ↦ f(1),
    // nonzero because soc(R) ≠ 0, so Ext^1(D⁰k,R) = ker δ = 0: torsionless
    // holds at index 1 (higher indices fail: k has infinite G-dimension)
    auto t3 = torsionless_check(V.k, V.RA, 0, 2);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].second);
    CHECK(!t3[1].second);
}

TEST_CASE("serre_check: members pass, depth arithmetic, clause agreement") {
    KoszulWorld W;
    auto rep = serre_check(W.Rx, W.free1, 1, 2, 3);
    CHECK(rep.clause_i);
    CHECK(rep.depth_check_at_m);
    CHECK(rep.clause_iv);
    CHECK(rep.depth_M == 1);
    CHECK(rep.depth_R == 2);
    CHECK(rep.agreement);
    CHECK(rep.finite_gdim_certified);
    CHECK(!rep.theorem_violation);
    // k in grade 2, n = 3
    auto rep2 = serre_check(W.k, W.free1, 2, 3, 3);
    CHECK(rep2.agreement);
    CHECK(!rep2.theorem_violation);
    ArtinianWorld V;
    // over the Artinian ring S̃ is vacuous at m; free modules agree everywhere
    auto rep3 = serre_check(V.RA, V.RA, 0, 2, 3);
    CHECK(rep3.agreement);
    CHECK(!rep3.theorem_violation);
}

TEST_CASE("auslander class: free modules are in the class") {
    KoszulWorld W;
    auto rep = auslander_class_check(W.free1, W.free1, 3);
    CHECK(rep.natural_map_iso);
    CHECK(rep.in_class);
    ArtinianWorld V;
    auto rep2 = auslander_class_check(V.RA, V.omega, 3);
    CHECK(rep2.in_class);
    auto rep3 = auslander_class_check(direct_sum(V.RA, V.RA), V.omega, 3);
    CHECK(rep3.in_class);
    // k against omega: Tor_1(k, omega) != 0, honest exclusion
    auto rep4 = auslander_class_check(V.k, V.omega, 3);
    CHECK(!rep4.tor_vanishing[0].second);
    CHECK(!rep4.in_class);
}

TEST_CASE("serre equivalence audit: degenerate C = R and free module cases") {
    KoszulWorld W;
    auto rep = serre_equivalence_audit(W.free1, W.free1, 0, 2, 3);
    CHECK(rep.vectors_equal);
    CHECK(rep.bridge_hs_equal);
    CHECK(!rep.theorem_violation);
    ArtinianWorld V;
    auto rep2 = serre_equivalence_audit(V.RA, V.omega, 0, 2, 3);
    CHECK(rep2.vectors_equal);
    CHECK(!rep2.theorem_violation);
}

TEST_CASE("dualized SES: the explicit k[x,y] example") {
    KoszulWorld W;
    // 0 -> R(-1) --x--> R -> R/(x) -> 0
    auto mx = mult_map(W.free1, poly_parse(W.R->poly, "x"));
    auto cok = cokernel(mx);
    auto les = dualize_ses(mx, cok.projection, W.free1, 1);
    REQUIRE(les.input_cert.ok());
    CHECK(les.all_exact());
    // nodes: Hom(R/x,R)=0, Hom(R,R)=R, Hom(R(-1),R)=R(1), Ext1(R/x,R)=(R/x)(1), 0, 0
    CHECK(les.nodes[0].is_zero_module());
    CHECK(les.nodes[1].hilbert() == W.free1.hilbert());
    CHECK(les.nodes[2].hilbert() == W.free1.hilbert().shifted(-1));
    CHECK(les.nodes[3].hilbert() == W.Rx.hilbert().shifted(-1));
    CHECK(les.nodes[4].is_zero_module());
    CHECK(les.nodes[5].is_zero_module());
}

TEST_CASE("dualized SES: split sequences dualize exactly") {
    ArtinianWorld V;
    FPModule<QQ> A = V.k;
    FPModule<QQ> B = V.omega;
    FPModule<QQ> S = direct_sum(A, B);
    ModuleMap<QQ> inc{A, S, {}};
    for (int i = 0; i < A.ngens(); ++i) inc.cols.push_back(mv_unit(i, V.A->poly));
    ModuleMap<QQ> prj{S, B, {}};
    for (int i = 0; i < A.ngens(); ++i) prj.cols.push_back(ModVec<QQ>{});
    for (int i = 0; i < B.ngens(); ++i) prj.cols.push_back(mv_unit(i, V.A->poly));
    auto les = dualize_ses(inc, prj, V.omega, 2);
    CHECK(les.input_cert.ok());
    CHECK(les.all_exact());
    // additivity of the dualized pieces at every level
    for (size_t t = 0; t + 2 < les.nodes.size(); t += 3) {
        auto sum = les.nodes[t].hilbert().plus(les.nodes[t + 2].hilbert());
        CHECK(sum == les.nodes[t + 1].hilbert());
    }
}

TEST_CASE("ext_induced: identity induces identity") {
    KoszulWorld W;
    auto ind = ext_induced(identity_map(W.k), W.free1, 2);
    CHECK(maps_equal(ind.map, identity_map(ind.source_ext.value())));
}

TEST_CASE("Lemma 3.1 higher isomorphisms on an Artinian fixture") {
    ArtinianWorld V;
    // Ext^{g+i}(Ext^g(M,C),C) ≅ Ext^{g+i+2}(D,C) for i > 0, at the Hilbert level
    auto M = V.k;
    auto D = transpose(M, V.RA, 0);
    auto E = ext_module(M, V.RA, 0);
    for (int i = 1; i <= 2; ++i) {
        auto lhs = ext_module(E, V.RA, i).hilbert();
        auto rhs = ext_module(D.transpose, V.RA, i + 2).hilbert();
        CHECK(lhs == rhs);
    }
}
