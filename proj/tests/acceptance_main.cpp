/* Acceptance suite: runs every criterion at its stated tolerance and prints
 * one PASS/FAIL line per criterion. The whole computation is performed
 * twice with the same seed; criterion 10 compares the two transcripts
 * byte-for-byte. Exit code = number of failed criteria. */

#include <iostream>

#include <json.hpp>

#include "gradelink/denseeval.hpp"
#include "gradelink/fixtures.hpp"
#include "gradelink/session.hpp"

using namespace gradelink;
using json = nlohmann::ordered_json;
using QQ = RationalField;

namespace {

constexpr uint64_t kSeed = 1;
constexpr int kBound = 6;

struct Criterion {
    std::string id, title;
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Worlds {
    std::shared_ptr<const QuotientRing<QQ>> kxy;
    FPModule<QQ> P_free, P_k, P_Rx, P_m, P_mixed;
    TowerLevel1<QQ> t1;
    TowerLevel2<PrimeField> t2;

    Worlds() {
        PolyRing<QQ> P(QQ{}, {"x", "y"}, MonomialOrder{OrderKind::Grevlex, {}});
        kxy = std::make_shared<QuotientRing<QQ>>(std::move(P), std::vector<Poly<QQ>>{}, 40);
        P_free = fp_free(kxy, {0});
        P_k = fp_cyclic(kxy, {poly_var(kxy->poly, 0), poly_var(kxy->poly, 1)});
        P_Rx = fp_cyclic(kxy, {poly_var(kxy->poly, 0)});
        auto mm = kernel(ModuleMap<QQ>{P_free, P_k, {mv_unit(0, kxy->poly)}});
        P_m = mm.module;
        P_mixed = fp_cyclic(kxy, {poly_parse(kxy->poly, "x^2"), poly_parse(kxy->poly, "x*y")});
        t1 = tower_level1(QQ{});
        t2 = tower_level2(PrimeField(32003));
    }
};

template <class K>
json dims_json(const FPModule<K>& M) {
    auto hs = M.hilbert();
    json out = json::object();
    if (hs.is_zero()) return out;
    if (!hs.is_artinian()) return json(hs.str());
    for (auto& [d, n] : hs.finite_dimensions()) out[std::to_string(d)] = n;
    return out;
}

json dims_json(const std::map<int, long long>& dims) {
    json out = json::object();
    for (auto& [d, n] : dims) out[std::to_string(d)] = n;
    return out;
}

/* criterion 1: the Koszul fixture of Example 2.1 */
void criterion1(Worlds& W, Criterion& c, json& tr) {
    auto rep = free_resolution(W.P_k, 3);
    c.check(rep.complete && rep.ranks == std::vector<int>{1, 2, 1},
            "resolution of k has ranks 1,2,1 and is complete");
    auto g1 = grade(W.P_k, W.P_free, 4);
    auto g2 = grade(W.P_Rx, W.P_free, 4);
    c.check(g1.found && g1.value == 2, "grade(k) = 2");
    c.check(g2.found && g2.value == 1, "grade(R/(x)) = 1");
    auto H = hom_module(W.P_k, W.P_Rx).module;
    auto ker = kernel(mult_map(W.P_Rx, poly_var(W.kxy->poly, 1))).module;
    c.check(H.is_zero_module(), "Hom(k, R/(x)) = 0 by hom_module");
    c.check(ker.is_zero_module(), "Hom(k, R/(x)) = 0 by the kernel-of-(· y) route");
    c.check(H.hilbert() == ker.hilbert(), "the two routes agree exactly");
    tr["c1"] = {{"ranks", rep.ranks}, {"grade_k", g1.value}, {"grade_Rx", g2.value},
                {"hom_zero", H.is_zero_module()}, {"kernel_zero", ker.is_zero_module()}};
}

/* criterion 2: the intermediate-dimension chain */
void criterion2(Worlds& W, Criterion& c, json& tr) {
    json row = json::array();
    bool all_finite = true;
    for (int j = 0; j <= 2; ++j) {
        auto d = gc_dimension(W.P_k, W.P_free, j, kBound, kSeed);
        bool ok = d.certified && d.value && *d.value == 2 - j;
        c.check(ok, "gc_dimension(k, R, " + std::to_string(j) + ") = " + std::to_string(2 - j));
        all_finite = all_finite && d.certified;
        row.push_back(d.certified ? json(*d.value) : json("unverified"));
    }
    c.check(all_finite, "finiteness simultaneous across j (Thm 2.8)");
    tr["c2"] = row;
}

/* criterion 3: Auslander-Bridger with the corrected sign, +j diagnostic once */
void criterion3(Worlds& W, Criterion& c, json& tr) {
    int dR = depth(W.P_free);
    json rows = json::array();
    for (auto& [M, name, maxj] :
         std::vector<std::tuple<const FPModule<QQ>*, std::string, int>>{
             {&W.P_k, "k", 2}, {&W.P_Rx, "R/(x)", 1}, {&W.P_m, "m", 0}, {&W.P_free, "R", 0}}) {
        for (int j = 0; j <= maxj; ++j) {
            auto d = gc_dimension(*M, W.P_free, j, kBound, kSeed);
            if (!d.certified) continue;
            int rhs = dR - depth(*M) - j;
            c.check(*d.value == rhs, "AB formula (-j) for " + name + ", j=" + std::to_string(j));
            rows.push_back({{"module", name}, {"j", j}, {"dim", *d.value}, {"ab", rhs}});
        }
    }
    // the printed +j form must be emitted as a diagnostic exactly once per run
    json doc = fixture_document("koszul-kxy");
    doc["command"] = "gc-dim";
    doc["args"] = {{"module", "k"}, {"coefficient", "R"}, {"j", 1}, {"seed", 1}};
    json rep = run_session(doc);
    int count = 0;
    for (auto& d : rep["diagnostics"])
        if (d.contains("id") && d["id"] == "cor-2.9-printed-form") ++count;
    c.check(count == 1, "+j printed form emitted as a diagnostic exactly once per run");
    rep.erase("timing_ms");
    tr["c3"] = {{"rows", rows}, {"diagnostic_count", count}, {"report", rep}};
}

/* criterion 4: the Lemma 3.1 four-term sequence across grades 0,1,2 */
void criterion4(Worlds& W, Criterion& c, json& tr) {
    json rows = json::array();
    auto run_fp = [&](const std::string& name, const FPModule<QQ>& M, const FPModule<QQ>& C,
                      int g, bool artinian_check) {
        auto D = transpose(M, C, g, kSeed);
        c.check(D.four_term_exact, name + ": four-term Hilbert accounting");
        json row = {{"fixture", name}, {"g", g}, {"exact", D.four_term_exact}};
        if (artinian_check) {
            auto ev = dense_evaluation(artinian_from_fp(M), artinian_from_fp(C));
            FPModule<QQ> dk = fp_from_artinian(ev.kernel);
            FPModule<QQ> dc = fp_from_artinian(ev.cokernel);
            auto ck = iso_search(dk, D.evaluation_kernel, 32, kSeed, true);
            auto cc = iso_search(dc, D.evaluation_cokernel, 32, kSeed, true);
            c.check(ck.status == IsoStatus::Verified,
                    name + ": dense kernel ≅ Ext^{g+1}(D,C) (verified isomorphism)");
            c.check(cc.status == IsoStatus::Verified,
                    name + ": dense cokernel ≅ Ext^{g+2}(D,C) (verified isomorphism)");
            row["kernel_dims"] = dims_json(ev.kernel.dims_by_degree());
            row["cokernel_dims"] = dims_json(ev.cokernel.dims_by_degree());
        }
        rows.push_back(row);
    };
    run_fp("level1 k vs R", W.t1.k, W.t1.free1, 0, true);
    run_fp("level1 k vs omega", W.t1.k, W.t1.omega, 0, true);
    run_fp("level1 k+R vs omega", direct_sum(W.t1.k, W.t1.free1), W.t1.omega, 0, true);
    run_fp("kxy R/(x) vs R", W.P_Rx, W.P_free, 1, false);
    run_fp("kxy R/(x^2,xy) vs R", W.P_mixed, W.P_free, 1, false);
    run_fp("kxy k vs R", W.P_k, W.P_free, 2, false);
    run_fp("kxy m vs R", W.P_m, W.P_free, 0, false);
    tr["c4"] = rows;
}

/* criterion 5: Thm 3.6 clause agreement on certified fixtures */
void criterion5(Worlds& W, Criterion& c, json& tr) {
    json rows = json::array();
    auto run = [&](const std::string& name, const FPModule<QQ>& M, const FPModule<QQ>& C, int g,
                   int n) {
        auto rep = serre_check(M, C, g, n, kBound, kSeed);
        json row = {{"fixture", name}, {"g", g}, {"n", n},
                    {"i", rep.clause_i}, {"iii_at_m", rep.depth_check_at_m},
                    {"iv", rep.clause_iv}, {"certified", rep.finite_gdim_certified}};
        rows.push_back(row);
        if (rep.finite_gdim_certified) {
            c.check(!rep.theorem_violation, name + ": no theorem violation");
            c.check(rep.agreement, name + ": clauses agree");
        }
    };
    run("kxy k n=2", W.P_k, W.P_free, 2, 2);
    run("kxy k n=3", W.P_k, W.P_free, 2, 3);
    run("kxy R/(x) n=1", W.P_Rx, W.P_free, 1, 1);
    run("kxy R/(x) n=2", W.P_Rx, W.P_free, 1, 2);
    run("kxy R/(x) n=3", W.P_Rx, W.P_free, 1, 3);
    run("kxy m n=1", W.P_m, W.P_free, 0, 1);
    run("kxy m n=2", W.P_m, W.P_free, 0, 2);
    run("kxy R/(x2,xy) n=1", W.P_mixed, W.P_free, 1, 1);
    run("kxy R/(x2,xy) n=2", W.P_mixed, W.P_free, 1, 2);
    run("level1 k vs omega n=1", W.t1.k, W.t1.omega, 0, 1);
    run("level1 k vs omega n=2", W.t1.k, W.t1.omega, 0, 2);
    run("level1 k+R vs omega n=2", direct_sum(W.t1.k, W.t1.free1), W.t1.omega, 0, 2);
    run("level1 R vs R n=2", W.t1.free1, W.t1.free1, 0, 2);
    run("kxy R vs R n=2", W.P_free, W.P_free, 0, 2);
    tr["c5"] = rows;
}

/* criterion 6: Example 4.1, level 1 */
void criterion6(Worlds& W, Criterion& c, json& tr) {
    auto sR = is_semidualizing(W.t1.free1, kBound);
    auto sO = is_semidualizing(W.t1.omega, kBound);
    c.check(sR.verdict, "R verified semidualizing at bound 6");
    c.check(sO.verdict, "omega verified semidualizing at bound 6");
    auto sep = iso_search(W.t1.omega, W.t1.free1, 16, kSeed, true);
    c.check(sep.status == IsoStatus::Refuted && sep.obstruction == "hilbert-series",
            "omega ≇ R refuted by Hilbert series");
    auto H = hom_module(W.t1.k, W.t1.omega).module;
    auto hk = iso_search(H, W.t1.k, 16, kSeed, true);
    c.check(hk.status == IsoStatus::Verified, "Hom(k, omega) ≅ k verified");
    // the spec's linkage claim, implemented faithfully: it is mathematically
    // unattainable (k⊕R is not ω-quasi-Gorenstein; see the analysis notes)
    auto pair = linked_pair_check(W.t1.k, W.t1.free1, direct_sum(W.t1.k, W.t1.free1),
                                  W.t1.omega, kBound, 32, kSeed);
    c.check(pair.linked, "(k, R) directly linked by k⊕R under omega with both certificates");
    if (!pair.linked)
        c.note("refutation evidence: " + pair.obstruction +
               " [mu(Hom(k⊕R, omega)) = 3 ≠ 2 = mu(k⊕R); no 4-dimensional ω-quasi-Gorenstein "
               "module surjects onto R]");
    auto exts = ext_range(W.t1.k, W.t1.free1, 1, kBound);
    bool witnessed = true;
    for (auto& e : exts) witnessed = witnessed && !e.value().is_zero_module();
    c.check(witnessed, "non-Gorenstein witnessed by Ext^i(k,R) ≠ 0 for 1..6");
    tr["c6"] = {{"semidualizing_R", sR.verdict}, {"semidualizing_omega", sO.verdict},
                {"omega_neq_R", sep.obstruction}, {"hom_k_omega_is_k", hk.status == IsoStatus::Verified},
                {"pair_linked", pair.linked}, {"pair_obstruction", pair.obstruction},
                {"nongorenstein_witness", witnessed}};
}

/* criterion 7: Example 4.1, level 2 */
void criterion7(Worlds& W, Criterion& c, json& tr) {
    std::vector<std::pair<std::string, const FPModule<PrimeField>*>> cands = {
        {"S", &W.t2.free1}, {"C1", &W.t2.c1}, {"C2", &W.t2.c2}, {"omegaS", &W.t2.omega}};
    json verdicts = json::object();
    for (auto& [name, C] : cands) {
        auto rep = is_semidualizing(*C, kBound);
        c.check(rep.verdict, name + " verified semidualizing at bound 6");
        verdicts[name] = rep.verdict;
    }
    json seps = json::array();
    for (size_t a = 0; a < cands.size(); ++a)
        for (size_t b = a + 1; b < cands.size(); ++b) {
            auto cert = iso_search(*cands[a].second, *cands[b].second, 4, kSeed, true);
            c.check(cert.status == IsoStatus::Refuted,
                    cands[a].first + " ≇ " + cands[b].first + " certified");
            seps.push_back({{"pair", cands[a].first + "/" + cands[b].first},
                            {"obstruction", cert.obstruction}});
        }
    // the spec's level-2 linkage claims, implemented faithfully (both rest on
    // the same defect as level 1 and are refuted by the engine)
    auto pSR = linked_pair_check(W.t2.free1, W.t2.rmod, direct_sum(W.t2.free1, W.t2.rmod),
                                 W.t2.c1, kBound, 24, kSeed);
    c.check(pSR.linked, "(S, R) linked via S⊕R under C1 with certificates");
    if (!pSR.linked) c.note("refutation evidence: " + pSR.obstruction);
    auto pSk = linked_pair_check(W.t2.free1, W.t2.k, direct_sum(W.t2.free1, W.t2.k),
                                 W.t2.omega, kBound, 24, kSeed);
    c.check(pSk.linked, "(S, k) linked via S⊕k under omega_S with certificates");
    if (!pSk.linked) c.note("refutation evidence: " + pSk.obstruction);
    tr["c7"] = {{"semidualizing", verdicts}, {"separations", seps},
                {"SR_linked", pSR.linked}, {"SR_obstruction", pSR.obstruction},
                {"Sk_linked", pSk.linked}, {"Sk_obstruction", pSk.obstruction}};
}

/* criterion 8: the linkage property suite on generated Artinian fixtures */
void criterion8(Criterion& c, json& tr) {
    auto fixtures = linkage_property_fixtures(QQ{});
    int processed = 0, agreements = 0, conclusive = 0, qindep = 0;
    json rows = json::array();
    for (auto& fx : fixtures) {
        json row;
        row["fixture"] = fx.name;
        ++processed;
        // membership-preservation and grade preservation of the first link
        auto gM = grade(fx.module, fx.coefficient, 4);
        bool member =
            gM.found && gM.value == 0 && is_gc_zero(fx.module, fx.coefficient, 0, 4, kSeed).member;
        auto phis = find_surjections(fx.qg_module, fx.module, 24, kSeed);
        if (!phis.empty()) {
            auto L = link(fx.qg_module, fx.coefficient, phis.front(), 4, 24, kSeed);
            c.check(L.sequence_exact, fx.name + ": link sequence exact");
            if (!L.link.is_zero_module())
                c.check(L.grade_preserved, fx.name + ": grade preserved under L_Q");
            if (member && !L.link.is_zero_module()) {
                bool lm = is_gc_zero(L.link, fx.coefficient, 0, 4, kSeed).member;
                c.check(lm, fx.name + ": L_Q preserves G_C^g membership (Prop 4.4)");
                row["prop44"] = lm;
            }
        }
        // horizontal linkage: definition vs criterion whenever both conclusive
        auto rep = horizontal_link_check(fx.module, fx.qg_module, fx.coefficient, 4, 24, kSeed);
        row["cover_minimal"] = rep.cover_minimal;
        row["definition_conclusive"] = rep.definition_conclusive;
        row["definition_linked"] = rep.definition_linked;
        row["criterion"] = rep.criterion_route;
        row["stability"] = rep.stability.status == Stability::Stable
                               ? "stable"
                               : (rep.stability.status == Stability::Unstable ? "unstable"
                                                                              : "inconclusive");
        if (rep.cover_minimal && rep.definition_conclusive &&
            rep.stability.status != Stability::Inconclusive) {
            ++conclusive;
            if (rep.definition_linked == rep.criterion_route) ++agreements;
            c.check(rep.definition_linked == rep.criterion_route,
                    fx.name + ": definition and criterion routes agree");
        }
        // Q-independence of L² across two covers, for stable modules
        if (rep.stability.status == Stability::Stable && rep.second) {
            FPModule<QQ> Q2 = direct_sum(fx.qg_module, twist(fx.qg_module, -1));
            auto rep2 = horizontal_link_check(fx.module, Q2, fx.coefficient, 4, 24, kSeed);
            if (rep2.second) {
                auto same = iso_search(rep.second->link, rep2.second->link, 24, kSeed, true);
                c.check(same.status == IsoStatus::Verified,
                        fx.name + ": L² independent of Q up to isomorphism");
                row["q_independent"] = same.status == IsoStatus::Verified;
                ++qindep;
            }
        }
        rows.push_back(row);
    }
    c.check(processed >= 10, "at least 10 generated fixtures processed");
    c.check(conclusive >= 6, "enough fixtures were doubly conclusive");
    c.check(qindep >= 2, "Q-independence exercised on stable fixtures");
    tr["c8"] = {{"processed", processed}, {"conclusive", conclusive},
                {"agreements", agreements}, {"rows", rows}};
}

/* criterion 9: engine vs dense oracle, dimension by dimension */
void criterion9(Worlds& W, Criterion& c, json& tr) {
    json rows = json::array();
    auto compare = [&](const std::string& name, const auto& M, const auto& N, int maxi) {
        auto dM = artinian_from_fp(M);
        auto dN = artinian_from_fp(N);
        auto ext_oracle = dense_ext_dims(dM, dN, maxi);
        auto tor_oracle = dense_tor_dims(dM, dN, maxi);
        auto exts = ext_range(M, N, 0, maxi);
        bool ok = true;
        for (int i = 0; i <= maxi; ++i) {
            auto hs = exts[i].value().hilbert();
            auto got = hs.is_zero() ? std::map<int, long long>{} : hs.finite_dimensions();
            if (got != ext_oracle[i]) ok = false;
            auto ths = tor_module(M, N, i).hilbert();
            auto tg = ths.is_zero() ? std::map<int, long long>{} : ths.finite_dimensions();
            if (tg != tor_oracle[i]) ok = false;
        }
        // Hom both ways and grade
        auto hom_dims = dense_hom(dM, dN).dims_by_degree();
        auto hs0 = hom_module(M, N).module.hilbert();
        auto hom_got = hs0.is_zero() ? std::map<int, long long>{} : hs0.finite_dimensions();
        if (hom_got != hom_dims) ok = false;
        auto ge = grade(M, N, maxi);
        int go = dense_grade(dM, dN, maxi);
        bool gok = (ge.found ? ge.value : -1) == go;
        c.check(ok, name + ": Ext/Tor/Hom dimensions agree with the dense oracle");
        c.check(gok, name + ": grade agrees with the dense oracle");
        rows.push_back({{"pair", name}, {"ext_tor_hom", ok}, {"grade", gok}});
    };
    std::vector<std::pair<std::string, FPModule<QQ>*>> lvl1 = {
        {"R", &W.t1.free1}, {"k", &W.t1.k}, {"omega", &W.t1.omega}};
    for (auto& [na, Ma] : lvl1)
        for (auto& [nb, Mb] : lvl1) compare("level1 " + na + "/" + nb, *Ma, *Mb, 3);
    std::vector<std::pair<std::string, FPModule<PrimeField>*>> lvl2 = {
        {"S", &W.t2.free1}, {"C1", &W.t2.c1}, {"C2", &W.t2.c2}, {"omegaS", &W.t2.omega}};
    for (auto& [na, Ma] : lvl2) {
        compare("level2 " + na + "/S", *Ma, W.t2.free1, 2);
        compare("level2 k/" + na, W.t2.k, *Ma, 2);
    }
    // generated fixtures too
    auto fixtures = linkage_property_fixtures(QQ{});
    for (size_t i = 0; i < fixtures.size(); i += 3)
        compare("gen " + fixtures[i].name, fixtures[i].module, fixtures[i].coefficient, 2);
    tr["c9"] = rows;
}

json run_all(std::vector<Criterion>& crits) {
    json tr;
    Worlds W;
    std::vector<std::pair<std::string, void (*)(Worlds&, Criterion&, json&)>> table;
    auto run = [&](const std::string& id, const std::string& title, auto&& fn) {
        Criterion c{id, title};
        try {
            fn(c, tr);
        } catch (const Error& e) {
            c.pass = false;
            c.notes.push_back(std::string("exception: ") + e.code + ": " + e.what());
        }
        crits.push_back(std::move(c));
    };
    run("criterion-01", "Koszul fixture (Example 2.1)",
        [&](Criterion& c, json& t) { criterion1(W, c, t); });
    run("criterion-02", "intermediate-dimension chain (Thm 2.6, Cors 2.7-2.8)",
        [&](Criterion& c, json& t) { criterion2(W, c, t); });
    run("criterion-03", "Auslander-Bridger, corrected sign + flagged diagnostic",
        [&](Criterion& c, json& t) { criterion3(W, c, t); });
    run("criterion-04", "Lemma 3.1 four-term sequences across grades 0,1,2",
        [&](Criterion& c, json& t) { criterion4(W, c, t); });
    run("criterion-05", "Thm 3.6 clause agreement on certified fixtures",
        [&](Criterion& c, json& t) { criterion5(W, c, t); });
    run("criterion-06", "Example 4.1 level 1",
        [&](Criterion& c, json& t) { criterion6(W, c, t); });
    run("criterion-07", "Example 4.1 level 2",
        [&](Criterion& c, json& t) { criterion7(W, c, t); });
    run("criterion-08", "linkage property suite (Props 4.4-4.7, Thm 4.8)",
        [&](Criterion& c, json& t) { criterion8(c, t); });
    run("criterion-09", "engine vs dense-oracle equivalence",
        [&](Criterion& c, json& t) { criterion9(W, c, t); });
    (void)table;
    return tr;
}

}  // namespace

int main() {
    std::vector<Criterion> crits;
    json first = run_all(crits);
    // criterion 10: rerun everything with the same seed; transcripts must match
    {
        Criterion c{"criterion-10", "determinism: rerun is byte-identical"};
        std::vector<Criterion> again;
        json second = run_all(again);
        c.check(first.dump() == second.dump(), "verdict/certificate transcripts identical");
        crits.push_back(std::move(c));
    }
    int failed = 0;
    for (auto& c : crits) {
        std::cout << "[" << c.id << "] " << (c.pass ? "PASS" : "FAIL") << " — " << c.title << "\n";
        for (auto& n : c.notes) std::cout << "    " << n << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criterion(s) failed")
              << "\n";
    return failed;
}
