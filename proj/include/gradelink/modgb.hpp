#ifndef GRADELINK_MODGB_HPP
#define GRADELINK_MODGB_HPP

#include <set>

#include "gradelink/modvec.hpp"

namespace gradelink {

/* Buchberger engine for submodules of a graded free module over
 * k[x_1..x_n]/I. The ideal I enters through "ring reducers" (its reduced
 * Groebner basis), which act in every component and are never materialized
 * as generator columns. With tracking enabled, every basis element carries
 * its expression in the original generators; that yields normal forms with
 * lifts and a generating set of the syzygy module over the quotient ring
 * (zero reductions of S-pairs, including pairs against ring reducers).
 *
 * Pair-dropping criteria are disabled while tracking: a skipped pair is a
 * skipped syzygy (the Koszul syzygy of a coprime pair is not in the span of
 * the others; see the (x,y) kernel over k[x,y]).
 *
 * Generators must be homogeneous for the given shifts; S-pairs above the
 * degree cap are dropped and flagged, never silently mis-reduced. */
template <class K>
class ModuleGB {
  public:
    struct Elem {
        ModVec<K> v;     // main block
        ModVec<K> tail;  // expression in the original generators
        int lcomp = 0;   // cached lead
        Mono lmono;
        typename K::Elem lcoeff;
    };

    ModuleGB(const PolyRing<K>& R, int ncomps, std::vector<int> shifts,
             std::vector<ModVec<K>> gens, const std::vector<Poly<K>>* ring_reducers,
             bool track, int degree_cap)
        : R_(R), ncomps_(ncomps), shifts_(std::move(shifts)), ring_(ring_reducers),
          track_(track), cap_(degree_cap) {
        if (int(shifts_.size()) != ncomps_) throw Error("internal", "shift/comp mismatch");
        gens_ = std::move(gens);
        build();
    }

    bool truncated() const { return truncated_; }
    const std::vector<Elem>& basis() const { return basis_; }

    ModVec<K> nf(const ModVec<K>& w) const {
        ModVec<K> rest = w;
        return reduce(rest, nullptr);
    }

    /* Returns (r, t) with w ≡ r + Σ t_i·g_i (mod I·F); r is the canonical
     * normal form. When r = 0 this expresses w in the generators. */
    std::pair<ModVec<K>, ModVec<K>> nf_with_lift(const ModVec<K>& w) const {
        if (!track_) throw Error("internal", "nf_with_lift requires tracking");
        ModVec<K> rest = w, tail;
        ModVec<K> r = reduce(rest, &tail);
        // invariant gives r ≡ w + Σ tail_i g_i, so w ≡ r - Σ tail_i g_i
        return {std::move(r), mv_neg(R_, tail)};
    }

    /* Expression of w in the generators when w lies in the submodule. */
    std::optional<std::vector<Poly<K>>> express(const ModVec<K>& w) const {
        auto [r, t] = nf_with_lift(w);
        if (!r.is_zero()) return std::nullopt;
        std::vector<Poly<K>> out(gens_.size());
        for (auto& p : t.c) out[p.first] = nf_ring(p.second);
        return out;
    }

    /* Generators of the syzygy module of the original columns over the
     * quotient ring (entries reduced mod I, canonical). */
    std::vector<ModVec<K>> syzygies() const {
        std::vector<ModVec<K>> out;
        out.reserve(syz_.size());
        for (auto& s : syz_) {
            ModVec<K> t;
            for (auto& p : s.c) {
                Poly<K> q = nf_ring(p.second);
                if (!q.is_zero()) t.c.push_back({p.first, std::move(q)});
            }
            if (!t.is_zero()) out.push_back(std::move(t));
        }
        return out;
    }

    std::vector<ModVec<K>> reduced_basis() const {
        std::vector<ModVec<K>> out;
        out.reserve(basis_.size());
        for (auto& b : basis_) out.push_back(b.v);
        return out;
    }

    /* Incremental completion for membership filtering. The new generator is
     * not tracked, so this is only available without syzygy bookkeeping; the
     * basis stays a (not re-autoreduced) Groebner basis, which keeps normal
     * forms canonical. */
    void add_generator(const ModVec<K>& g) {
        if (track_) throw Error("internal", "add_generator unsupported with tracking");
        ModVec<K> rest = g;
        ModVec<K> r = reduce(rest, nullptr);
        if (r.is_zero()) return;
        add_basis_elem(std::move(r), {});
        drain();
    }

  private:
    const PolyRing<K>& R_;
    int ncomps_;
    std::vector<int> shifts_;
    std::vector<ModVec<K>> gens_;
    const std::vector<Poly<K>>* ring_;
    bool track_;
    int cap_;
    bool truncated_ = false;

    std::vector<Elem> basis_;
    std::vector<std::vector<int>> by_comp_;
    std::vector<ModVec<K>> syz_;

    struct Pair {
        int deg;
        int i, j;  // j == -1-k: pair of basis i with ring reducer k
        Mono lcm;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> queue_;

    Poly<K> nf_ring(const Poly<K>& f) const {
        if (!ring_ || ring_->empty()) return f;
        Poly<K> rest = f;
        std::vector<std::pair<Mono, typename K::Elem>> done;
        const int n = R_.nvars();
        while (!rest.is_zero()) {
            const Mono lm = rest.lead_mono();
            bool reduced = false;
            for (auto& g : *ring_) {
                if (g.lead_mono().divides(lm, n)) {
                    auto coef = R_.field.neg(R_.field.div(rest.lead_coeff(), g.lead_coeff()));
                    rest = add(R_, rest, mul_term(R_, g, lm.div(g.lead_mono(), n), coef));
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                done.push_back(rest.t.front());
                rest.t.erase(rest.t.begin());
            }
        }
        Poly<K> out;
        out.t = std::move(done);  // extracted in strictly decreasing order
        return out;
    }

    /* Fully reduce `rest`; returns the normal form. Irreducible lead terms
     * are peeled off in strictly decreasing module order, so the result can
     * be assembled by appending. Maintains (result+rest) + Σ tail·g constant
     * modulo (submodule-span + I·F) over reduction steps. */
    ModVec<K> reduce(ModVec<K>& rest, ModVec<K>* tail, int masked = -1) const {
        const int n = R_.nvars();
        std::vector<std::pair<int, Poly<K>>> done_terms;  // per-comp append
        auto append_done = [&](int comp, const Mono& m, const typename K::Elem& c) {
            for (auto& p : done_terms)
                if (p.first == comp) {
                    p.second.t.push_back({m, c});
                    return;
                }
            Poly<K> q;
            q.t.push_back({m, c});
            done_terms.push_back({comp, std::move(q)});
        };
        while (!rest.is_zero()) {
            auto lt = mv_lead(R_, rest);
            bool reduced = false;
            if (ring_) {
                for (auto& g : *ring_) {
                    if (g.lead_mono().divides(lt.mono, n)) {
                        auto coef = R_.field.neg(R_.field.div(lt.coeff, g.lead_coeff()));
                        ModVec<K> gv;
                        gv.set(lt.comp, g);
                        rest = mv_axpy(R_, rest, coef, lt.mono.div(g.lead_mono(), n), gv);
                        reduced = true;
                        break;
                    }
                }
            }
            if (!reduced) {
                for (int bi : by_comp_[lt.comp]) {
                    if (bi == masked) continue;
                    const Elem& b = basis_[bi];
                    if (b.lmono.divides(lt.mono, n)) {
                        auto coef = R_.field.neg(R_.field.div(lt.coeff, b.lcoeff));
                        Mono delta = lt.mono.div(b.lmono, n);
                        rest = mv_axpy(R_, rest, coef, delta, b.v);
                        if (tail) *tail = mv_axpy(R_, *tail, coef, delta, b.tail);
                        reduced = true;
                        break;
                    }
                }
            }
            if (!reduced) {
                append_done(lt.comp, lt.mono, lt.coeff);
                for (auto& p : rest.c)
                    if (p.first == lt.comp) {
                        p.second = sub(R_, p.second, poly_term(R_, lt.mono, lt.coeff));
                        break;
                    }
                rest.c.erase(std::remove_if(rest.c.begin(), rest.c.end(),
                                            [](const auto& p) { return p.second.is_zero(); }),
                             rest.c.end());
            }
        }
        std::sort(done_terms.begin(), done_terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ModVec<K> out;
        out.c = std::move(done_terms);
        return out;
    }

    void push_pairs(int bi) {
        const int n = R_.nvars();
        const Elem& b = basis_[bi];
        for (int bj : by_comp_[b.lcomp]) {
            if (bj == bi) continue;
            const Elem& c = basis_[bj];
            Mono L = Mono::lcm(b.lmono, c.lmono, n);
            // product criterion: safe only without syzygy tracking, in the
            // pure ideal case
            if (!track_ && ncomps_ == 1 && !ring_ && Mono::coprime(b.lmono, c.lmono, n)) continue;
            int deg = R_.degree(L) + shifts_[b.lcomp];
            if (cap_ > 0 && deg > cap_) { truncated_ = true; continue; }
            queue_.insert({deg, std::min(bi, bj), std::max(bi, bj), L});
        }
        if (ring_) {
            for (size_t k = 0; k < ring_->size(); ++k) {
                Mono L = Mono::lcm(b.lmono, (*ring_)[k].lead_mono(), n);
                int deg = R_.degree(L) + shifts_[b.lcomp];
                if (cap_ > 0 && deg > cap_) { truncated_ = true; continue; }
                queue_.insert({deg, bi, -1 - int(k), L});
            }
        }
    }

    void add_basis_elem(ModVec<K> v, ModVec<K> tail) {
        Elem e;
        auto lt = mv_lead(R_, v);
        e.v = std::move(v);
        e.tail = std::move(tail);
        e.lcomp = lt.comp;
        e.lmono = lt.mono;
        e.lcoeff = lt.coeff;
        int idx = int(basis_.size());
        basis_.push_back(std::move(e));
        by_comp_[basis_[idx].lcomp].push_back(idx);
        push_pairs(idx);
    }

    void build() {
        by_comp_.assign(ncomps_, {});
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (auto d = mv_homogeneous_degree(R_, gens_[i], shifts_); !d)
                throw Error("inhomogeneous", "module generator " + std::to_string(i) +
                                                 " is not homogeneous");
            // seed tail = e_i so the invariant v ≡ Σ tail·g holds from the start
            ModVec<K> tail;
            if (track_) tail = mv_unit(int(i), R_);
            ModVec<K> rest = gens_[i];
            ModVec<K> r = reduce(rest, track_ ? &tail : nullptr);
            if (r.is_zero()) {
                if (track_ && !tail.is_zero()) syz_.push_back(std::move(tail));
                continue;
            }
            add_basis_elem(std::move(r), std::move(tail));
        }
        drain();
        autoreduce();
    }

    void drain() {
        const int n = R_.nvars();
        while (!queue_.empty()) {
            Pair pr = *queue_.begin();
            queue_.erase(queue_.begin());
            if (!track_ && pr.j >= 0) {
                // chain criterion (disabled while tracking syzygies)
                const Elem& a = basis_[pr.i];
                bool skip = false;
                for (int bk : by_comp_[a.lcomp]) {
                    if (bk == pr.i || bk == pr.j) continue;
                    if (!basis_[bk].lmono.divides(pr.lcm, n)) continue;
                    bool ik = false, jk = false;
                    for (auto& q : queue_) {
                        if (q.i == std::min(pr.i, bk) && q.j == std::max(pr.i, bk)) ik = true;
                        if (q.i == std::min(pr.j, bk) && q.j == std::max(pr.j, bk)) jk = true;
                    }
                    if (!ik && !jk) { skip = true; break; }
                }
                if (skip) continue;
            }
            ModVec<K> s, tail;
            if (pr.j >= 0) {
                const Elem& a = basis_[pr.i];
                const Elem& b = basis_[pr.j];
                Mono da = pr.lcm.div(a.lmono, n), db = pr.lcm.div(b.lmono, n);
                auto ca = R_.field.inv(a.lcoeff);
                auto cb = R_.field.neg(R_.field.inv(b.lcoeff));
                s = mv_axpy(R_, mv_axpy(R_, ModVec<K>{}, ca, da, a.v), cb, db, b.v);
                if (track_)
                    tail = mv_axpy(R_, mv_axpy(R_, ModVec<K>{}, ca, da, a.tail), cb, db, b.tail);
            } else {
                const Elem& a = basis_[pr.i];
                const Poly<K>& g = (*ring_)[size_t(-1 - pr.j)];
                Mono da = pr.lcm.div(a.lmono, n), dg = pr.lcm.div(g.lead_mono(), n);
                auto ca = R_.field.inv(a.lcoeff);
                auto cg = R_.field.neg(R_.field.inv(g.lead_coeff()));
                ModVec<K> gv;
                gv.set(a.lcomp, g);
                s = mv_axpy(R_, mv_axpy(R_, ModVec<K>{}, ca, da, a.v), cg, dg, gv);
                if (track_) tail = mv_axpy(R_, ModVec<K>{}, ca, da, a.tail);
            }
            if (s.is_zero()) {
                if (track_ && !tail.is_zero()) syz_.push_back(std::move(tail));
                continue;
            }
            ModVec<K> r = reduce(s, track_ ? &tail : nullptr);
            if (r.is_zero()) {
                if (track_ && !tail.is_zero()) syz_.push_back(std::move(tail));
                continue;
            }
            add_basis_elem(std::move(r), std::move(tail));
        }
    }

    void autoreduce() {
        const int n = R_.nvars();
        std::vector<bool> keep(basis_.size(), true);
        for (size_t i = 0; i < basis_.size(); ++i) {
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j || !keep[j]) continue;
                if (basis_[j].lcomp == basis_[i].lcomp &&
                    basis_[j].lmono.divides(basis_[i].lmono, n)) {
                    if (!(basis_[i].lmono == basis_[j].lmono) || j < i) { keep[i] = false; break; }
                }
            }
            if (keep[i] && ring_) {
                for (auto& g : *ring_)
                    if (g.lead_mono().divides(basis_[i].lmono, n)) { keep[i] = false; break; }
            }
        }
        std::vector<Elem> kept;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (keep[i]) kept.push_back(std::move(basis_[i]));
        basis_ = std::move(kept);
        rebuild_buckets();
        for (size_t i = 0; i < basis_.size(); ++i) {
            Elem cur = std::move(basis_[i]);
            ModVec<K> lead_part;
            lead_part.set(cur.lcomp, poly_term(R_, cur.lmono, cur.lcoeff));
            ModVec<K> rest = mv_add(R_, cur.v, mv_neg(R_, lead_part));
            basis_[i].v = ModVec<K>{};  // mask self
            ModVec<K> tail = cur.tail;
            ModVec<K> red = reduce(rest, track_ ? &tail : nullptr, int(i));
            cur.v = mv_add(R_, lead_part, red);
            cur.tail = std::move(tail);
            auto inv = R_.field.inv(cur.lcoeff);
            cur.v = mv_scale(R_, cur.v, inv);
            if (track_) cur.tail = mv_scale(R_, cur.tail, inv);
            auto lt = mv_lead(R_, cur.v);
            cur.lcomp = lt.comp; cur.lmono = lt.mono; cur.lcoeff = lt.coeff;
            basis_[i] = std::move(cur);
        }
        std::vector<int> order(basis_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return mt_cmp(R_, basis_[a].lcomp, basis_[a].lmono, basis_[b].lcomp, basis_[b].lmono) < 0;
        });
        std::vector<Elem> sorted;
        sorted.reserve(basis_.size());
        for (int idx : order) sorted.push_back(std::move(basis_[idx]));
        basis_ = std::move(sorted);
        rebuild_buckets();
    }

    void rebuild_buckets() {
        by_comp_.assign(ncomps_, {});
        for (size_t i = 0; i < basis_.size(); ++i) by_comp_[basis_[i].lcomp].push_back(int(i));
    }
};

}  // namespace gradelink

#endif
