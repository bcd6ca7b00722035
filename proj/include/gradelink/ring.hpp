#ifndef GRADELINK_RING_HPP
#define GRADELINK_RING_HPP

#include <memory>

#include "gradelink/modgb.hpp"

namespace gradelink {

/* A presented graded ring k[x_1..x_n]/I, local at the irrelevant ideal.
 * The reduced Groebner basis of I is computed once and cached; it is the
 * ring-reducer set for every module computation over the quotient. */
template <class K>
class QuotientRing {
  public:
    PolyRing<K> poly;
    std::vector<Poly<K>> ideal_gens;
    int degree_cap;  // default cap for Groebner/resolution work

    QuotientRing(PolyRing<K> pr, std::vector<Poly<K>> gens, int cap = 32)
        : poly(std::move(pr)), ideal_gens(std::move(gens)), degree_cap(cap) {
        for (auto& g : ideal_gens)
            if (!homogeneous_degree(poly, g))
                throw Error("inhomogeneous", "ideal generator not homogeneous: " + poly_str(poly, g));
        compute_gb();
    }

    const std::vector<Poly<K>>& groebner() const { return gb_; }
    bool gb_truncated() const { return gb_truncated_; }

    /* Canonical representative modulo I. */
    Poly<K> normal_form(const Poly<K>& f) const {
        Poly<K> rest = f;
        std::vector<std::pair<Mono, typename K::Elem>> done;
        const int n = poly.nvars();
        while (!rest.is_zero()) {
            const Mono lm = rest.lead_mono();
            bool reduced = false;
            for (auto& g : gb_) {
                if (g.lead_mono().divides(lm, n)) {
                    auto coef = poly.field.neg(poly.field.div(rest.lead_coeff(), g.lead_coeff()));
                    rest = add(poly, rest, mul_term(poly, g, lm.div(g.lead_mono(), n), coef));
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
        out.t = std::move(done);
        return out;
    }

    bool is_zero_mod(const Poly<K>& f) const { return normal_form(f).is_zero(); }

    Poly<K> parse(const std::string& s) const { return normal_form(poly_parse(poly, s)); }
    std::string str(const Poly<K>& f) const { return poly_str(poly, f); }

    /* Standard monomials of weighted degree d (not in the lead-term ideal). */
    std::vector<Mono> standard_monomials(int d) const {
        std::vector<Mono> out;
        Mono cur;
        enumerate(cur, 0, d, out);
        return out;
    }

  private:
    std::vector<Poly<K>> gb_;
    bool gb_truncated_ = false;

    void compute_gb() {
        if (ideal_gens.empty()) return;
        std::vector<ModVec<K>> cols;
        for (auto& g : ideal_gens) {
            ModVec<K> v;
            v.set(0, g);
            if (!v.is_zero()) cols.push_back(std::move(v));
        }
        ModuleGB<K> gb(poly, 1, {0}, std::move(cols), nullptr, false, degree_cap);
        gb_truncated_ = gb.truncated();
        for (auto& v : gb.reduced_basis()) gb_.push_back(*v.at(0));
    }

    void enumerate(Mono& cur, int var, int remaining, std::vector<Mono>& out) const {
        const int n = poly.nvars();
        if (var == n) {
            if (remaining != 0) return;
            for (auto& g : gb_)
                if (g.lead_mono().divides(cur, n)) return;
            out.push_back(cur);
            return;
        }
        int w = poly.grading[var];
        for (int e = 0; e * w <= remaining; ++e) {
            cur.e[var] = uint8_t(e);
            enumerate(cur, var + 1, remaining - e * w, out);
        }
        cur.e[var] = 0;
    }
};

/* Reduced Groebner basis of a homogeneous ideal, canonical for the order. */
template <class K>
std::vector<Poly<K>> groebner_basis(const PolyRing<K>& R, const std::vector<Poly<K>>& gens,
                                    int degree_cap = 0, bool* truncated = nullptr) {
    std::vector<ModVec<K>> cols;
    for (auto& g : gens) {
        if (!homogeneous_degree(R, g))
            throw Error("inhomogeneous", "generator not homogeneous: " + poly_str(R, g));
        if (g.is_zero()) continue;
        ModVec<K> v;
        v.set(0, g);
        cols.push_back(std::move(v));
    }
    ModuleGB<K> gb(R, 1, {0}, std::move(cols), nullptr, false, degree_cap);
    if (truncated) *truncated = gb.truncated();
    std::vector<Poly<K>> out;
    for (auto& v : gb.reduced_basis()) out.push_back(*v.at(0));
    return out;
}

}  // namespace gradelink

#endif
