#ifndef GRADELINK_MODVEC_HPP
#define GRADELINK_MODVEC_HPP

#include "gradelink/poly.hpp"

namespace gradelink {

/* Element of a free module ⊕ R·e_c: sparse map component -> polynomial,
 * components sorted ascending, no zero entries. */
template <class K>
struct ModVec {
    std::vector<std::pair<int, Poly<K>>> c;

    bool is_zero() const { return c.empty(); }
    const Poly<K>* at(int comp) const {
        for (auto& p : c)
            if (p.first == comp) return &p.second;
        return nullptr;
    }
    void set(int comp, Poly<K> p) {
        auto it = std::lower_bound(c.begin(), c.end(), comp,
                                   [](const auto& a, int v) { return a.first < v; });
        if (it != c.end() && it->first == comp) {
            if (p.is_zero()) c.erase(it);
            else it->second = std::move(p);
            return;
        }
        if (p.is_zero()) return;
        c.insert(it, {comp, std::move(p)});
    }
};

template <class K>
ModVec<K> mv_unit(int comp, const PolyRing<K>& R) {
    ModVec<K> v;
    v.set(comp, poly_const(R, R.field.one()));
    return v;
}

template <class K>
ModVec<K> mv_add(const PolyRing<K>& R, const ModVec<K>& a, const ModVec<K>& b) {
    ModVec<K> r;
    size_t i = 0, j = 0;
    while (i < a.c.size() && j < b.c.size()) {
        if (a.c[i].first < b.c[j].first) r.c.push_back(a.c[i++]);
        else if (a.c[i].first > b.c[j].first) r.c.push_back(b.c[j++]);
        else {
            Poly<K> s = add(R, a.c[i].second, b.c[j].second);
            if (!s.is_zero()) r.c.push_back({a.c[i].first, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.c.size(); ++i) r.c.push_back(a.c[i]);
    for (; j < b.c.size(); ++j) r.c.push_back(b.c[j]);
    return r;
}

/* r = a + coef * x^m * b */
template <class K>
ModVec<K> mv_axpy(const PolyRing<K>& R, const ModVec<K>& a, const typename K::Elem& coef,
                  const Mono& m, const ModVec<K>& b) {
    ModVec<K> scaled;
    for (auto& p : b.c) {
        Poly<K> q = mul_term(R, p.second, m, coef);
        if (!q.is_zero()) scaled.c.push_back({p.first, std::move(q)});
    }
    return mv_add(R, a, scaled);
}

template <class K>
ModVec<K> mv_scale(const PolyRing<K>& R, const ModVec<K>& a, const typename K::Elem& coef) {
    ModVec<K> r;
    for (auto& p : a.c) {
        Poly<K> q = scale(R, p.second, coef);
        if (!q.is_zero()) r.c.push_back({p.first, std::move(q)});
    }
    return r;
}

template <class K>
ModVec<K> mv_neg(const PolyRing<K>& R, const ModVec<K>& a) {
    return mv_scale(R, a, R.field.neg(R.field.one()));
}

template <class K>
ModVec<K> mv_mul_poly(const PolyRing<K>& R, const ModVec<K>& a, const Poly<K>& f) {
    ModVec<K> r;
    for (auto& p : a.c) {
        Poly<K> q = mul(R, p.second, f);
        if (!q.is_zero()) r.c.push_back({p.first, std::move(q)});
    }
    return r;
}

template <class K>
bool mv_eq(const PolyRing<K>& R, const ModVec<K>& a, const ModVec<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i].first != b.c[i].first || !eq(R, a.c[i].second, b.c[i].second)) return false;
    return true;
}

/* Module term order: ring order on monomials, ties broken by component
 * (lower component is greater). Lead term of v is the max over entries. */
template <class K>
struct ModTermRef {
    int comp;
    Mono mono;
    typename K::Elem coeff;
};

template <class K>
int mt_cmp(const PolyRing<K>& R, int c1, const Mono& m1, int c2, const Mono& m2) {
    int c = R.order.cmp(m1, m2, R.nvars());
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
}

template <class K>
ModTermRef<K> mv_lead(const PolyRing<K>& R, const ModVec<K>& v) {
    const std::pair<int, Poly<K>>* best = nullptr;
    for (auto& p : v.c) {
        if (!best || mt_cmp(R, p.first, p.second.lead_mono(), best->first, best->second.lead_mono()) > 0)
            best = &p;
    }
    return {best->first, best->second.lead_mono(), best->second.lead_coeff()};
}

/* Weighted degree of a homogeneous vector under generator shifts; nullopt if
 * entries are inhomogeneous or degrees disagree across components. */
template <class K>
std::optional<int> mv_homogeneous_degree(const PolyRing<K>& R, const ModVec<K>& v,
                                         const std::vector<int>& shifts) {
    std::optional<int> deg;
    for (auto& p : v.c) {
        for (auto& tm : p.second.t) {
            int d = R.degree(tm.first) + shifts[p.first];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    }
    return deg ? deg : std::optional<int>(0);
}

}  // namespace gradelink

#endif
