#ifndef GRADELINK_POLY_HPP
#define GRADELINK_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradelink/monomial.hpp"

namespace gradelink {

/* The ambient polynomial ring k[x_1..x_n]: field, names, order, grading. */
template <class K>
struct PolyRing {
    K field;
    std::vector<std::string> var_names;
    MonomialOrder order;
    std::vector<int> grading;  // positive weights, one per variable

    int nvars() const { return int(var_names.size()); }

    PolyRing(K f, std::vector<std::string> names, MonomialOrder ord, std::vector<int> weights = {})
        : field(std::move(f)), var_names(std::move(names)), order(std::move(ord)), grading(std::move(weights)) {
        if (nvars() > kMaxVars)
            throw Error("too-many-vars", "at most " + std::to_string(kMaxVars) + " variables supported");
        if (grading.empty()) grading.assign(var_names.size(), 1);
        for (int w : grading)
            if (w <= 0) throw Error("bad-grading", "grading weights must be positive");
        if (order.kind == OrderKind::Weighted && order.weights.empty()) order.weights = grading;
    }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (var_names[i] == name) return i;
        throw Error("unknown-variable", "unknown variable: " + name);
    }
    int degree(const Mono& m) const { return m.weighted_degree(grading); }
};

/* Sparse polynomial: terms sorted strictly descending in the ring order,
 * no zero coefficients. The zero polynomial has no terms. */
template <class K>
struct Poly {
    using Elem = typename K::Elem;
    std::vector<std::pair<Mono, Elem>> t;

    bool is_zero() const { return t.empty(); }
    const Mono& lead_mono() const { return t.front().first; }
    const Elem& lead_coeff() const { return t.front().second; }
    size_t size() const { return t.size(); }
};

template <class K>
Poly<K> poly_zero() { return Poly<K>{}; }

template <class K>
Poly<K> poly_const(const PolyRing<K>& R, const typename K::Elem& c) {
    Poly<K> p;
    if (!R.field.is_zero(c)) p.t.push_back({Mono::unit(), c});
    return p;
}

template <class K>
Poly<K> poly_term(const PolyRing<K>& R, const Mono& m, const typename K::Elem& c) {
    Poly<K> p;
    if (!R.field.is_zero(c)) p.t.push_back({m, c});
    return p;
}

template <class K>
Poly<K> poly_var(const PolyRing<K>& R, int i) {
    return poly_term(R, Mono::var(i), R.field.one());
}

/* p + q by merge. */
template <class K>
Poly<K> add(const PolyRing<K>& R, const Poly<K>& p, const Poly<K>& q) {
    Poly<K> r;
    r.t.reserve(p.t.size() + q.t.size());
    size_t i = 0, j = 0;
    const int n = R.nvars();
    while (i < p.t.size() && j < q.t.size()) {
        int c = R.order.cmp(p.t[i].first, q.t[j].first, n);
        if (c > 0) r.t.push_back(p.t[i++]);
        else if (c < 0) r.t.push_back(q.t[j++]);
        else {
            auto s = R.field.add(p.t[i].second, q.t[j].second);
            if (!R.field.is_zero(s)) r.t.push_back({p.t[i].first, s});
            ++i; ++j;
        }
    }
    for (; i < p.t.size(); ++i) r.t.push_back(p.t[i]);
    for (; j < q.t.size(); ++j) r.t.push_back(q.t[j]);
    return r;
}

template <class K>
Poly<K> neg(const PolyRing<K>& R, const Poly<K>& p) {
    Poly<K> r = p;
    for (auto& tm : r.t) tm.second = R.field.neg(tm.second);
    return r;
}

template <class K>
Poly<K> sub(const PolyRing<K>& R, const Poly<K>& p, const Poly<K>& q) {
    return add(R, p, neg(R, q));
}

/* p * (c * m): order-preserving, so a straight map. */
template <class K>
Poly<K> mul_term(const PolyRing<K>& R, const Poly<K>& p, const Mono& m, const typename K::Elem& c) {
    Poly<K> r;
    if (R.field.is_zero(c)) return r;
    r.t.reserve(p.t.size());
    for (auto& tm : p.t) {
        auto prod = R.field.mul(tm.second, c);
        if (!R.field.is_zero(prod)) r.t.push_back({tm.first.mul(m, R.nvars()), prod});
    }
    return r;
}

template <class K>
Poly<K> scale(const PolyRing<K>& R, const Poly<K>& p, const typename K::Elem& c) {
    return mul_term(R, p, Mono::unit(), c);
}

template <class K>
Poly<K> mul(const PolyRing<K>& R, const Poly<K>& p, const Poly<K>& q) {
    // term-map accumulation; fine at this scale
    struct Cmp {
        const PolyRing<K>* R;
        bool operator()(const Mono& a, const Mono& b) const { return R->order.cmp(a, b, R->nvars()) > 0; }
    };
    std::map<Mono, typename K::Elem, Cmp> acc(Cmp{&R});
    const int n = R.nvars();
    for (auto& a : p.t)
        for (auto& b : q.t) {
            Mono m = a.first.mul(b.first, n);
            auto prod = R.field.mul(a.second, b.second);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, prod);
            else {
                it->second = R.field.add(it->second, prod);
                if (R.field.is_zero(it->second)) acc.erase(it);
            }
        }
    Poly<K> r;
    r.t.assign(acc.begin(), acc.end());
    return r;
}

template <class K>
bool eq(const PolyRing<K>& R, const Poly<K>& p, const Poly<K>& q) {
    if (p.t.size() != q.t.size()) return false;
    for (size_t i = 0; i < p.t.size(); ++i)
        if (!(p.t[i].first == q.t[i].first) || !R.field.eq(p.t[i].second, q.t[i].second)) return false;
    return true;
}

/* Homogeneity: all terms share one weighted degree; returns it (0 for p = 0). */
template <class K>
std::optional<int> homogeneous_degree(const PolyRing<K>& R, const Poly<K>& p) {
    if (p.t.empty()) return 0;
    int d = R.degree(p.t.front().first);
    for (auto& tm : p.t)
        if (R.degree(tm.first) != d) return std::nullopt;
    return d;
}

template <class K>
Poly<K> monic(const PolyRing<K>& R, const Poly<K>& p) {
    if (p.is_zero()) return p;
    return scale(R, p, R.field.inv(p.lead_coeff()));
}

/* ---------- parsing and printing ---------- */

template <class K>
std::string mono_str(const PolyRing<K>& R, const Mono& m) {
    std::string s;
    for (int i = 0; i < R.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += R.var_names[i];
        if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
    }
    return s;
}

template <class K>
std::string poly_str(const PolyRing<K>& R, const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& tm : p.t) {
        std::string c = R.field.str(tm.second);
        bool negative = !c.empty() && c[0] == '-';
        if (first) {
            if (negative) { s += "-"; c = c.substr(1); }
        } else {
            s += negative ? " - " : " + ";
            if (negative) c = c.substr(1);
        }
        std::string ms = mono_str(R, tm.first);
        if (ms.empty()) s += c;
        else if (c == "1") s += ms;
        else s += c + "*" + ms;
        first = false;
    }
    return s;
}

/* Grammar: sum of terms "c", "c*x^2*y", "x*y", with integer or a/b rational
 * coefficients; '*' between factors may be omitted around whitespace-free
 * juxtaposition is NOT allowed — factors are separated by '*'. */
template <class K>
Poly<K> poly_parse(const PolyRing<K>& R, const std::string& input) {
    Poly<K> result;
    size_t i = 0;
    auto skip_ws = [&] { while (i < input.size() && isspace(uint8_t(input[i]))) ++i; };
    skip_ws();
    if (i == input.size()) return result;  // empty string is 0
    bool first = true;
    while (true) {
        skip_ws();
        if (i == input.size()) {
            if (first) break;
            throw Error("parse-error", "dangling sign in polynomial: " + input);
        }
        int sign = 1;
        while (i < input.size() && (input[i] == '+' || input[i] == '-')) {
            if (input[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        if (i == input.size()) {
            if (first && sign == 1) break;
            throw Error("parse-error", "dangling sign in polynomial: " + input);
        }
        // one term: factors joined by '*'
        typename K::Elem coeff = R.field.from_int(sign);
        Mono m = Mono::unit();
        bool expect_factor = true;
        bool saw_factor = false;
        while (expect_factor) {
            skip_ws();
            if (i < input.size() && (isdigit(uint8_t(input[i])))) {
                size_t j = i;
                while (j < input.size() && (isdigit(uint8_t(input[j])))) ++j;
                // optional /denominator
                if (j < input.size() && input[j] == '/') {
                    ++j;
                    while (j < input.size() && isdigit(uint8_t(input[j]))) ++j;
                }
                coeff = R.field.mul(coeff, R.field.parse(input.substr(i, j - i)));
                i = j;
            } else if (i < input.size() && (isalpha(uint8_t(input[i])) || input[i] == '_')) {
                size_t j = i;
                while (j < input.size() && (isalnum(uint8_t(input[j])) || input[j] == '_')) ++j;
                int vi = R.var_index(input.substr(i, j - i));
                i = j;
                int exp = 1;
                skip_ws();
                if (i < input.size() && input[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t k2 = i;
                    while (k2 < input.size() && isdigit(uint8_t(input[k2]))) ++k2;
                    if (k2 == i) throw Error("parse-error", "missing exponent in: " + input);
                    exp = std::stoi(input.substr(i, k2 - i));
                    i = k2;
                }
                m = m.mul(Mono::var(vi, exp), R.nvars());
            } else {
                throw Error("parse-error", "expected coefficient or variable at position " +
                                               std::to_string(i) + " in: " + input);
            }
            saw_factor = true;
            skip_ws();
            if (i < input.size() && input[i] == '*') {
                ++i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw Error("parse-error", "empty term in: " + input);
        result = add(R, result, poly_term(R, m, coeff));
        first = false;
        skip_ws();
        if (i == input.size()) break;
        if (input[i] != '+' && input[i] != '-')
            throw Error("parse-error", "expected + or - at position " + std::to_string(i) + " in: " + input);
    }
    return result;
}

}  // namespace gradelink

#endif
