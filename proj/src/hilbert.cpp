#include "gradelink/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "gradelink/field.hpp"

namespace gradelink {

HilbertSeries& HilbertSeries::add_term(int e, long long c) {
    if (c == 0) return *this;
    auto it = num.find(e);
    if (it == num.end()) num.emplace(e, c);
    else {
        it->second += c;
        if (it->second == 0) num.erase(it);
    }
    return *this;
}

HilbertSeries HilbertSeries::plus(const HilbertSeries& o) const {
    if (weights != o.weights) throw Error("internal", "Hilbert series over different rings");
    HilbertSeries r = *this;
    for (auto& [e, c] : o.num) r.add_term(e, c);
    return r;
}

HilbertSeries HilbertSeries::minus(const HilbertSeries& o) const {
    if (weights != o.weights) throw Error("internal", "Hilbert series over different rings");
    HilbertSeries r = *this;
    for (auto& [e, c] : o.num) r.add_term(e, -c);
    return r;
}

HilbertSeries HilbertSeries::shifted(int d) const {
    HilbertSeries r;
    r.weights = weights;
    for (auto& [e, c] : num) r.num.emplace(e + d, c);
    return r;
}

/* Divide the numerator by (1-t) as often as it stays exact. */
static int strip_ones(std::map<int, long long>& num) {
    int count = 0;
    while (!num.empty()) {
        long long sum = 0;
        for (auto& [e, c] : num) sum += c;
        if (sum != 0) break;
        // synthetic division by (1 - t): a_e = q_e - q_{e-1}, so q_e = a_e + q_{e-1}
        std::map<int, long long> q;
        long long carry = 0;
        for (auto it = num.begin(); it != num.end(); ++it) {
            // ascending: q_e = a_e + q_{e-1}; gaps carry the running value
            if (it != num.begin()) {
                auto prev = std::prev(it);
                // fill gap: q stays `carry` across gap; only nonzero entries recorded
                for (int e = prev->first + 1; e < it->first; ++e)
                    if (carry != 0) q[e] = carry;
            }
            carry += it->second;
            if (carry != 0) q[it->first] = carry;
        }
        // exactness requires carry == 0 at the end, which is the sum check
        num = std::move(q);
        ++count;
    }
    return count;
}

int HilbertSeries::dimension() const {
    if (num.empty()) return -1;  // zero module: dimension of the empty set
    auto n = num;
    int mult = strip_ones(n);
    return int(weights.size()) - mult;
}

std::map<int, long long> HilbertSeries::finite_dimensions() const {
    if (num.empty()) return {};
    if (!is_artinian()) throw Error("not-artinian", "module has positive Krull dimension");
    // divide numerator by each (1 - t^w) exactly
    std::map<int, long long> cur = num;
    for (int w : weights) {
        // (1 - t^w) q = cur  =>  q_e = cur_e + q_{e-w}
        std::map<int, long long> q;
        if (cur.empty()) break;
        int lo = cur.begin()->first;
        int hi = cur.rbegin()->first;
        // q supported in [lo, hi - w]; run ascending
        for (int e = lo; e <= hi - w; ++e) {
            long long a = 0;
            if (auto it = cur.find(e); it != cur.end()) a = it->second;
            long long prev = 0;
            if (auto it = q.find(e - w); it != q.end()) prev = it->second;
            long long v = a + prev;
            if (v != 0) q[e] = v;
        }
        cur = std::move(q);
    }
    for (auto& [e, c] : cur)
        if (c < 0) throw Error("internal", "negative Hilbert dimension; presentation corrupt");
    return cur;
}

long long HilbertSeries::total_dimension() const {
    long long t = 0;
    for (auto& [e, c] : finite_dimensions()) t += c;
    return t;
}

long long HilbertSeries::coefficient(int degree) const {
    if (num.empty()) return 0;
    int lo = num.begin()->first;
    if (degree < lo) return 0;
    // expand num * Π 1/(1-t^w) up to `degree`
    int width = degree - lo + 1;
    std::vector<long long> buf(width, 0);
    for (auto& [e, c] : num)
        if (e <= degree) buf[e - lo] += c;
    for (int w : weights)
        for (int i = w; i < width; ++i) buf[i] += buf[i - w];
    return buf[width - 1];
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& [e, c] : num) {
        if (!first && c > 0) os << "+";
        if (c == -1 && e != 0) os << "-";
        else if (c != 1 || e == 0) os << c;
        if (e != 0) {
            if (c != 1 && c != -1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    if (first) os << "0";
    os << ")";
    for (int w : weights) os << "/(1-t^" << w << ")";
    return os.str();
}

/* ---------- monomial ideal numerators ---------- */

static std::vector<Mono> minimalize(std::vector<Mono> gens, int nvars) {
    std::sort(gens.begin(), gens.end(), [&](const Mono& a, const Mono& b) {
        int da = a.total_degree(nvars), db = b.total_degree(nvars);
        if (da != db) return da < db;
        return a.e < b.e;
    });
    std::vector<Mono> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (auto& k : out)
            if (k.divides(m, nvars)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

/* Numerator N(I) with N(P)=1 and N(I+(m)) = N(I) - t^{deg m} N(I:m). */
static void numerator_rec(std::vector<Mono> gens, const std::vector<int>& weights, int nvars,
                          int shift, long long sign, std::map<int, long long>& acc) {
    gens = minimalize(std::move(gens), nvars);
    if (!gens.empty() && gens.front().is_unit(nvars)) return;  // ideal = (1): series 0
    // base: pure powers of distinct variables => product formula
    bool simple = true;
    for (auto& m : gens) {
        int support = 0;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i]) ++support;
        if (support > 1) { simple = false; break; }
    }
    if (simple) {
        // distinct variables after minimalization: Π (1 - t^{deg m})
        std::vector<std::pair<int, long long>> terms{{shift, sign}};
        for (auto& m : gens) {
            int d = m.weighted_degree(weights);
            std::vector<std::pair<int, long long>> next;
            next.reserve(terms.size() * 2);
            for (auto& [e, c] : terms) {
                next.push_back({e, c});
                next.push_back({e + d, -c});
            }
            terms = std::move(next);
        }
        for (auto& [e, c] : terms) {
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, c);
            else {
                it->second += c;
                if (it->second == 0) acc.erase(it);
            }
        }
        return;
    }
    // split on the last (largest) generator
    Mono m = gens.back();
    gens.pop_back();
    int d = m.weighted_degree(weights);
    // (I : m): generators g / gcd(g, m)
    std::vector<Mono> colon;
    colon.reserve(gens.size());
    for (auto& g : gens) {
        Mono q;
        for (int i = 0; i < nvars; ++i) q.e[i] = uint8_t(g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0);
        colon.push_back(q);
    }
    numerator_rec(gens, weights, nvars, shift, sign, acc);
    numerator_rec(std::move(colon), weights, nvars, shift + d, -sign, acc);
}

HilbertSeries hilbert_of_monomial_ideal(const std::vector<Mono>& gens,
                                        const std::vector<int>& weights, int nvars) {
    HilbertSeries h;
    h.weights = weights;
    numerator_rec(gens, weights, nvars, 0, 1, h.num);
    return h;
}

HilbertSeries hilbert_of_lead_module(const std::vector<std::vector<Mono>>& comp_gens,
                                     const std::vector<int>& shifts,
                                     const std::vector<int>& weights, int nvars) {
    HilbertSeries total;
    total.weights = weights;
    for (size_t r = 0; r < comp_gens.size(); ++r) {
        HilbertSeries h;
        h.weights = weights;
        numerator_rec(comp_gens[r], weights, nvars, shifts[r], 1, h.num);
        total = total.plus(h);
    }
    return total;
}

}  // namespace gradelink
