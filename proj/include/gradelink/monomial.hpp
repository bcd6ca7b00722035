#ifndef GRADELINK_MONOMIAL_HPP
#define GRADELINK_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gradelink/field.hpp"

namespace gradelink {

constexpr int kMaxVars = 8;

/* Exponent vector with a fixed small capacity. The ambient variable count
 * lives in the ring; monomials only carry exponents. */
struct Mono {
    std::array<uint8_t, kMaxVars> e{};

    static Mono unit() { return Mono{}; }
    static Mono var(int i, int exp = 1) {
        Mono m;
        m.e[i] = uint8_t(exp);
        return m;
    }
    bool is_unit(int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i]) return false;
        return true;
    }
    int total_degree(int nvars) const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    int weighted_degree(const std::vector<int>& w) const {
        int d = 0;
        for (size_t i = 0; i < w.size(); ++i) d += w[i] * e[i];
        return d;
    }
    bool divides(const Mono& m, int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Mono mul(const Mono& m, int nvars) const {
        Mono r;
        for (int i = 0; i < nvars; ++i) {
            int s = int(e[i]) + m.e[i];
            if (s > 255) throw Error("degree-overflow", "monomial exponent exceeds 255");
            r.e[i] = uint8_t(s);
        }
        return r;
    }
    // quotient this / m, caller guarantees divisibility
    Mono div(const Mono& m, int nvars) const {
        Mono r;
        for (int i = 0; i < nvars; ++i) r.e[i] = uint8_t(e[i] - m.e[i]);
        return r;
    }
    static Mono lcm(const Mono& a, const Mono& b, int nvars) {
        Mono r;
        for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Mono& a, const Mono& b, int nvars) {
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    bool operator==(const Mono& m) const { return e == m.e; }
};

enum class OrderKind { Grevlex, Lex, Weighted };

/* Total order on monomials of a fixed ring: grevlex, lex, or weighted degree
 * with grevlex tiebreak. Returns <0, 0, >0 like strcmp; positive means a > b. */
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> weights;  // used by Weighted

    int cmp(const Mono& a, const Mono& b, int nvars) const {
        switch (kind) {
            case OrderKind::Lex: {
                for (int i = 0; i < nvars; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            }
            case OrderKind::Weighted: {
                int da = a.weighted_degree(weights), db = b.weighted_degree(weights);
                if (da != db) return da < db ? -1 : 1;
                return grevlex_tie(a, b, nvars);
            }
            case OrderKind::Grevlex:
            default: {
                int da = a.total_degree(nvars), db = b.total_degree(nvars);
                if (da != db) return da < db ? -1 : 1;
                return grevlex_tie(a, b, nvars);
            }
        }
    }

    std::string str() const {
        switch (kind) {
            case OrderKind::Lex: return "lex";
            case OrderKind::Weighted: {
                std::string s = "weighted(";
                for (size_t i = 0; i < weights.size(); ++i)
                    s += (i ? "," : "") + std::to_string(weights[i]);
                return s + ")";
            }
            default: return "grevlex";
        }
    }

  private:
    // equal degree assumed: a > b iff the last nonzero entry of a-b is negative
    static int grevlex_tie(const Mono& a, const Mono& b, int nvars) {
        for (int i = nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

}  // namespace gradelink

#endif
