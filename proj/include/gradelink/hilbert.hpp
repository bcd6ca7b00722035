#ifndef GRADELINK_HILBERT_HPP
#define GRADELINK_HILBERT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gradelink/monomial.hpp"

namespace gradelink {

/* Hilbert series of a graded module as numerator / Π_i (1 - t^{w_i}), the
 * product running over the ambient variables. The numerator is a Laurent
 * polynomial (generator shifts can be negative). */
struct HilbertSeries {
    std::map<int, long long> num;  // exponent -> coefficient, no zeros
    std::vector<int> weights;

    bool operator==(const HilbertSeries& o) const { return num == o.num && weights == o.weights; }

    HilbertSeries& add_term(int e, long long c);
    HilbertSeries plus(const HilbertSeries& o) const;
    HilbertSeries minus(const HilbertSeries& o) const;
    HilbertSeries shifted(int d) const;  // multiply numerator by t^d
    bool is_zero() const { return num.empty(); }

    /* Krull dimension: #weights minus the multiplicity of t=1 in the numerator. */
    int dimension() const;
    bool is_artinian() const { return dimension() <= 0; }

    /* Exact polynomial num / Π(1-t^w); only valid when Artinian. */
    std::map<int, long long> finite_dimensions() const;
    long long total_dimension() const;

    /* Hilbert function by power-series expansion (works in any dimension). */
    long long coefficient(int degree) const;

    std::string str() const;
};

/* Numerator of P/(monomial ideal) over Π(1-t^w); `gens` are exponent
 * vectors, `degs` their weighted degrees recomputed internally. */
HilbertSeries hilbert_of_monomial_ideal(const std::vector<Mono>& gens,
                                        const std::vector<int>& weights, int nvars);

/* Hilbert series of ⊕_r t^{shift_r} · P/L_r for a lead-term module given as
 * per-component monomial ideals. */
HilbertSeries hilbert_of_lead_module(const std::vector<std::vector<Mono>>& comp_gens,
                                     const std::vector<int>& shifts,
                                     const std::vector<int>& weights, int nvars);

}  // namespace gradelink

#endif
