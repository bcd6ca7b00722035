#ifndef GRADELINK_TEST_HELPERS_HPP
#define GRADELINK_TEST_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "gradelink/fpmodule.hpp"

namespace gltest {

using namespace gradelink;

using QQ = RationalField;

inline std::shared_ptr<const QuotientRing<QQ>> make_ring(std::vector<std::string> vars,
                                                         std::vector<std::string> ideal,
                                                         OrderKind ord = OrderKind::Grevlex,
                                                         int cap = 40) {
    PolyRing<QQ> P(QQ{}, vars, MonomialOrder{ord, {}});
    std::vector<Poly<QQ>> gens;
    for (auto& s : ideal) gens.push_back(poly_parse(P, s));
    return std::make_shared<QuotientRing<QQ>>(std::move(P), std::move(gens), cap);
}

template <class K>
ModVec<K> col(const QuotientRing<K>& R, const std::vector<std::string>& entries) {
    ModVec<K> v;
    for (size_t i = 0; i < entries.size(); ++i) {
        Poly<K> p = poly_parse(R.poly, entries[i]);
        if (!p.is_zero()) v.set(int(i), p);
    }
    return v;
}

/* rows x cols matrix of polynomial strings, row-major, as columns */
template <class K>
std::vector<ModVec<K>> cols_from_rows(const QuotientRing<K>& R,
                                      const std::vector<std::vector<std::string>>& rows) {
    std::vector<ModVec<K>> out;
    if (rows.empty()) return out;
    size_t nc = rows[0].size();
    for (size_t j = 0; j < nc; ++j) {
        ModVec<K> v;
        for (size_t i = 0; i < rows.size(); ++i) {
            Poly<K> p = poly_parse(R.poly, rows[i][j]);
            if (!p.is_zero()) v.set(int(i), p);
        }
        out.push_back(std::move(v));
    }
    return out;
}

template <class K>
FPModule<K> module_from_rows(std::shared_ptr<const QuotientRing<K>> R, std::vector<int> degs,
                             const std::vector<std::vector<std::string>>& rows) {
    return FPModule<K>(R, std::move(degs), cols_from_rows(*R, rows));
}

/* residue field k = R/m as a module */
template <class K>
FPModule<K> residue_field(std::shared_ptr<const QuotientRing<K>> R) {
    std::vector<Poly<K>> vars;
    for (int i = 0; i < R->poly.nvars(); ++i) vars.push_back(poly_var(R->poly, i));
    return fp_cyclic(R, vars);
}

}  // namespace gltest

#endif
