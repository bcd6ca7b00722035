#ifndef GRADELINK_DENSE_HPP
#define GRADELINK_DENSE_HPP

#include <optional>
#include <vector>

#include "gradelink/field.hpp"

namespace gradelink {

/* Small exact dense matrices; row-major. */
template <class K>
struct DenseMat {
    using Elem = typename K::Elem;
    int r = 0, c = 0;
    std::vector<Elem> a;

    DenseMat() = default;
    DenseMat(int rows, int cols, const K& k) : r(rows), c(cols), a(size_t(rows) * cols, k.zero()) {}
    Elem& at(int i, int j) { return a[size_t(i) * c + j]; }
    const Elem& at(int i, int j) const { return a[size_t(i) * c + j]; }
};

template <class K>
DenseMat<K> dm_identity(int n, const K& k) {
    DenseMat<K> m(n, n, k);
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
}

template <class K>
DenseMat<K> dm_mul(const K& k, const DenseMat<K>& A, const DenseMat<K>& B) {
    if (A.c != B.r) throw Error("internal", "dense shape mismatch");
    DenseMat<K> C(A.r, B.c, k);
    for (int i = 0; i < A.r; ++i)
        for (int l = 0; l < A.c; ++l) {
            const auto& ail = A.at(i, l);
            if (k.is_zero(ail)) continue;
            for (int j = 0; j < B.c; ++j) {
                const auto& blj = B.at(l, j);
                if (k.is_zero(blj)) continue;
                C.at(i, j) = k.add(C.at(i, j), k.mul(ail, blj));
            }
        }
    return C;
}

template <class K>
std::vector<typename K::Elem> dm_apply(const K& k, const DenseMat<K>& A,
                                       const std::vector<typename K::Elem>& v) {
    if (int(v.size()) != A.c) throw Error("internal", "dense apply shape mismatch");
    std::vector<typename K::Elem> out(A.r, k.zero());
    for (int i = 0; i < A.r; ++i)
        for (int j = 0; j < A.c; ++j)
            if (!k.is_zero(A.at(i, j)) && !k.is_zero(v[j]))
                out[i] = k.add(out[i], k.mul(A.at(i, j), v[j]));
    return out;
}

/* In-place reduced row echelon form; returns pivot columns. */
template <class K>
std::vector<int> dm_rref(const K& k, DenseMat<K>& A) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.c && row < A.r; ++col) {
        int pr = -1;
        for (int i = row; i < A.r; ++i)
            if (!k.is_zero(A.at(i, col))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < A.c; ++j) std::swap(A.at(pr, j), A.at(row, j));
        auto inv = k.inv(A.at(row, col));
        for (int j = col; j < A.c; ++j) A.at(row, j) = k.mul(A.at(row, j), inv);
        for (int i = 0; i < A.r; ++i) {
            if (i == row || k.is_zero(A.at(i, col))) continue;
            auto f = A.at(i, col);
            for (int j = col; j < A.c; ++j)
                A.at(i, j) = k.sub(A.at(i, j), k.mul(f, A.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int dm_rank(const K& k, DenseMat<K> A) {
    return int(dm_rref(k, A).size());
}

/* Basis of the right nullspace, one vector per free column. */
template <class K>
std::vector<std::vector<typename K::Elem>> dm_nullspace(const K& k, DenseMat<K> A) {
    auto pivots = dm_rref(k, A);
    std::vector<bool> is_pivot(A.c, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<typename K::Elem>> out;
    for (int free_col = 0; free_col < A.c; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<typename K::Elem> v(A.c, k.zero());
        v[free_col] = k.one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = k.neg(A.at(int(pi), free_col));
        out.push_back(std::move(v));
    }
    return out;
}

/* Incremental row-space container: insert vectors, query membership. */
template <class K>
class RowSpace {
  public:
    explicit RowSpace(const K& k, int width) : k_(k), width_(width) {}

    int rank() const { return int(rows_.size()); }

    /* Reduce v against the space; returns the residue. */
    std::vector<typename K::Elem> reduce(std::vector<typename K::Elem> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& piv = v[pivot_[i]];
            if (k_.is_zero(piv)) continue;
            auto f = piv;
            for (int j = 0; j < width_; ++j)
                if (!k_.is_zero(rows_[i][j])) v[j] = k_.sub(v[j], k_.mul(f, rows_[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<typename K::Elem>& v) const {
        auto r = reduce(v);
        for (auto& x : r)
            if (!k_.is_zero(x)) return false;
        return true;
    }

    /* Insert; returns true if the vector enlarged the space. */
    bool insert(std::vector<typename K::Elem> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < width_; ++j)
            if (!k_.is_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        auto inv = k_.inv(v[p]);
        for (int j = 0; j < width_; ++j) v[j] = k_.mul(v[j], inv);
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

  private:
    K k_;
    int width_;
    std::vector<std::vector<typename K::Elem>> rows_;
    std::vector<int> pivot_;
};

/* Solve A x = b; returns one solution if consistent. */
template <class K>
std::optional<std::vector<typename K::Elem>> dm_solve(const K& k, const DenseMat<K>& A,
                                                      const std::vector<typename K::Elem>& b) {
    DenseMat<K> aug(A.r, A.c + 1, k);
    for (int i = 0; i < A.r; ++i) {
        for (int j = 0; j < A.c; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.c) = b[i];
    }
    auto pivots = dm_rref(k, aug);
    if (!pivots.empty() && pivots.back() == A.c) return std::nullopt;
    std::vector<typename K::Elem> x(A.c, k.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(int(pi), A.c);
    return x;
}

}  // namespace gradelink

#endif
