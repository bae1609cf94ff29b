#pragma once

// Exact rational linear algebra over the canonical monomial bases.
//
// Every elimination is split along the connected components of the sparsity
// pattern first. The invariant operators never mix monomials with different
// parity/weight data, so the components are small even when P_k is large; the
// resulting RREF is identical to the one computed on the whole matrix.

#include "superharm/operators.hpp"
#include "superharm/superpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superharm {

/// Sorted (index, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Column-major sparse matrix.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols) {
        RationalMatrix a(dense.size(), cols);
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(dense[i][j]) != 0) a.columns_[j].emplace_back(i, dense[i][j]);
        }
        return a;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const SparseVector& column(std::size_t j) const { return columns_.at(j); }

    void set_column(std::size_t j, SparseVector v) {
        for (const auto& [i, _] : v)
            if (i >= rows_) throw std::out_of_range("column entry outside the matrix");
        columns_.at(j) = std::move(v);
    }

    Rational at(std::size_t i, std::size_t j) const {
        for (const auto& [r, v] : columns_.at(j))
            if (r == i) return v;
        return 0;
    }

    std::vector<Rational> multiply(const std::vector<Rational>& v) const {
        if (v.size() != cols()) throw std::invalid_argument("vector length mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t j = 0; j < cols(); ++j) {
            if (sgn(v[j]) == 0) continue;
            for (const auto& [i, a] : columns_[j]) out[i] += a * v[j];
        }
        return out;
    }

    std::size_t rank() const;

private:
    std::size_t rows_;
    std::vector<SparseVector> columns_;
};

/// Identifies the coordinate space of a Subspace: P_k of a signature, or a bare R^d.
struct Ambient {
    std::size_t dimension = 0;
    std::optional<std::pair<SuperSignature, int>> graded; ///< (signature, k) when the coordinates are P_k

    static Ambient raw(std::size_t dim) { return {dim, std::nullopt}; }
    static Ambient of(SuperSignature sig, int k) { return {basis_of(sig, k).size(), std::make_pair(sig, k)}; }

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Gauss-Jordan in place; returns pivot columns. Rows end up normalized with zero rows last.
inline std::vector<std::size_t> gauss_jordan(std::vector<std::vector<Rational>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t sel = row;
        while (sel < a.size() && sgn(a[sel][c]) == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        const Rational inv = 1 / a[row][c];
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(a[row][j]) != 0) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a[row][j]) != 0) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Canonical RREF rows spanning the given vectors, sorted by pivot.
inline std::vector<SparseVector> rref_span(const std::vector<SparseVector>& vectors, std::size_t dim) {
    // Vectors sharing a coordinate belong to the same component.
    DisjointSets sets(vectors.size());
    std::vector<std::optional<std::size_t>> owner(dim);
    for (std::size_t v = 0; v < vectors.size(); ++v) {
        for (const auto& [i, _] : vectors[v]) {
            if (i >= dim) throw std::out_of_range("vector entry outside the ambient space");
            if (owner[i]) sets.unite(*owner[i], v);
            else owner[i] = v;
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < vectors.size(); ++v)
        if (!vectors[v].empty()) groups[sets.find(v)].push_back(v);

    std::vector<SparseVector> rows;
    for (const auto& [_, members] : groups) {
        std::vector<std::size_t> coords;
        for (auto v : members)
            for (const auto& [i, __] : vectors[v]) coords.push_back(i);
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        std::map<std::size_t, std::size_t> local;
        for (std::size_t c = 0; c < coords.size(); ++c) local[coords[c]] = c;

        std::vector<std::vector<Rational>> dense(members.size(), std::vector<Rational>(coords.size()));
        for (std::size_t r = 0; r < members.size(); ++r)
            for (const auto& [i, val] : vectors[members[r]]) dense[r][local[i]] = val;
        auto pivots = gauss_jordan(dense, coords.size());
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            SparseVector row;
            for (std::size_t c = 0; c < coords.size(); ++c)
                if (sgn(dense[r][c]) != 0) row.emplace_back(coords[c], dense[r][c]);
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
        return a.front().first < b.front().first;
    });
    return rows;
}

} // namespace detail

/// A subspace stored as its canonical RREF basis (pivot columns leftmost, pivots equal to 1).
class Subspace {
public:
    explicit Subspace(Ambient ambient) : ambient_(std::move(ambient)) {}

    /// Span of arbitrary vectors.
    static Subspace span(Ambient ambient, const std::vector<SparseVector>& vectors) {
        Subspace s(std::move(ambient));
        s.rows_ = detail::rref_span(vectors, s.ambient_.dimension);
        return s;
    }

    static Subspace full(Ambient ambient) {
        std::vector<SparseVector> unit;
        for (std::size_t i = 0; i < ambient.dimension; ++i) unit.push_back({{i, Rational(1)}});
        return span(std::move(ambient), unit);
    }

    const Ambient& ambient() const { return ambient_; }
    const std::vector<SparseVector>& rows() const { return rows_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }

    bool contains(const SparseVector& v) const {
        std::map<std::size_t, Rational> rest;
        for (const auto& [i, a] : v) {
            if (i >= ambient_.dimension) throw std::out_of_range("vector entry outside the ambient space");
            rest[i] = a;
        }
        for (const auto& row : rows_) {
            auto it = rest.find(row.front().first);
            if (it == rest.end()) continue;
            const Rational f = it->second;
            for (const auto& [i, a] : row) {
                auto& slot = rest[i];
                slot -= f * a;
                if (sgn(slot) == 0) rest.erase(i);
            }
        }
        return rest.empty();
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Ambient ambient_;
    std::vector<SparseVector> rows_;
};

inline std::size_t dim(const Subspace& u) { return u.dim(); }
inline bool equal(const Subspace& u, const Subspace& v) { return u == v; }
inline bool contains(const Subspace& u, const SparseVector& v) { return u.contains(v); }

inline void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (!(u.ambient() == v.ambient())) throw std::invalid_argument("subspace ambient mismatch");
}

/// Column space of a.
inline Subspace image(const RationalMatrix& a, std::optional<Ambient> ambient = std::nullopt) {
    Ambient amb = ambient.value_or(Ambient::raw(a.rows()));
    if (amb.dimension != a.rows()) throw std::invalid_argument("ambient does not match the row count");
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
    return Subspace::span(std::move(amb), cols);
}

/// Null space of a, computed component by component.
inline Subspace kernel(const RationalMatrix& a, std::optional<Ambient> ambient = std::nullopt) {
    Ambient amb = ambient.value_or(Ambient::raw(a.cols()));
    if (amb.dimension != a.cols()) throw std::invalid_argument("ambient does not match the column count");
    const std::size_t ncols = a.cols();
    detail::DisjointSets sets(ncols);
    std::vector<std::optional<std::size_t>> owner(a.rows());
    for (std::size_t j = 0; j < ncols; ++j) {
        for (const auto& [i, _] : a.column(j)) {
            if (owner[i]) sets.unite(*owner[i], j);
            else owner[i] = j;
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < ncols; ++j) groups[sets.find(j)].push_back(j);

    std::vector<SparseVector> null_vectors;
    for (const auto& [_, cols] : groups) {
        std::vector<std::size_t> rows;
        for (auto j : cols)
            for (const auto& [i, __] : a.column(j)) rows.push_back(i);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::map<std::size_t, std::size_t> local;
        for (std::size_t r = 0; r < rows.size(); ++r) local[rows[r]] = r;

        std::vector<std::vector<Rational>> dense(rows.size(), std::vector<Rational>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [i, val] : a.column(cols[c])) dense[local[i]][c] = val;
        auto pivots = detail::gauss_jordan(dense, cols.size());

        std::vector<bool> is_pivot(cols.size(), false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t f = 0; f < cols.size(); ++f) {
            if (is_pivot[f]) continue;
            std::map<std::size_t, Rational> v;
            v[cols[f]] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (sgn(dense[r][f]) != 0) v[cols[pivots[r]]] = -dense[r][f];
            null_vectors.emplace_back(v.begin(), v.end());
        }
    }
    return Subspace::span(std::move(amb), null_vectors);
}

inline std::size_t RationalMatrix::rank() const { return image(*this).dim(); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    std::vector<SparseVector> all = u.rows();
    all.insert(all.end(), v.rows().begin(), v.rows().end());
    return Subspace::span(u.ambient(), all);
}

/// u meet v via the kernel of [u^T | v^T].
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    const std::size_t r = u.dim();
    RationalMatrix stacked(u.ambient().dimension, r + v.dim());
    for (std::size_t i = 0; i < r; ++i) stacked.set_column(i, u.rows()[i]);
    for (std::size_t i = 0; i < v.dim(); ++i) stacked.set_column(r + i, v.rows()[i]);
    Subspace null = kernel(stacked);
    std::vector<SparseVector> meet;
    for (const auto& coeffs : null.rows()) {
        std::map<std::size_t, Rational> w;
        for (const auto& [i, c] : coeffs) {
            if (i >= r) continue;
            for (const auto& [j, a] : u.rows()[i]) w[j] += c * a;
        }
        SparseVector sv;
        for (auto& [j, a] : w)
            if (sgn(a) != 0) sv.emplace_back(j, a);
        meet.push_back(std::move(sv));
    }
    return Subspace::span(u.ambient(), meet);
}

// ---- polynomials as coordinate vectors -------------------------------------------------------

inline SparseVector to_vector(const SuperPolynomial& p, int k) {
    const auto& basis = basis_of(p.signature(), k);
    SparseVector v;
    for (const auto& [mono, c] : p.terms()) {
        auto idx = basis.index_of(mono);
        if (!idx) throw std::invalid_argument("polynomial is not homogeneous of the requested degree");
        v.emplace_back(*idx, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

inline SuperPolynomial to_polynomial(const SparseVector& v, SuperSignature sig, int k) {
    const auto& basis = basis_of(sig, k);
    SuperPolynomial p(sig);
    for (const auto& [i, c] : v) p.add_term(basis[i], c);
    return p;
}

inline Subspace span_of(SuperSignature sig, int k, const std::vector<SuperPolynomial>& polys) {
    std::vector<SparseVector> vs;
    vs.reserve(polys.size());
    for (const auto& p : polys) vs.push_back(to_vector(p, k));
    return Subspace::span(Ambient::of(sig, k), vs);
}

/// RREF basis of a graded subspace as polynomials.
inline std::vector<SuperPolynomial> basis_polynomials(const Subspace& u) {
    if (!u.ambient().graded) throw std::invalid_argument("subspace has no polynomial ambient");
    auto [sig, k] = *u.ambient().graded;
    std::vector<SuperPolynomial> out;
    for (const auto& row : u.rows()) out.push_back(to_polynomial(row, sig, k));
    return out;
}

/// Matrix of op : P_k -> P_{k + shift} in the canonical monomial bases.
inline RationalMatrix operator_matrix(const LinearOperator& op, int k) {
    const auto& src = basis_of(op.domain, k);
    const auto& dst = basis_of(op.codomain, k + op.degree_shift);
    RationalMatrix a(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto image = op(SuperPolynomial::monomial(op.domain, src[j]));
        if (image.is_zero()) continue;
        a.set_column(j, to_vector(image, k + op.degree_shift));
    }
    return a;
}

inline Subspace kernel_of(const LinearOperator& op, int k) {
    return kernel(operator_matrix(op, k), Ambient::of(op.domain, k));
}

/// op applied to a subspace of P_k (op(U) as a subspace of P_{k+shift}).
inline Subspace apply_to(const LinearOperator& op, const Subspace& u) {
    if (!u.ambient().graded) throw std::invalid_argument("subspace has no polynomial ambient");
    auto [sig, k] = *u.ambient().graded;
    if (sig != op.domain) throw std::invalid_argument("operator domain mismatch");
    std::vector<SuperPolynomial> images;
    for (const auto& p : basis_polynomials(u)) images.push_back(op(p));
    return span_of(op.codomain, k + op.degree_shift, images);
}

} // namespace superharm
