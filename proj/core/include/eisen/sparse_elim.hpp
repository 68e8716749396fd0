#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

// Sparse rational vector: (column, value) pairs, strictly increasing columns, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

// a + s * b
inline SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second;
            v.add_product(s, b[j].second);
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

inline SparseVec sparse_from_dense(const std::vector<Rational>& dense) {
    SparseVec v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) v.emplace_back(static_cast<int>(i), dense[i]);
    return v;
}

inline std::vector<Rational> sparse_to_dense(const SparseVec& v, int ncols) {
    std::vector<Rational> d(static_cast<std::size_t>(ncols));
    for (const auto& [c, x] : v) d[static_cast<std::size_t>(c)] = x;
    return d;
}

// Payload that carries nothing; used when only the row space matters.
struct NoPayload {
    void add_scaled(const NoPayload&, const Rational&) {}
    NoPayload& operator*=(const Rational&) { return *this; }
};

// Incrementally maintained echelon basis of a row space over Q. Each stored
// row has leading entry 1 and is paired with a payload that undergoes the same
// linear operations (right-hand sides, combination certificates, ...).
//
// The set of leading columns does not depend on insertion order: it is the set
// of columns that are pivots in the reduced row echelon form.
template <class Payload = NoPayload>
class EchelonBasis {
public:
    struct Row {
        SparseVec vec;
        Payload payload;
    };

    explicit EchelonBasis(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces (vec, payload) against the basis; vec ends with no entries in pivot columns.
    void reduce(SparseVec& vec, Payload& payload) const {
        std::size_t pos = 0;
        while (pos < vec.size()) {
            auto it = rows_.find(vec[pos].first);
            if (it == rows_.end()) {
                ++pos;
                continue;
            }
            const Rational factor = -vec[pos].second;
            vec = sparse_axpy(vec, factor, it->second.vec);
            payload.add_scaled(it->second.payload, factor);
            // entries before pos are untouched because the pivot row starts at this column
        }
    }

    // Adds a row. Returns true if it was independent; otherwise the row is
    // reduced to zero and `payload` is left holding the residual combination.
    bool insert(SparseVec vec, Payload& payload) {
        reduce(vec, payload);
        if (vec.empty()) return false;
        const Rational inv = Rational(1) / vec.front().second;
        for (auto& e : vec) e.second *= inv;
        payload *= inv;
        const int lead = vec.front().first;
        rows_.emplace(lead, Row{std::move(vec), payload});
        reduced_ = false;
        return true;
    }

    bool insert(SparseVec vec) {
        Payload p{};
        return insert(std::move(vec), p);
    }

    bool contains(SparseVec vec) const {
        Payload p{};
        reduce(vec, p);
        return vec.empty();
    }

    std::vector<int> pivot_columns() const {
        std::vector<int> out;
        out.reserve(rows_.size());
        for (const auto& [c, r] : rows_) out.push_back(c);
        return out;
    }

    // Back-eliminates so that every pivot column is zero outside its own row.
    void make_reduced() {
        if (reduced_) return;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            Row& row = it->second;
            // clear pivot entries of later rows from this row (they are already reduced)
            std::size_t pos = 1;
            while (pos < row.vec.size()) {
                auto piv = rows_.find(row.vec[pos].first);
                if (piv == rows_.end()) {
                    ++pos;
                    continue;
                }
                const Rational factor = -row.vec[pos].second;
                row.vec = sparse_axpy(row.vec, factor, piv->second.vec);
                row.payload.add_scaled(piv->second.payload, factor);
            }
        }
        reduced_ = true;
    }

    // Rows keyed by leading column.
    const std::map<int, Row>& rows() const { return rows_; }

private:
    int ncols_;
    std::map<int, Row> rows_;
    bool reduced_ = true;
};

}  // namespace eisen
