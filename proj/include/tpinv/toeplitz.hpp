/*
   Copyright 2026 The tpinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TPINV_TOEPLITZ_HPP
#define TPINV_TOEPLITZ_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace tpinv {

/// Square matrix of polynomials over a common ring and variable count.
/// Indices are 1-based.
class PolyMatrix {
   public:
    /// entries in row-major order.
    PolyMatrix(RingSpec ring, std::size_t nvars, std::size_t size, std::vector<Polynomial> entries)
        : ring_(std::move(ring)), nvars_(nvars), size_(size), entries_(std::move(entries)) {
        if (entries_.size() != size_ * size_) throw RangeError("matrix of size " + std::to_string(size_) + " needs " + std::to_string(size_ * size_) + " entries");
        for (const auto& e : entries_)
            if (!(e.ring() == ring_) || e.nvars() != nvars_) throw SpecMismatch("matrix entry over a different ring or variable count");
    }

    static PolyMatrix zero(const RingSpec& ring, std::size_t nvars, std::size_t size) {
        return {ring, nvars, size, std::vector<Polynomial>(size * size, Polynomial(ring, nvars))};
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return size_; }

    const Polynomial& at(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return entries_[(i - 1) * size_ + (j - 1)];
    }

    PolyMatrix with_entry(std::size_t i, std::size_t j, Polynomial value) const {
        check_index(i);
        check_index(j);
        if (!(value.ring() == ring_) || value.nvars() != nvars_) throw SpecMismatch("matrix entry over a different ring or variable count");
        PolyMatrix r = *this;
        r.entries_[(i - 1) * size_ + (j - 1)] = std::move(value);
        return r;
    }

    PolyMatrix with_column(std::size_t j, std::span<const Polynomial> column) const {
        if (column.size() != size_) throw RangeError("replacement column has the wrong length");
        PolyMatrix r = *this;
        for (std::size_t i = 1; i <= size_; ++i) r = r.with_entry(i, j, column[i - 1]);
        return r;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    void check_index(std::size_t i) const {
        if (i < 1 || i > size_) throw RangeError("matrix index " + std::to_string(i) + " outside 1.." + std::to_string(size_));
    }

    RingSpec ring_;
    std::size_t nvars_;
    std::size_t size_;
    std::vector<Polynomial> entries_;
};

/// T(k) over R[x_1..x_n]: entry (i,j) is x_{i-j+1}, with x_0 = 1 on the
/// superdiagonal and zeros above it.
inline PolyMatrix build_toeplitz(const RingSpec& ring, std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw RangeError("Toeplitz size " + std::to_string(k) + " outside 1.." + std::to_string(n));
    std::vector<Polynomial> entries;
    entries.reserve(k * k);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            if (i + 1 == j)
                entries.push_back(Polynomial::one(ring, n));
            else if (i >= j)
                entries.push_back(Polynomial::variable(ring, n, i - j + 1));
            else
                entries.emplace_back(ring, n);
        }
    return {ring, n, k, std::move(entries)};
}

/// T(k) with its first column replaced by a; k = a.size().
inline PolyMatrix toeplitz_with_first_column(const RingSpec& ring, std::size_t n, std::span<const Polynomial> a) {
    return build_toeplitz(ring, n, a.size()).with_column(1, a);
}

/// The principal minors m_0 = 1, m_1, ..., m_n of T(n).
class MinorTable {
   public:
    MinorTable(RingSpec ring, std::size_t nvars, std::vector<Polynomial> minors)
        : ring_(std::move(ring)), nvars_(nvars), minors_(std::move(minors)) {
        if (minors_.size() != nvars_ + 1) throw RangeError("minor table needs m_0..m_" + std::to_string(nvars_));
        for (const auto& m : minors_)
            if (!(m.ring() == ring_) || m.nvars() != nvars_) throw SpecMismatch("minor over a different ring or variable count");
        if (!(minors_[0] == Polynomial::one(ring_, nvars_))) throw RangeError("m_0 must be 1");
        for (std::size_t k = 0; k <= nvars_; ++k)
            if (minors_[k].max_variable() > k) throw RangeError("m_" + std::to_string(k) + " uses a variable beyond x_" + std::to_string(k));
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& minors() const noexcept { return minors_; }
    const Polynomial& operator[](std::size_t k) const { return minors_.at(k); }

    /// Same table with m_k replaced; for building inconsistent tables.
    MinorTable with_minor(std::size_t k, Polynomial m) const {
        auto minors = minors_;
        minors.at(k) = std::move(m);
        return {ring_, nvars_, std::move(minors)};
    }

   private:
    RingSpec ring_;
    std::size_t nvars_;
    std::vector<Polynomial> minors_;
};

namespace detail {

// m_0..m_top in R[x_1..x_n] via m_k = sum_{i=1}^k (-1)^{i-1} x_i m_{k-i}.
inline std::vector<Polynomial> minors_upto(const RingSpec& ring, std::size_t n, std::size_t top) {
    std::vector<Polynomial> m;
    m.reserve(top + 1);
    m.push_back(Polynomial::one(ring, n));
    for (std::size_t k = 1; k <= top; ++k) {
        Polynomial acc(ring, n);
        for (std::size_t i = 1; i <= k; ++i) {
            const auto term = Polynomial::variable(ring, n, i) * m[k - i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        m.push_back(std::move(acc));
    }
    return m;
}

}  // namespace detail

inline MinorTable minor_table(const RingSpec& ring, std::size_t n) { return {ring, n, detail::minors_upto(ring, n, n)}; }

/// m_k by the first-column recursion, 0 <= k <= n.
inline Polynomial minor_recursive(const RingSpec& ring, std::size_t n, std::size_t k) {
    if (k > n) throw RangeError("minor index " + std::to_string(k) + " outside 0.." + std::to_string(n));
    return detail::minors_upto(ring, n, k).back();
}

inline constexpr std::size_t leibniz_max_size = 8;

/// Sum over all permutations of sign * product of entries.
inline Polynomial det_leibniz(const PolyMatrix& a) {
    const std::size_t n = a.size();
    if (n > leibniz_max_size)
        throw SizeTooLarge("Leibniz determinant limited to size " + std::to_string(leibniz_max_size) + ", got " + std::to_string(n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    Polynomial det(a.ring(), a.nvars());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial prod = Polynomial::one(a.ring(), a.nvars());
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= a.at(i + 1, perm[i]);
        if (inversions % 2 == 0)
            det += prod;
        else
            det -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Berkowitz's division-free determinant. The characteristic polynomial of
/// each leading principal submatrix is obtained from the previous one by a
/// lower-triangular Toeplitz product whose column is 1, -a_rr, -R C, -R M C,
/// -R M^2 C, ...; det A is (-1)^n times its constant coefficient.
inline Polynomial det_berkowitz(const PolyMatrix& a) {
    const std::size_t n = a.size();
    const auto& ring = a.ring();
    const auto nv = a.nvars();
    if (n == 0) return Polynomial::one(ring, nv);
    auto at = [&](std::size_t i, std::size_t j) -> const Polynomial& { return a.at(i + 1, j + 1); };

    std::vector<Polynomial> charpoly{Polynomial::one(ring, nv), -at(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Polynomial> col;
        col.reserve(r + 2);
        col.push_back(Polynomial::one(ring, nv));
        col.push_back(-at(r, r));
        std::vector<Polynomial> w;  // M^j C
        w.reserve(r);
        for (std::size_t i = 0; i < r; ++i) w.push_back(at(i, r));
        for (std::size_t j = 0; j < r; ++j) {
            Polynomial dot(ring, nv);
            for (std::size_t i = 0; i < r; ++i) dot += at(r, i) * w[i];
            col.push_back(-dot);
            if (j + 1 == r) break;
            std::vector<Polynomial> next(r, Polynomial(ring, nv));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t l = 0; l < r; ++l) next[i] += at(i, l) * w[l];
            w = std::move(next);
        }
        std::vector<Polynomial> updated(r + 2, Polynomial(ring, nv));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += col[i - j] * charpoly[j];
        charpoly = std::move(updated);
    }
    return n % 2 == 0 ? charpoly[n] : -charpoly[n];
}

/// det of T(k) with first column a, as sum_{i=1}^k (-1)^{i-1} a_i m_{k-i}.
inline Polynomial first_column_det(const MinorTable& table, std::span<const Polynomial> a) {
    const std::size_t k = a.size();
    if (k < 1 || k > table.nvars()) throw RangeError("column length " + std::to_string(k) + " outside 1.." + std::to_string(table.nvars()));
    Polynomial acc(table.ring(), table.nvars());
    for (std::size_t i = 1; i <= k; ++i) {
        acc.check_compatible(a[i - 1]);
        const auto term = a[i - 1] * table[k - i];
        if (i % 2 == 1)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline Polynomial first_column_det(const RingSpec& ring, std::size_t n, std::span<const Polynomial> a) {
    if (a.size() < 1 || a.size() > n) throw RangeError("column length " + std::to_string(a.size()) + " outside 1.." + std::to_string(n));
    return first_column_det(minor_table(ring, n), a);
}

/// r_k of the sequence r_0 = 1, r_j = sum_{i=1}^j (-1)^{i-1} minors[i] r_{j-i}.
/// Equals x_k exactly when `minors` holds the true principal minors.
inline Polynomial recover_generator(const RingSpec& ring, std::size_t n, std::size_t k, const MinorTable& minors) {
    if (!(minors.ring() == ring) || minors.nvars() != n) throw SpecMismatch("minor table over a different ring or variable count");
    if (k < 1 || k > n) throw RangeError("generator index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    std::vector<Polynomial> r{Polynomial::one(ring, n)};
    for (std::size_t j = 1; j <= k; ++j) {
        Polynomial acc(ring, n);
        for (std::size_t i = 1; i <= j; ++i) {
            const auto term = minors[i] * r[j - i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        r.push_back(std::move(acc));
    }
    return r[k];
}

}  // namespace tpinv

#endif
