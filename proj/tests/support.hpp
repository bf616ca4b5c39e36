#pragma once

// Random generators and independent brute-force counters shared by the tests.

#include "escalier/barcode.hpp"
#include "escalier/bijections.hpp"
#include "escalier/monomials.hpp"
#include "escalier/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace esc::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Plain divisor-closure check written against raw exponent vectors.
inline bool divisor_closed(const std::vector<Term>& m) {
    std::set<std::vector<Exp>> s;
    for (const auto& t : m) s.insert(t.e);
    for (const auto& t : m)
        for (std::size_t i = 0; i < t.e.size(); ++i)
            if (t.e[i] > 0) {
                auto d = t.e;
                --d[i];
                if (!s.count(d)) return false;
            }
    return true;
}

// Grow an order ideal one corner at a time.
inline std::vector<Term> random_order_ideal(std::size_t n, std::size_t size, Rng& rng) {
    std::set<std::vector<Exp>> in{std::vector<Exp>(n, 0)};
    std::vector<std::vector<Exp>> members{std::vector<Exp>(n, 0)};
    while (members.size() < size) {
        std::vector<std::vector<Exp>> corners;
        for (const auto& m : members)
            for (std::size_t i = 0; i < n; ++i) {
                auto c = m;
                ++c[i];
                if (in.count(c)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < n && ok; ++j)
                    if (c[j] > 0) {
                        auto d = c;
                        --d[j];
                        ok = in.count(d) > 0;
                    }
                if (ok) corners.push_back(c);
            }
        std::sort(corners.begin(), corners.end());
        corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
        auto pick = corners[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(corners.size()) - 1))];
        in.insert(pick);
        members.push_back(pick);
    }
    std::vector<Term> out;
    for (const auto& m : members) out.emplace_back(m);
    return normalize(out);
}

// Random composition of total into positive parts.
inline std::vector<std::size_t> random_composition(std::size_t total, Rng& rng) {
    std::vector<std::size_t> parts;
    std::size_t cur = 1;
    for (std::size_t k = 1; k < total; ++k) {
        if (uniform(rng, 0, 2) == 0) {
            parts.push_back(cur);
            cur = 1;
        } else {
            ++cur;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Structurally valid Bar Code: the top row is a random composition of the
// width and every lower row refines each bar above it independently. Row 1
// ends up all ones. Most of these are not admissible.
inline BarCode random_barcode(std::size_t n, std::size_t width, Rng& rng) {
    BarCode b;
    b.n = n;
    b.width = width;
    b.rows.assign(n, {});
    b.rows[n - 1] = n == 1 ? std::vector<std::size_t>(width, 1) : random_composition(width, rng);
    for (std::size_t i = n - 1; i-- > 0;) {
        if (i == 0) {
            b.rows[0].assign(width, 1);
            break;
        }
        for (std::size_t len : b.rows[i + 1]) {
            auto piece = random_composition(len, rng);
            b.rows[i].insert(b.rows[i].end(), piece.begin(), piece.end());
        }
    }
    return b;
}

// Row- and column-strict plane partition with strictly decreasing row lengths.
inline PlanePartition random_strict_pp(Rng& rng) {
    int k = uniform(rng, 1, 3);
    std::vector<int> shape(static_cast<std::size_t>(k));
    int len = 0;
    for (int i = k - 1; i >= 0; --i) shape[static_cast<std::size_t>(i)] = len = len + uniform(rng, 1, 2);
    std::vector<std::vector<long>> rows(shape.size());
    for (int i = k - 1; i >= 0; --i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]), 0);
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
            long lo = 1;
            if (j + 1 < static_cast<int>(row.size())) lo = std::max(lo, row[static_cast<std::size_t>(j) + 1] + 1);
            if (i + 1 < k && j < static_cast<int>(rows[static_cast<std::size_t>(i) + 1].size()))
                lo = std::max(lo, rows[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)] + 1);
            row[static_cast<std::size_t>(j)] = lo + uniform(rng, 0, 2);
        }
    }
    return make_strict_pp(rows);
}

// Shifted (1,0)-plane partition with strictly decreasing row lengths; row i
// starts on the diagonal, so rows[i][q] sits in column i+q.
inline PlanePartition random_shifted_pp(Rng& rng) {
    int k = uniform(rng, 1, 3);
    std::vector<int> lens(static_cast<std::size_t>(k));
    int len = 0;
    for (int i = k - 1; i >= 0; --i) lens[static_cast<std::size_t>(i)] = len = len + uniform(rng, 1, 2);
    std::vector<std::vector<long>> rows(lens.size());
    for (int i = k - 1; i >= 0; --i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(lens[static_cast<std::size_t>(i)]), 0);
        for (int q = static_cast<int>(row.size()) - 1; q >= 0; --q) {
            long lo = 1;
            if (q + 1 < static_cast<int>(row.size())) lo = std::max(lo, row[static_cast<std::size_t>(q) + 1] + 1);
            // the cell below is in row i+1 at the same column, i.e. position q-1 there
            if (i + 1 < k && q >= 1 && q - 1 < static_cast<int>(rows[static_cast<std::size_t>(i) + 1].size()))
                lo = std::max(lo, rows[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(q) - 1]);
            row[static_cast<std::size_t>(q)] = lo + uniform(rng, 0, 2);
        }
    }
    return make_shifted_pp(rows);
}

// Norm counts of (c,d)-plane partitions of skew shape lambda/mu by exhaustive
// filling with values in [lo, hi]. Only the conditions are encoded here.
struct BruteSpec {
    std::vector<int> lambda;
    std::vector<int> mu;
    bool shifted = false;
    int c = 1;
    int d = 1;
    std::vector<long> a;
    std::vector<long> b;
    long lo = 1;
    long hi = 6;
};

inline std::map<long, long> brute_norm_counts(const BruteSpec& s) {
    struct Cell {
        std::size_t i;
        int j;
    };
    std::vector<Cell> cells;
    std::vector<int> first(s.lambda.size());
    for (std::size_t i = 0; i < s.lambda.size(); ++i) {
        first[i] = s.shifted ? static_cast<int>(i) + 1 : (s.mu.empty() ? 0 : s.mu[i]) + 1;
        for (int j = first[i]; j <= s.lambda[i]; ++j) cells.push_back({i, j});
    }
    auto index_of = [&](std::size_t i, int j) -> long {
        for (std::size_t q = 0; q < cells.size(); ++q)
            if (cells[q].i == i && cells[q].j == j) return static_cast<long>(q);
        return -1;
    };
    std::vector<long> right(cells.size()), below(cells.size());
    for (std::size_t q = 0; q < cells.size(); ++q) {
        right[q] = index_of(cells[q].i, cells[q].j + 1);
        below[q] = index_of(cells[q].i + 1, cells[q].j);
    }
    std::map<long, long> counts;
    std::vector<long> v(cells.size(), s.lo);
    while (true) {
        bool ok = true;
        long norm = 0;
        for (std::size_t q = 0; q < cells.size() && ok; ++q) {
            long x = v[q];
            auto [i, j] = cells[q];
            norm += x;
            if (right[q] >= 0 && x - v[static_cast<std::size_t>(right[q])] < s.c) ok = false;
            if (below[q] >= 0 && x - v[static_cast<std::size_t>(below[q])] < s.d) ok = false;
            if (j == first[i] && (s.shifted ? x != s.a[i] : x > s.a[i])) ok = false;
            if (j == s.lambda[i] && x < s.b[i]) ok = false;
        }
        if (ok) ++counts[norm];
        std::size_t q = 0;
        while (q < v.size() && v[q] == s.hi) v[q++] = s.lo;
        if (q == v.size()) break;
        ++v[q];
    }
    return counts;
}

}  // namespace esc::testing
