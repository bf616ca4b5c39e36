#include "escalier/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace esc {

BigInt count_P(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    if (k == n) return 1;
    if (k == 0) return 0;
    // table[m][j] = P(m, j) for m <= n, j <= k
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (int m = 0; m <= n; ++m)
        for (int j = 0; j <= k; ++j) {
            BigInt& v = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            if (j > m) v = 0;
            else if (j == m) v = 1;
            else if (j == 0) v = 0;
            else
                v = table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] +
                    table[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)];
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt count_Q(int p, int i) {
    if (p < 1 || i < 1) return 0;
    if (i == 1) return 1;
    return count_P(p - i * (i - 1) / 2, i);
}

std::vector<IntPartition> enumerate_distinct(int p, int k) {
    std::vector<IntPartition> out;
    if (p < 1 || k < 1) return out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        int left = k - static_cast<int>(cur.size());
        if (left == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        // the parts after this one need at least (left-1)left/2
        int floor_rest = (left - 1) * left / 2;
        for (int v = std::min(cap, remaining - floor_rest); v >= left; --v) {
            cur.push_back(v);
            rec(remaining - v, v - 1);
            cur.pop_back();
        }
    };
    rec(p, p);
    return out;
}

long minimal_sum(const std::vector<int>& parts) {
    long s = 0;
    for (int a : parts) {
        if (a < 1) throw std::invalid_argument("minimal_sum needs positive entries");
        s += static_cast<long>(a) * (a + 1) / 2;
    }
    return s;
}

long PlanePartition::norm() const {
    long s = 0;
    for (const auto& r : rows) s = std::accumulate(r.begin(), r.end(), s);
    return s;
}

int PlanePartition::first_column(std::size_t row) const {
    if (shifted) return static_cast<int>(row) + 1;
    return (mu.empty() ? 0 : mu.at(row)) + 1;
}

bool PlanePartition::has(std::size_t row, int col) const {
    if (row >= rows.size()) return false;
    int f = first_column(row);
    return col >= f && col < f + static_cast<int>(rows[row].size());
}

long PlanePartition::at(std::size_t row, int col) const {
    if (!has(row, col)) throw std::out_of_range("cell outside the shape");
    return rows[row][static_cast<std::size_t>(col - first_column(row))];
}

namespace {

void check_shape(const std::vector<int>& lambda, const std::vector<int>& mu, bool shifted) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
            throw std::invalid_argument("shape must be weakly decreasing");
        if (shifted) {
            if (lambda[i] < static_cast<int>(i)) throw std::invalid_argument("shifted shape needs lambda_i >= i - 1");
        } else {
            int m = mu.empty() ? 0 : mu.at(i);
            if (m < 0 || m > lambda[i]) throw std::invalid_argument("inner shape must satisfy 0 <= mu_i <= lambda_i");
            if (i + 1 < lambda.size() && !mu.empty() && mu[i] < mu[i + 1])
                throw std::invalid_argument("inner shape must be weakly decreasing");
        }
    }
    if (!shifted && !mu.empty() && mu.size() != lambda.size())
        throw std::invalid_argument("inner shape length differs from outer shape");
}

std::size_t row_length(const std::vector<int>& lambda, const std::vector<int>& mu, bool shifted, std::size_t i) {
    if (shifted) return static_cast<std::size_t>(lambda[i] - static_cast<int>(i));
    return static_cast<std::size_t>(lambda[i] - (mu.empty() ? 0 : mu[i]));
}

}  // namespace

bool validate(const PlanePartition& pp) {
    check_shape(pp.lambda, pp.mu, pp.shifted);
    if (pp.rows.size() != pp.lambda.size()) throw std::invalid_argument("ragged entries: row count differs from shape");
    for (std::size_t i = 0; i < pp.rows.size(); ++i)
        if (pp.rows[i].size() != row_length(pp.lambda, pp.mu, pp.shifted, i))
            throw std::invalid_argument("ragged entries: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(pp.rows[i].size()) + " entries, shape needs " +
                                        std::to_string(row_length(pp.lambda, pp.mu, pp.shifted, i)));
    for (std::size_t i = 0; i < pp.rows.size(); ++i) {
        const auto& r = pp.rows[i];
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] < r[j + 1] + pp.c) return false;
        if (i == 0) continue;
        int f = pp.first_column(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            int col = f + static_cast<int>(j);
            if (pp.has(i - 1, col) && pp.at(i - 1, col) < r[j] + pp.d) return false;
        }
    }
    return true;
}

std::vector<PlanePartition> enumerate_plane_partitions(const EnumerationRequest& req) {
    const std::size_t r = req.lambda.size();
    check_shape(req.lambda, req.mu, req.shifted);
    if (req.a.size() != r || req.b.size() != r) throw std::invalid_argument("a and b must match the shape length");
    if (req.c < 0 || req.d < 0) throw std::invalid_argument("enumeration supports c, d >= 0 only");

    PlanePartition cur;
    cur.lambda = req.lambda;
    cur.mu = req.shifted ? std::vector<int>{} : req.mu;
    cur.shifted = req.shifted;
    cur.c = req.c;
    cur.d = req.d;
    cur.rows.resize(r);

    struct Cell {
        std::size_t row;
        int col;
        long low;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t len = row_length(req.lambda, req.mu, req.shifted, i);
        for (std::size_t j = 0; j < len; ++j)
            cells.push_back({i, cur.first_column(i) + static_cast<int>(j),
                             req.b[i] + static_cast<long>(req.c) * static_cast<long>(len - 1 - j)});
    }
    std::vector<long> low_suffix(cells.size() + 1, 0);
    for (std::size_t k = cells.size(); k-- > 0;) low_suffix[k] = low_suffix[k + 1] + cells[k].low;

    std::vector<PlanePartition> out;
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long sum) {
        if (k == cells.size()) {
            if (sum == req.norm && validate(cur)) out.push_back(cur);
            return;
        }
        const Cell& cell = cells[k];
        auto& row = cur.rows[cell.row];
        bool first = row.empty();
        long hi = first ? req.a[cell.row] : row.back() - req.c;
        if (cell.row > 0 && cur.has(cell.row - 1, cell.col)) hi = std::min(hi, cur.at(cell.row - 1, cell.col) - req.d);
        long lo = cell.low;
        if (req.shifted && first) lo = std::max(lo, req.a[cell.row]);
        hi = std::min(hi, req.norm - sum - low_suffix[k + 1]);
        for (long v = hi; v >= lo; --v) {
            row.push_back(v);
            rec(k + 1, sum + v);
            row.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

SolidPartition SolidPartition::from_layers(SolidKind kind, const std::vector<std::vector<std::vector<long>>>& layers) {
    SolidPartition sp;
    sp.kind = kind;
    sp.dimension = 3;
    for (std::size_t l = 0; l < layers.size(); ++l)
        for (std::size_t r = 0; r < layers[l].size(); ++r) {
            int i3 = static_cast<int>(l) + 1;
            int i1 = kind == SolidKind::strict ? static_cast<int>(r) + 1 : i3 + static_cast<int>(r);
            int start = kind == SolidKind::strict ? 1 : i1;
            for (std::size_t j = 0; j < layers[l][r].size(); ++j)
                sp.cells[{i1, start + static_cast<int>(j), i3}] = layers[l][r][j];
        }
    return sp;
}

long SolidPartition::norm() const {
    long s = 0;
    for (const auto& [k, v] : cells) s += v;
    return s;
}

ExpArray to_exponent_coords(const SolidPartition& sp) {
    if (sp.dimension < 1) throw std::invalid_argument("dimension must be positive");
    const std::size_t d = static_cast<std::size_t>(sp.dimension);
    ExpArray f;
    for (const auto& [idx, v] : sp.cells) {
        if (idx.size() != d) throw std::invalid_argument("ragged layers: index tuple of wrong length");
        // axes in the order x_2, x_3, ..., x_{d+1}: i_2, i_1, i_3, ..., i_d
        std::vector<int> seq;
        seq.push_back(d >= 2 ? idx[1] : idx[0]);
        if (d >= 2) seq.push_back(idx[0]);
        for (std::size_t k = 2; k < d; ++k) seq.push_back(idx[k]);
        std::vector<int> e(d);
        for (std::size_t k = 0; k < d; ++k) {
            if (sp.kind == SolidKind::strict) e[k] = seq[k] - 1;
            else e[k] = seq[k] - (k + 1 < d ? seq[k + 1] : 1);
            if (e[k] < 0) throw std::domain_error("cell outside the index region");
        }
        f[e] = v;
    }
    return f;
}

SolidPartition from_exponent_coords(SolidKind kind, int dim, const ExpArray& f) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    const std::size_t d = static_cast<std::size_t>(dim);
    SolidPartition sp;
    sp.kind = kind;
    sp.dimension = dim;
    for (const auto& [e, v] : f) {
        if (e.size() != d) throw std::invalid_argument("ragged exponent array");
        std::vector<int> seq(d);
        for (std::size_t k = d; k-- > 0;) {
            if (kind == SolidKind::strict) seq[k] = e[k] + 1;
            else seq[k] = e[k] + (k + 1 < d ? seq[k + 1] : 1);
        }
        std::vector<int> idx = seq;
        if (d >= 2) std::swap(idx[0], idx[1]);
        sp.cells[idx] = v;
    }
    return sp;
}

ExpArray shape_of(const ExpArray& f) {
    ExpArray g;
    for (const auto& [e, v] : f) ++g[std::vector<int>(e.begin() + 1, e.end())];
    return g;
}

bool validate_exp_array(SolidKind kind, int dim, const ExpArray& f) {
    if (f.empty() || dim < 1) return false;
    const std::size_t d = static_cast<std::size_t>(dim);
    auto lookup = [&](const std::vector<int>& e) -> const long* {
        auto it = f.find(e);
        return it == f.end() ? nullptr : &it->second;
    };
    for (const auto& [e, v] : f) {
        if (e.size() != d || v < 1) return false;
        for (std::size_t k = 0; k < d; ++k) {
            if (e[k] < 0) return false;
            if (e[k] > 0) {
                auto down = e;
                --down[k];
                if (!lookup(down)) return false;
            }
        }
        for (std::size_t k = 0; k < d; ++k) {
            if (kind == SolidKind::shifted && k > 0) break;
            auto up = e;
            ++up[k];
            if (const long* w = lookup(up); w && !(v > *w)) return false;
        }
        if (kind == SolidKind::shifted) {
            // moving one unit of exponent from x_{k+2} down to x_{k+1}
            for (std::size_t k = 0; k + 1 < d; ++k) {
                if (e[k + 1] == 0) continue;
                auto moved = e;
                ++moved[k];
                --moved[k + 1];
                const long* w = lookup(moved);
                if (!w || *w < v) return false;
            }
        }
    }
    if (d == 1) return true;
    return validate_exp_array(kind, dim - 1, shape_of(f));
}

bool validate_solid(const SolidPartition& sp) {
    if (sp.dimension < 3) throw std::invalid_argument("solid partitions have dimension at least 3");
    ExpArray f;
    try {
        f = to_exponent_coords(sp);
    } catch (const std::domain_error&) {
        return false;
    }
    return validate_exp_array(sp.kind, sp.dimension, f);
}

std::vector<ExpArray> enumerate_exp_arrays(SolidKind kind, const std::vector<int>& norms) {
    if (norms.size() < 2) throw std::invalid_argument("norm chain needs at least two entries");
    const std::size_t d = norms.size() - 1;
    std::vector<ExpArray> out;
    if (d == 1) {
        for (const auto& part : enumerate_distinct(norms[0], norms[1])) {
            ExpArray f;
            for (std::size_t i = 0; i < part.size(); ++i) f[{static_cast<int>(i)}] = part[i];
            out.push_back(std::move(f));
        }
        return out;
    }
    auto shapes = enumerate_exp_arrays(kind, std::vector<int>(norms.begin() + 1, norms.end()));
    for (const auto& g : shapes) {
        std::vector<std::vector<int>> cells;
        for (const auto& [rest, len] : g)
            for (int e0 = 0; e0 < len; ++e0) {
                std::vector<int> e{e0};
                e.insert(e.end(), rest.begin(), rest.end());
                cells.push_back(std::move(e));
            }
        // weight sum (k+1) e_k puts every cell after all cells that bound it from below
        auto weight = [](const std::vector<int>& e) {
            long w = 0;
            for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<long>(k + 1) * e[k];
            return w;
        };
        std::stable_sort(cells.begin(), cells.end(),
                         [&](const auto& x, const auto& y) { return weight(x) > weight(y); });
        ExpArray f;
        std::function<void(std::size_t, long)> rec = [&](std::size_t k, long sum) {
            if (k == cells.size()) {
                if (sum == norms[0] && validate_exp_array(kind, static_cast<int>(d), f)) out.push_back(f);
                return;
            }
            const auto& e = cells[k];
            long lo = 1;
            for (std::size_t ax = 0; ax < d; ++ax) {
                if (kind == SolidKind::shifted && ax > 0) break;
                auto up = e;
                ++up[ax];
                if (auto it = f.find(up); it != f.end()) lo = std::max(lo, it->second + 1);
            }
            if (kind == SolidKind::shifted)
                for (std::size_t ax = 0; ax + 1 < d; ++ax) {
                    if (e[ax] == 0) continue;
                    auto from = e;
                    --from[ax];
                    ++from[ax + 1];
                    if (auto it = f.find(from); it != f.end()) lo = std::max(lo, it->second);
                }
            long hi = norms[0] - sum - static_cast<long>(cells.size() - k - 1);
            for (long v = lo; v <= hi; ++v) {
                f[e] = v;
                rec(k + 1, sum + v);
            }
            f.erase(e);
        };
        rec(0, 0);
    }
    return out;
}

}  // namespace esc
