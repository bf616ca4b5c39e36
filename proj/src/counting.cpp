#include "escalier/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace esc {

std::string to_string(IdealClass c) { return c == IdealClass::stable ? "stable" : "strongly-stable"; }

IdealClass parse_class(const std::string& s) {
    if (s == "stable") return IdealClass::stable;
    if (s == "strongly-stable" || s == "strongly_stable") return IdealClass::strongly_stable;
    throw std::invalid_argument("unknown ideal class '" + s + "' (expected stable or strongly-stable)");
}

int max_h_2vars(int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    int h = 0;
    while (static_cast<long>(h + 1) * (h + 2) / 2 <= p) ++h;
    return h;
}

BigInt count_2vars(int p) {
    BigInt s = 0;
    for (int i = 1; i <= max_h_2vars(p); ++i) s += count_Q(p, i);
    return s;
}

BarListCensus census_2vars(int p, IdealClass cls) {
    BarListCensus c{p, 2, cls, {}, 0};
    for (int h = 1; h <= max_h_2vars(p); ++h) {
        BigInt q = count_Q(p, h);
        c.rows.push_back({{p, h}, {}, q});
        c.total += q;
    }
    return c;
}

int max_k_3vars(int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    int k = 0;
    while (static_cast<long>(k + 1) * (k + 2) * (k + 3) / 6 <= p) ++k;
    return k;
}

bool shape_feasible(int r, int k, int p) {
    if (k < 1 || r < k * (k + 1) / 2) return false;
    std::function<bool(int, int, int, long)> rec = [&](int remaining, int cap, int left, long budget) {
        if (left == 0) return remaining == 0;
        long rest_min = static_cast<long>(left - 1) * left * (left + 1) / 6;  // staircase (left-1, ..., 1)
        for (int v = std::min(cap, remaining - (left - 1) * left / 2); v >= left; --v) {
            long cost = static_cast<long>(v) * (v + 1) / 2;
            if (cost + rest_min > budget) continue;
            if (rec(remaining - v, v - 1, left - 1, budget - cost)) return true;
        }
        return false;
    };
    return rec(r, r, k, p);
}

std::vector<std::vector<int>> bar_lists_3vars(int p) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= max_k_3vars(p); ++k)
        // the least minimal sum over shapes grows with h, so the first failure ends the run
        for (int h = k * (k + 1) / 2; h <= p && shape_feasible(h, k, p); ++h) out.push_back({p, h, k});
    return out;
}

namespace {

void check_barlist(int p, int h, int k) {
    if (p < 1 || k < 1 || k > max_k_3vars(p) || h < k * (k + 1) / 2 || !shape_feasible(h, k, p))
        throw std::out_of_range("bar list (" + std::to_string(p) + "," + std::to_string(h) + "," + std::to_string(k) +
                                ") is outside the admissible range");
}

std::vector<long> ones(std::size_t r) { return std::vector<long>(r, 1); }

BigInt strict_coefficient(const IntPartition& beta, const std::vector<long>& a, int p) {
    return gf_strict(beta, {}, a, ones(beta.size()), 1, 1, p).coeff(p);
}

BigInt shifted_coefficient(const std::vector<int>& lambda, const std::vector<long>& a, int p) {
    return gf_shifted(lambda, a, ones(lambda.size()), 1, 0, p).coeff(p);
}

// One determinant to evaluate: bar list row, shape within it, and a-vector.
struct WorkItem {
    std::size_t row;
    std::size_t shape;
    std::vector<int> lambda;
    std::vector<long> a;
};

template <class Fn>
void run_items(std::vector<WorkItem>& items, std::vector<BarListRow>& rows, Fn coefficient) {
    std::vector<BigInt> results(items.size());
    const long m = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < m; ++i) results[static_cast<std::size_t>(i)] = coefficient(items[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < items.size(); ++i) rows[items[i].row].shapes[items[i].shape].count += results[i];
}

void finish(BarListCensus& c) {
    c.total = 0;
    for (auto& row : c.rows) {
        row.subtotal = 0;
        for (const auto& s : row.shapes) row.subtotal += s.count;
        c.total += row.subtotal;
    }
}

BarListRow k1_row(int p, int h) { return {{p, h, 1}, {{{h}, count_Q(p, h)}}, count_Q(p, h)}; }

// Serial reference: every shape with a feasible a gets a determinant, no shortcuts.
BarListRow stable_row_serial(int p, int h, int k) {
    if (k == 1) return k1_row(p, h);
    BarListRow row{{p, h, k}, {}, 0};
    for (const auto& beta : enumerate_distinct(h, k)) {
        BigInt c = 0;
        if (auto a = a_vector_stable(beta, p)) c = strict_coefficient(beta, *a, p);
        row.shapes.push_back({beta, c});
        row.subtotal += c;
    }
    return row;
}

BarListRow sstable_row_serial(int p, int h, int k) {
    if (k == 1) return k1_row(p, h);
    BarListRow row{{p, h, k}, {}, 0};
    for (const auto& alpha : enumerate_distinct(h, k)) {
        auto lambda = shifted_shape(alpha);
        BigInt c = 0;
        for (const auto& a : a_vectors_strongly(lambda, p)) c += shifted_coefficient(lambda, a, p);
        row.shapes.push_back({alpha, c});
        row.subtotal += c;
    }
    return row;
}

// Lays out the rows and the work items; shapes whose minimal sum exceeds p
// hold no partition of norm p and get no item.
void plan(const std::vector<std::vector<int>>& lists, IdealClass cls, BarListCensus& c, std::vector<WorkItem>& items) {
    for (const auto& bl : lists) {
        int p = bl[0], h = bl[1], k = bl[2];
        std::size_t r = c.rows.size();
        if (k == 1) {
            c.rows.push_back(k1_row(p, h));
            continue;
        }
        c.rows.push_back({bl, {}, 0});
        for (const auto& alpha : enumerate_distinct(h, k)) {
            std::size_t s = c.rows[r].shapes.size();
            c.rows[r].shapes.push_back({alpha, 0});
            if (minimal_sum(alpha) > p) continue;
            if (cls == IdealClass::stable) {
                if (auto a = a_vector_stable(alpha, p)) items.push_back({r, s, alpha, *a});
            } else {
                auto lambda = shifted_shape(alpha);
                for (auto& a : a_vectors_strongly(lambda, p)) items.push_back({r, s, lambda, std::move(a)});
            }
        }
    }
}

BarListCensus parallel_census(const std::vector<std::vector<int>>& lists, int p, IdealClass cls) {
    BarListCensus c{p, 3, cls, {}, 0};
    std::vector<WorkItem> items;
    plan(lists, cls, c, items);
    if (cls == IdealClass::stable)
        run_items(items, c.rows, [p](const WorkItem& w) { return strict_coefficient(w.lambda, w.a, p); });
    else
        run_items(items, c.rows, [p](const WorkItem& w) { return shifted_coefficient(w.lambda, w.a, p); });
    finish(c);
    return c;
}

}  // namespace

std::optional<std::vector<long>> a_vector_stable(const IntPartition& beta, int p) {
    if (beta.empty()) throw std::invalid_argument("empty shape");
    long a1 = p - static_cast<long>(beta[0]) * (beta[0] - 1) / 2;
    for (std::size_t i = 1; i < beta.size(); ++i) a1 -= static_cast<long>(beta[i]) * (beta[i] + 1) / 2;
    std::vector<long> a;
    for (std::size_t i = 0; i < beta.size(); ++i) a.push_back(a1 - static_cast<long>(i));
    if (a.back() < 1) return std::nullopt;
    return a;
}

BarListRow count_stable_barlist(int p, int h, int k, Exec exec) {
    check_barlist(p, h, k);
    if (exec == Exec::serial) return stable_row_serial(p, h, k);
    return parallel_census({{p, h, k}}, p, IdealClass::stable).rows.front();
}

BarListCensus count_stable_3vars(int p, Exec exec) {
    auto lists = bar_lists_3vars(p);
    if (exec == Exec::parallel) return parallel_census(lists, p, IdealClass::stable);
    BarListCensus c{p, 3, IdealClass::stable, {}, 0};
    for (const auto& bl : lists) c.rows.push_back(stable_row_serial(bl[0], bl[1], bl[2]));
    finish(c);
    return c;
}

std::vector<int> shifted_shape(const IntPartition& alpha) {
    std::vector<int> lambda;
    for (std::size_t i = 0; i < alpha.size(); ++i) lambda.push_back(static_cast<int>(i) + alpha[i]);
    return lambda;
}

std::vector<std::vector<long>> a_vectors_strongly(const std::vector<int>& lambda, int p) {
    const std::size_t r = lambda.size();
    if (r == 0) throw std::invalid_argument("empty shape");
    long M = p;
    for (std::size_t j = 0; j < r; ++j) {
        long cj = j == 0 ? lambda[0] - 1 : lambda[j] - static_cast<long>(j);
        M -= cj * (cj + 1) / 2;
    }
    std::vector<std::vector<long>> out;
    std::vector<long> a(r);
    // fill a_r first, then a_{r-1}, ..., a_1
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        long i = static_cast<long>(idx) + 1;
        long lo = idx + 1 == r ? lambda[idx] - i + 1 : a[idx + 1] + 1;
        for (long v = lo; v <= M - i + 1; ++v) {
            a[idx] = v;
            if (idx == 0) out.push_back(a);
            else rec(idx - 1);
        }
    };
    rec(r - 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

BarListRow count_sstable_barlist(int p, int h, int k, Exec exec) {
    check_barlist(p, h, k);
    if (exec == Exec::serial) return sstable_row_serial(p, h, k);
    return parallel_census({{p, h, k}}, p, IdealClass::strongly_stable).rows.front();
}

BarListCensus count_sstable_3vars(int p, Exec exec) {
    auto lists = bar_lists_3vars(p);
    if (exec == Exec::parallel) return parallel_census(lists, p, IdealClass::strongly_stable);
    BarListCensus c{p, 3, IdealClass::strongly_stable, {}, 0};
    for (const auto& bl : lists) c.rows.push_back(sstable_row_serial(bl[0], bl[1], bl[2]));
    finish(c);
    return c;
}

BarListCensus census(int n, int p, IdealClass cls, Exec exec) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (n == 2) return census_2vars(p, cls);
    if (n == 3) return cls == IdealClass::stable ? count_stable_3vars(p, exec) : count_sstable_3vars(p, exec);
    throw std::invalid_argument("counting supports 2 or 3 variables, got " + std::to_string(n));
}

long closed_form_shape22(int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    long q = p - 1;
    return (q * q + 6) / 12;
}

}  // namespace esc
