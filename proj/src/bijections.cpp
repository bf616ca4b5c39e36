#include "escalier/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace esc {

namespace {

bool strictly_decreasing_lengths(const PlanePartition& pp) {
    for (std::size_t i = 0; i < pp.rows.size(); ++i) {
        if (pp.rows[i].empty()) return false;
        if (i + 1 < pp.rows.size() && pp.rows[i].size() <= pp.rows[i + 1].size()) return false;
    }
    return !pp.rows.empty();
}

bool positive(const PlanePartition& pp) {
    for (const auto& r : pp.rows)
        for (long v : r)
            if (v < 1) return false;
    return true;
}

bool validates_as(PlanePartition pp, int c, int d) {
    pp.c = c;
    pp.d = d;
    try {
        return validate(pp);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<std::size_t> flatten_lengths(const PlanePartition& pp) {
    std::vector<std::size_t> out;
    for (const auto& r : pp.rows)
        for (long v : r) out.push_back(static_cast<std::size_t>(v));
    return out;
}

BarCode three_row_code(const PlanePartition& pp) {
    BarCode b;
    b.n = 3;
    auto mid = flatten_lengths(pp);
    b.width = std::accumulate(mid.begin(), mid.end(), std::size_t{0});
    std::vector<std::size_t> bottom;
    for (const auto& r : pp.rows) bottom.push_back(static_cast<std::size_t>(std::accumulate(r.begin(), r.end(), 0L)));
    b.rows = {std::vector<std::size_t>(b.width, 1), mid, bottom};
    check_structure(b);
    return b;
}

// Lengths of the 2-bars grouped by the 3-bar under them.
std::vector<std::vector<long>> grouped_lengths(const BarCode& b) {
    if (b.n != 3) throw std::invalid_argument("expected a bar code with three rows");
    if (!is_admissible(b)) throw std::invalid_argument("bar code is not admissible");
    std::vector<std::vector<long>> rows(b.rows[2].size());
    std::size_t pos = 0;
    for (std::size_t len : b.rows[1]) {
        rows[bar_under(b, 3, pos + 1) - 1].push_back(static_cast<long>(len));
        pos += len;
    }
    return rows;
}

Term term3(Exp a, Exp b, Exp c) { return Term{a, b, c}; }

}  // namespace

bool is_stable_partition(const PlanePartition& rho) {
    if (rho.shifted) return false;
    if (std::any_of(rho.mu.begin(), rho.mu.end(), [](int m) { return m != 0; })) return false;
    return strictly_decreasing_lengths(rho) && positive(rho) && validates_as(rho, 1, 1);
}

bool is_strongly_stable_partition(const PlanePartition& pi) {
    if (!pi.shifted) return false;
    return strictly_decreasing_lengths(pi) && positive(pi) && validates_as(pi, 1, 0);
}

PlanePartition make_strict_pp(const std::vector<std::vector<long>>& rows) {
    PlanePartition pp;
    for (const auto& r : rows) pp.lambda.push_back(static_cast<int>(r.size()));
    pp.c = 1;
    pp.d = 1;
    pp.rows = rows;
    return pp;
}

PlanePartition make_shifted_pp(const std::vector<std::vector<long>>& rows) {
    PlanePartition pp;
    pp.shifted = true;
    for (std::size_t i = 0; i < rows.size(); ++i) pp.lambda.push_back(static_cast<int>(i + rows[i].size()));
    pp.c = 1;
    pp.d = 0;
    pp.rows = rows;
    return pp;
}

BarCode barcode_from_strict_pp(const PlanePartition& rho) {
    if (!is_stable_partition(rho)) throw std::invalid_argument("not a row- and column-strict plane partition");
    return three_row_code(rho);
}

PlanePartition strict_pp_from_barcode(const BarCode& b) {
    auto pp = make_strict_pp(grouped_lengths(b));
    if (!is_stable_partition(pp)) throw std::domain_error("bar code does not come from a stable ideal");
    return pp;
}

MonomialIdeal ideal_from_strict_pp(const PlanePartition& rho) {
    if (!is_stable_partition(rho)) throw std::invalid_argument("not a row- and column-strict plane partition");
    std::vector<Term> gens{term3(0, 0, static_cast<Exp>(rho.rows.size()))};
    for (std::size_t i = 0; i < rho.rows.size(); ++i) {
        gens.push_back(term3(0, static_cast<Exp>(rho.rows[i].size()), static_cast<Exp>(i)));
        for (std::size_t j = 0; j < rho.rows[i].size(); ++j)
            gens.push_back(term3(static_cast<Exp>(rho.rows[i][j]), static_cast<Exp>(j), static_cast<Exp>(i)));
    }
    return MonomialIdeal{3, normalize(std::move(gens))};
}

BarCode barcode_from_shifted_pp(const PlanePartition& pi) {
    if (!is_strongly_stable_partition(pi)) throw std::invalid_argument("not a shifted (1,0)-plane partition");
    return three_row_code(pi);
}

PlanePartition shifted_pp_from_barcode(const BarCode& b) {
    auto pp = make_shifted_pp(grouped_lengths(b));
    if (!is_strongly_stable_partition(pp)) throw std::domain_error("bar code does not come from a strongly stable ideal");
    return pp;
}

MonomialIdeal ideal_from_shifted_pp(const PlanePartition& pi) {
    if (!is_strongly_stable_partition(pi)) throw std::invalid_argument("not a shifted (1,0)-plane partition");
    std::vector<Term> gens{term3(0, 0, static_cast<Exp>(pi.rows.size()))};
    for (std::size_t i = 0; i < pi.rows.size(); ++i) {
        gens.push_back(term3(0, static_cast<Exp>(pi.rows[i].size()), static_cast<Exp>(i)));
        for (std::size_t q = 0; q < pi.rows[i].size(); ++q)
            gens.push_back(term3(static_cast<Exp>(pi.rows[i][q]), static_cast<Exp>(q), static_cast<Exp>(i)));
    }
    return MonomialIdeal{3, normalize(std::move(gens))};
}

IntPartition partition_2vars(const BarCode& b) {
    if (b.n != 2) throw std::invalid_argument("expected a bar code with two rows");
    if (!is_admissible(b)) throw std::invalid_argument("bar code is not admissible");
    IntPartition alpha;
    for (std::size_t len : b.rows[1]) alpha.push_back(static_cast<int>(len));
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i] <= alpha[i + 1]) throw std::domain_error("bar code does not come from a stable ideal");
    return alpha;
}

namespace {

void check_distinct(const IntPartition& alpha) {
    if (alpha.empty() || alpha.back() < 1) throw std::invalid_argument("partition needs positive parts");
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i] <= alpha[i + 1]) throw std::invalid_argument("partition parts must be distinct and decreasing");
}

}  // namespace

BarCode barcode_from_partition_2vars(const IntPartition& alpha) {
    check_distinct(alpha);
    BarCode b;
    b.n = 2;
    b.width = static_cast<std::size_t>(std::accumulate(alpha.begin(), alpha.end(), 0));
    b.rows = {std::vector<std::size_t>(b.width, 1), std::vector<std::size_t>(alpha.begin(), alpha.end())};
    return b;
}

MonomialIdeal ideal_from_partition_2vars(const IntPartition& alpha) {
    check_distinct(alpha);
    std::vector<Term> gens{Term{0, static_cast<Exp>(alpha.size())}};
    for (std::size_t i = 0; i < alpha.size(); ++i) gens.push_back(Term{alpha[i], static_cast<Exp>(i)});
    return MonomialIdeal{2, normalize(std::move(gens))};
}

namespace {

std::vector<long> flat(const PlanePartition& pp) {
    std::vector<long> out;
    for (const auto& r : pp.rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<ListedIdeal> list_barlist(const std::vector<int>& bl, IdealClass cls) {
    int p = bl[0], h = bl[1], k = bl[2];
    std::vector<ListedIdeal> out;
    for (const auto& alpha : enumerate_distinct(h, k)) {
        std::vector<PlanePartition> parts;
        std::vector<long> b(alpha.size(), 1);
        if (cls == IdealClass::stable) {
            auto a = a_vector_stable(alpha, p);
            if (!a) continue;
            parts = enumerate_plane_partitions({alpha, {}, false, 1, 1, *a, b, p});
        } else {
            auto lambda = shifted_shape(alpha);
            for (const auto& a : a_vectors_strongly(lambda, p)) {
                auto more = enumerate_plane_partitions({lambda, {}, true, 1, 0, a, b, p});
                parts.insert(parts.end(), more.begin(), more.end());
            }
            std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return flat(x) > flat(y); });
        }
        for (auto& pp : parts) {
            if (cls == IdealClass::stable)
                out.push_back({bl, pp, barcode_from_strict_pp(pp), ideal_from_strict_pp(pp)});
            else
                out.push_back({bl, pp, barcode_from_shifted_pp(pp), ideal_from_shifted_pp(pp)});
        }
    }
    return out;
}

}  // namespace

IdealListing list_ideals(int p, int n, IdealClass cls, Exec exec) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    IdealListing listing{p, n, cls, {}};
    if (n == 2) {
        for (int h = 1; h <= max_h_2vars(p); ++h)
            for (const auto& alpha : enumerate_distinct(p, h)) {
                auto pp = make_strict_pp({std::vector<long>(alpha.begin(), alpha.end())});
                listing.items.push_back({{p, h}, pp, barcode_from_partition_2vars(alpha), ideal_from_partition_2vars(alpha)});
            }
        return listing;
    }
    if (n != 3) throw std::invalid_argument("listing supports 2 or 3 variables, got " + std::to_string(n));
    auto lists = bar_lists_3vars(p);
    std::vector<std::vector<ListedIdeal>> chunks(lists.size());
    const long m = static_cast<long>(lists.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < m; ++i) chunks[static_cast<std::size_t>(i)] = list_barlist(lists[static_cast<std::size_t>(i)], cls);
    } else {
        for (long i = 0; i < m; ++i) chunks[static_cast<std::size_t>(i)] = list_barlist(lists[static_cast<std::size_t>(i)], cls);
    }
    for (auto& c : chunks)
        for (auto& item : c) listing.items.push_back(std::move(item));
    return listing;
}

}  // namespace esc
