#include "escalier/oracle.hpp"

#include "escalier/barcode.hpp"
#include "escalier/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace esc {

int oracle_cap(int n) {
    if (n < 1) throw std::invalid_argument("number of variables must be positive");
    std::string var = "ESCALIER_CAP_N" + std::to_string(n);
    if (const char* env = std::getenv(var.c_str())) {
        try {
            std::size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument(var + " must be a positive integer, got '" + env + "'");
        }
    }
    switch (n) {
        case 1: return 10000;
        case 2: return 40;
        case 3: return 12;
        case 4: return 8;
        default: return 6;
    }
}

namespace {

// Terms are added in strictly increasing Lex order, so every order ideal
// arises from exactly one sequence: its own elements sorted by Lex.
void extend(std::vector<Term>& cur, std::size_t n, std::size_t p, std::vector<OrderIdeal>& out) {
    if (cur.size() == p) {
        out.push_back(OrderIdeal{n, cur});
        return;
    }
    std::vector<Term> cand;
    for (const auto& t : cur)
        for (std::size_t i = 1; i <= n; ++i) {
            Term s = times_var(t, i);
            if (lex_compare(s, cur.back()) <= 0) continue;
            bool ok = true;
            for (std::size_t j = 1; j <= n && ok; ++j)
                if (s.deg(j) > 0 && !contains_sorted(cur, div_var(s, j))) ok = false;
            if (ok) cand.push_back(std::move(s));
        }
    cand = normalize(std::move(cand));
    for (auto& c : cand) {
        cur.push_back(c);
        extend(cur, n, p, out);
        cur.pop_back();
    }
}

void check_args(int n, int p) {
    if (n < 1) throw std::invalid_argument("number of variables must be positive");
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (p > oracle_cap(n))
        throw std::out_of_range("p=" + std::to_string(p) + " exceeds the oracle cap " + std::to_string(oracle_cap(n)) +
                                " for n=" + std::to_string(n) + " (set ESCALIER_CAP_N" + std::to_string(n) + ")");
}

}  // namespace

EscalierEnumeration enumerate_order_ideals(int n, int p, Exec exec) {
    check_args(n, p);
    const std::size_t nn = static_cast<std::size_t>(n), pp = static_cast<std::size_t>(p);
    EscalierEnumeration res{n, p, {}};
    std::vector<Term> root{unit_term(nn)};
    if (exec == Exec::serial) {
        extend(root, nn, pp, res.items);
        return res;
    }
    // Split at a shallow depth; subtrees are explored independently and
    // concatenated in the serial visiting order.
    std::vector<OrderIdeal> frontier;
    extend(root, nn, std::min<std::size_t>(pp, 4), frontier);
    std::vector<std::vector<OrderIdeal>> parts(frontier.size());
    const long m = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < m; ++i) {
        auto cur = frontier[static_cast<std::size_t>(i)].terms;
        extend(cur, nn, pp, parts[static_cast<std::size_t>(i)]);
    }
    for (auto& part : parts)
        for (auto& N : part) res.items.push_back(std::move(N));
    return res;
}

bool in_class(const OrderIdeal& N, IdealClass cls) {
    MonomialIdeal g = minimal_generators(N);
    return cls == IdealClass::stable ? is_stable(g) : is_strongly_stable(g);
}

BigInt count_by_definition(int n, int p, IdealClass cls, Exec exec) {
    BigInt total = 0;
    for (const auto& [bl, c] : count_by_definition_per_barlist(n, p, cls, exec)) total += c;
    return total;
}

std::map<std::vector<int>, BigInt> count_by_definition_per_barlist(int n, int p, IdealClass cls, Exec exec) {
    auto all = enumerate_order_ideals(n, p, exec);
    std::vector<char> keep(all.items.size(), 0);
    const long m = static_cast<long>(all.items.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < m; ++i) keep[static_cast<std::size_t>(i)] = in_class(all.items[static_cast<std::size_t>(i)], cls);
    } else {
        for (long i = 0; i < m; ++i) keep[static_cast<std::size_t>(i)] = in_class(all.items[static_cast<std::size_t>(i)], cls);
    }
    std::map<std::vector<int>, BigInt> out;
    for (std::size_t i = 0; i < all.items.size(); ++i) {
        if (!keep[i]) continue;
        auto bl = bar_list(encode(all.items[i].terms));
        out[std::vector<int>(bl.begin(), bl.end())] += 1;
    }
    return out;
}

bool ProbeReport::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const ProbeRow& r) { return r.agree(); });
}

ProbeReport conjecture_probe(int n, int p, IdealClass cls) {
    if (n != 4) throw std::invalid_argument("the probe is defined for n = 4 only");
    check_args(n, p);
    ProbeReport rep{n, p, cls, {}};
    auto ideals = count_by_definition_per_barlist(n, p, cls);
    SolidKind kind = cls == IdealClass::stable ? SolidKind::strict : SolidKind::shifted;
    std::map<std::vector<int>, BigInt> arrays;
    for (int p2 = 1; p2 <= p; ++p2)
        for (int p3 = 1; p3 <= p2; ++p3)
            for (int p4 = 1; p4 <= p3; ++p4) {
                BigInt count = 0;
                for (const auto& f : enumerate_exp_arrays(kind, {p, p2, p3, p4}))
                    if (validate_solid(from_exponent_coords(kind, 3, f))) count += 1;
                if (count != 0) arrays[{p, p2, p3, p4}] = count;
            }
    std::map<std::vector<int>, ProbeRow> merged;
    for (const auto& [bl, c] : ideals) merged[bl].ideals = c;
    for (const auto& [bl, c] : arrays) merged[bl].partitions = c;
    for (auto& [bl, row] : merged) {
        row.bar_list = bl;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace esc
