#include "escalier/starset.hpp"

#include <algorithm>
#include <stdexcept>

namespace esc {

StarSet star_set_from_barcode(const BarCode& b) {
    if (!is_admissible(b)) throw std::invalid_argument("star set needs an admissible bar code");
    auto labels = decode(b);
    std::vector<Term> out;
    auto emit = [&](std::size_t i, std::size_t col) {  // col is a 0-based 1-bar lying over the bar in question
        out.push_back(times_var(p_operator(labels[col], i), i));
    };
    for (std::size_t i = 1; i <= b.n; ++i) {
        // rule a): the last bar of every row
        emit(i, b.width - 1);
        if (i == b.n) continue;
        // rule b): consecutive i-bars lying over different (i+1)-bars
        std::size_t pos = 0;
        for (std::size_t j = 0; j + 1 < b.rows[i - 1].size(); ++j) {
            std::size_t last_col = pos + b.rows[i - 1][j] - 1;
            if (bar_under(b, i + 1, last_col + 1) != bar_under(b, i + 1, last_col + 2)) emit(i, last_col);
            pos += b.rows[i - 1][j];
        }
    }
    return StarSet{normalize(std::move(out)), OrderIdeal::make(b.n, labels)};
}

StarSet star_set_direct(const OrderIdeal& N) {
    if (N.terms.empty()) throw std::invalid_argument("star set of an empty order ideal");
    if (!is_order_ideal(N.terms)) throw std::invalid_argument("input is not an order ideal");
    std::vector<Term> out;
    for (const auto& t : N.terms)
        for (std::size_t i = 1; i <= N.n; ++i) {
            Term s = times_var(t, i);
            if (!N.contains(s) && N.contains(div_var(s, min_var(s)))) out.push_back(std::move(s));
        }
    return StarSet{normalize(std::move(out)), N};
}

std::vector<std::size_t> multiplicative_vars(const std::vector<Term>& m, const Term& t) {
    if (std::find(m.begin(), m.end(), t) == m.end()) throw std::invalid_argument(to_string(t) + " is not in the set");
    std::vector<std::size_t> out;
    const std::size_t n = t.arity();
    for (std::size_t j = 1; j <= n; ++j) {
        bool blocked = std::any_of(m.begin(), m.end(), [&](const Term& u) {
            if (u.deg(j) <= t.deg(j)) return false;
            for (std::size_t k = j + 1; k <= n; ++k)
                if (u.deg(k) != t.deg(k)) return false;
            return true;
        });
        if (!blocked) out.push_back(j);
    }
    return out;
}

namespace {

bool in_cone(const Term& base, const std::vector<std::size_t>& mult, const Term& s) {
    if (!divides(base, s)) return false;
    for (std::size_t j = 1; j <= s.arity(); ++j)
        if (s.deg(j) != base.deg(j) && std::find(mult.begin(), mult.end(), j) == mult.end()) return false;
    return true;
}

}  // namespace

bool is_complete(const std::vector<Term>& m) {
    std::vector<std::vector<std::size_t>> mult;
    for (const auto& t : m) mult.push_back(multiplicative_vars(m, t));
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t j = 1; j <= m[a].arity(); ++j) {
            if (std::find(mult[a].begin(), mult[a].end(), j) != mult[a].end()) continue;
            Term s = times_var(m[a], j);
            bool covered = false;
            for (std::size_t b = 0; b < m.size() && !covered; ++b) covered = in_cone(m[b], mult[b], s);
            if (!covered) return false;
        }
    return true;
}

bool is_stably_complete(const std::vector<Term>& m) {
    if (m.empty()) return false;
    for (const auto& t : m) {
        // the unit term has every variable multiplicative
        std::size_t top = t.is_one() ? t.arity() : min_var(t);
        std::vector<std::size_t> want;
        for (std::size_t i = 1; i <= top; ++i) want.push_back(i);
        if (multiplicative_vars(m, t) != want) return false;
    }
    return is_complete(m);
}

StarSet pommaret_basis(const OrderIdeal& N) {
    StarSet s = star_set_direct(N);
    if (!is_stably_complete(s.terms)) throw std::logic_error("star set is not stably complete");
    return s;
}

bool is_stable_via_starset(const OrderIdeal& N) {
    return star_set_direct(N).terms == minimal_generators(N).generators;
}

}  // namespace esc
