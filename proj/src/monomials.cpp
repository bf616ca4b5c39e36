#include "escalier/monomials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace esc {

namespace {

void check_arity(const Term& a, const Term& b) {
    if (a.arity() != b.arity())
        throw std::invalid_argument("terms of different arity: " + std::to_string(a.arity()) +
                                    " vs " + std::to_string(b.arity()));
}

void check_var(const Term& t, std::size_t i) {
    if (i < 1 || i > t.arity())
        throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." +
                                std::to_string(t.arity()));
}

}  // namespace

long Term::degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

bool Term::is_one() const {
    return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
}

std::strong_ordering lex_compare(const Term& a, const Term& b) {
    check_arity(a, b);
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
    }
    return std::strong_ordering::equal;
}

Term p_operator(const Term& t, std::size_t i) {
    check_var(t, i);
    Term r = t;
    std::fill(r.e.begin(), r.e.begin() + static_cast<long>(i - 1), 0);
    return r;
}

std::size_t min_var(const Term& t) {
    for (std::size_t i = 0; i < t.arity(); ++i)
        if (t.e[i] > 0) return i + 1;
    throw std::invalid_argument("min_var of the unit term");
}

Term unit_term(std::size_t n) { return Term(n); }

Term variable(std::size_t n, std::size_t i) {
    Term t(n);
    check_var(t, i);
    t.e[i - 1] = 1;
    return t;
}

Term times_var(const Term& t, std::size_t i) {
    check_var(t, i);
    Term r = t;
    ++r.e[i - 1];
    return r;
}

Term div_var(const Term& t, std::size_t i) {
    check_var(t, i);
    if (t.e[i - 1] == 0) throw std::invalid_argument("x" + std::to_string(i) + " does not divide " + to_string(t));
    Term r = t;
    --r.e[i - 1];
    return r;
}

bool divides(const Term& a, const Term& b) {
    check_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

std::vector<Term> normalize(std::vector<Term> terms) {
    if (terms.empty()) return terms;
    for (const auto& t : terms) {
        check_arity(t, terms.front());
        for (Exp x : t.e)
            if (x < 0) throw std::invalid_argument("negative exponent in " + to_string(t));
    }
    std::sort(terms.begin(), terms.end(), LexLess{});
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return terms;
}

bool contains_sorted(const std::vector<Term>& sorted, const Term& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t, LexLess{});
}

bool is_order_ideal(const std::vector<Term>& m) {
    if (m.empty()) return true;
    auto s = normalize(m);
    for (const auto& t : s)
        for (std::size_t i = 1; i <= t.arity(); ++i)
            if (t.deg(i) > 0 && !contains_sorted(s, div_var(t, i))) return false;
    return true;
}

OrderIdeal OrderIdeal::make(std::size_t n, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.arity() != n) throw std::invalid_argument("term " + to_string(t) + " has arity " +
                                                        std::to_string(t.arity()) + ", expected " + std::to_string(n));
    OrderIdeal N{n, normalize(std::move(terms))};
    if (!is_order_ideal(N.terms)) throw std::invalid_argument("term set is not an order ideal");
    return N;
}

MonomialIdeal MonomialIdeal::make(std::size_t n, std::vector<Term> gens) {
    for (const auto& t : gens)
        if (t.arity() != n) throw std::invalid_argument("generator arity mismatch");
    gens = normalize(std::move(gens));
    std::vector<Term> keep;
    for (const auto& g : gens) {
        bool redundant = std::any_of(gens.begin(), gens.end(),
                                     [&](const Term& h) { return !(h == g) && divides(h, g); });
        if (!redundant) keep.push_back(g);
    }
    return MonomialIdeal{n, std::move(keep)};
}

bool MonomialIdeal::contains(const Term& t) const {
    return std::any_of(generators.begin(), generators.end(), [&](const Term& g) { return divides(g, t); });
}

MonomialIdeal minimal_generators(const OrderIdeal& N) {
    if (!is_order_ideal(N.terms)) throw std::invalid_argument("input is not an order ideal");
    if (N.terms.empty()) return MonomialIdeal{N.n, {unit_term(N.n)}};
    std::vector<Term> out;
    for (const auto& t : N.terms) {
        for (std::size_t i = 1; i <= N.n; ++i) {
            Term s = times_var(t, i);
            if (N.contains(s)) continue;
            bool corner = true;
            for (std::size_t j = 1; j <= N.n && corner; ++j)
                if (s.deg(j) > 0 && !N.contains(div_var(s, j))) corner = false;
            if (corner) out.push_back(std::move(s));
        }
    }
    return MonomialIdeal{N.n, normalize(std::move(out))};
}

std::vector<Term> border_set(const OrderIdeal& N) {
    std::vector<Term> out;
    for (const auto& t : N.terms)
        for (std::size_t i = 1; i <= N.n; ++i) {
            Term s = times_var(t, i);
            if (!N.contains(s)) out.push_back(std::move(s));
        }
    return normalize(std::move(out));
}

OrderIdeal escalier(const MonomialIdeal& I) {
    if (I.generators.empty()) throw std::invalid_argument("ideal has no generators");
    for (std::size_t i = 1; i <= I.n; ++i) {
        bool pure = std::any_of(I.generators.begin(), I.generators.end(), [&](const Term& g) {
            for (std::size_t j = 1; j <= I.n; ++j)
                if (j != i && g.deg(j) != 0) return false;
            return true;
        });
        if (!pure) throw std::invalid_argument("ideal has infinite escalier (no power of x" + std::to_string(i) + ")");
    }
    std::set<Term, LexLess> seen;
    std::vector<Term> stack;
    Term one = unit_term(I.n);
    if (!I.contains(one)) {
        seen.insert(one);
        stack.push_back(one);
    }
    while (!stack.empty()) {
        Term t = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = 1; i <= I.n; ++i) {
            Term s = times_var(t, i);
            if (!I.contains(s) && seen.insert(s).second) stack.push_back(s);
        }
    }
    return OrderIdeal{I.n, std::vector<Term>(seen.begin(), seen.end())};
}

bool is_stable(const MonomialIdeal& I) {
    if (I.generators.empty()) throw std::invalid_argument("empty generator set");
    for (const auto& g : I.generators) {
        if (g.is_one()) continue;
        std::size_t m = min_var(g);
        Term base = div_var(g, m);
        for (std::size_t j = m + 1; j <= I.n; ++j)
            if (!I.contains(times_var(base, j))) return false;
    }
    return true;
}

bool is_strongly_stable(const MonomialIdeal& I) {
    if (I.generators.empty()) throw std::invalid_argument("empty generator set");
    for (const auto& g : I.generators)
        for (std::size_t i = 1; i <= I.n; ++i) {
            if (g.deg(i) == 0) continue;
            Term base = div_var(g, i);
            for (std::size_t j = i + 1; j <= I.n; ++j)
                if (!I.contains(times_var(base, j))) return false;
        }
    return true;
}

std::string to_string(const Term& t) {
    std::string s;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (t.e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (t.e[i] > 1) s += '^' + std::to_string(t.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const std::vector<Term>& ts) {
    std::string s = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ", ";
        s += to_string(ts[i]);
    }
    return s + "}";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long parse_number(std::string_view s, std::string_view whole) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && v > std::numeric_limits<Exp>::max()))
        throw std::invalid_argument("exponent overflow in term '" + std::string(whole) + "'");
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0)
        throw std::invalid_argument("malformed term '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Term parse_term(std::string_view text, std::size_t n) {
    std::string_view s = trim(text);
    Term t(n);
    if (s == "1") return t;
    if (s.empty()) throw std::invalid_argument("empty term");
    while (!s.empty()) {
        std::size_t star = s.find('*');
        std::string_view factor = trim(s.substr(0, star));
        s = star == std::string_view::npos ? std::string_view{} : s.substr(star + 1);
        if (factor.size() < 2 || factor[0] != 'x') throw std::invalid_argument("malformed term '" + std::string(text) + "'");
        std::size_t caret = factor.find('^');
        long var = parse_number(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
        long ex = caret == std::string_view::npos ? 1 : parse_number(factor.substr(caret + 1), text);
        if (var < 1 || static_cast<std::size_t>(var) > n)
            throw std::invalid_argument("variable x" + std::to_string(var) + " outside 1.." + std::to_string(n));
        long total = static_cast<long>(t.e[var - 1]) + ex;
        if (total > std::numeric_limits<Exp>::max()) throw std::invalid_argument("exponent overflow in term '" + std::string(text) + "'");
        t.e[var - 1] = static_cast<Exp>(total);
    }
    return t;
}

std::vector<Term> parse_terms(std::string_view s, std::size_t n) {
    std::vector<Term> out;
    while (true) {
        std::size_t comma = s.find(',');
        std::string_view piece = trim(s.substr(0, comma));
        if (!piece.empty()) out.push_back(parse_term(piece, n));
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

}  // namespace esc
