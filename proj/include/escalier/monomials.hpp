#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace esc {

using Exp = std::int32_t;

// A term x_1^{g_1} ... x_n^{g_n}, stored by its exponent vector.
// Variables are 1-based in every public function; e[0] is the exponent of x_1.
struct Term {
    std::vector<Exp> e;

    Term() = default;
    explicit Term(std::size_t n) : e(n, 0) {}
    Term(std::initializer_list<Exp> il) : e(il) {}
    explicit Term(std::vector<Exp> v) : e(std::move(v)) {}

    std::size_t arity() const { return e.size(); }
    Exp deg(std::size_t var) const { return e.at(var - 1); }
    long degree() const;
    bool is_one() const;

    bool operator==(const Term&) const = default;
};

// Lex with x_1 < ... < x_n: the highest-index differing exponent decides.
std::strong_ordering lex_compare(const Term& a, const Term& b);

struct LexLess {
    bool operator()(const Term& a, const Term& b) const { return lex_compare(a, b) < 0; }
};

Term p_operator(const Term& t, std::size_t i);
std::size_t min_var(const Term& t);
Term unit_term(std::size_t n);
Term variable(std::size_t n, std::size_t i);
Term times_var(const Term& t, std::size_t i);
Term div_var(const Term& t, std::size_t i);
bool divides(const Term& a, const Term& b);

// Sort Lex-ascending and drop repeats; throws on mixed arity.
std::vector<Term> normalize(std::vector<Term> terms);
bool contains_sorted(const std::vector<Term>& sorted, const Term& t);

struct OrderIdeal {
    std::size_t n = 0;
    std::vector<Term> terms;  // Lex-ascending

    static OrderIdeal make(std::size_t n, std::vector<Term> terms);
    bool contains(const Term& t) const { return contains_sorted(terms, t); }
    std::size_t size() const { return terms.size(); }
};

struct MonomialIdeal {
    std::size_t n = 0;
    std::vector<Term> generators;  // minimal, Lex-ascending

    // Keeps only the minimal elements of gens.
    static MonomialIdeal make(std::size_t n, std::vector<Term> gens);
    bool contains(const Term& t) const;
    bool operator==(const MonomialIdeal&) const = default;
};

bool is_order_ideal(const std::vector<Term>& m);
MonomialIdeal minimal_generators(const OrderIdeal& N);
std::vector<Term> border_set(const OrderIdeal& N);

// Complement of the ideal; throws std::invalid_argument if it is infinite.
OrderIdeal escalier(const MonomialIdeal& I);

bool is_stable(const MonomialIdeal& I);
bool is_strongly_stable(const MonomialIdeal& I);

std::string to_string(const Term& t);
std::string to_string(const std::vector<Term>& ts);
Term parse_term(std::string_view s, std::size_t n);
std::vector<Term> parse_terms(std::string_view s, std::size_t n);

}  // namespace esc
