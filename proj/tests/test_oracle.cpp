#include "escalier/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>

using namespace esc;

namespace {

// Unrestricted order ideals of size p in two variables are partitions of p.
BigInt partitions_of(int p) {
    std::vector<BigInt> ways(static_cast<std::size_t>(p) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= p; ++part)
        for (int s = part; s <= p; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(p)];
}

struct EnvGuard {
    const char* name;
    explicit EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
    ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_CASE("enumeration produces distinct order ideals of the right size") {
    for (int n : {1, 2, 3})
        for (int p = 1; p <= (n == 3 ? 9 : 12); ++p) {
            auto E = enumerate_order_ideals(n, p);
            std::set<std::string> seen;
            for (const auto& N : E.items) {
                CHECK(N.size() == static_cast<std::size_t>(p));
                CHECK(esc::testing::divisor_closed(N.terms));
                std::string k;
                for (const auto& t : N.terms) k += to_string(t) + ",";
                CHECK(seen.insert(k).second);
            }
            if (n == 1) CHECK(E.items.size() == 1);
            if (n == 2) CHECK(BigInt(E.items.size()) == partitions_of(p));
        }
    // plane partitions of 1..6
    const std::size_t plane[] = {1, 3, 6, 13, 24, 48};
    for (int p = 1; p <= 6; ++p) CHECK(enumerate_order_ideals(3, p).items.size() == plane[p - 1]);
}

TEST_CASE("parallel enumeration matches the serial reference") {
    for (int n : {2, 3, 4})
        for (int p : {3, 6, 8}) {
            auto a = enumerate_order_ideals(n, p, Exec::serial), b = enumerate_order_ideals(n, p, Exec::parallel);
            REQUIRE(a.items.size() == b.items.size());
            for (std::size_t i = 0; i < a.items.size(); ++i) CHECK(a.items[i].terms == b.items[i].terms);
        }
}

TEST_CASE("counting by definition agrees with the closed counts") {
    for (int p = 1; p <= 20; ++p)
        for (auto cls : {IdealClass::stable, IdealClass::strongly_stable}) CHECK(count_by_definition(2, p, cls) == census(2, p, cls).total);
    for (int p = 1; p <= 12; ++p)
        for (auto cls : {IdealClass::stable, IdealClass::strongly_stable}) {
            auto C = census(3, p, cls);
            auto per = count_by_definition_per_barlist(3, p, cls);
            BigInt sum = 0;
            for (const auto& [bl, k] : per) sum += k;
            CHECK(sum == C.total);
            CHECK(per.size() <= C.rows.size());
            for (const auto& row : C.rows) {
                auto it = per.find(row.bar_list);
                CHECK((it == per.end() ? BigInt(0) : it->second) == row.subtotal);
            }
        }
    CHECK(count_by_definition(3, 12, IdealClass::stable) == 55);
    CHECK(count_by_definition(3, 12, IdealClass::strongly_stable) == 44);
    CHECK(count_by_definition(1, 50, IdealClass::stable) == 1);
}

TEST_CASE("class membership") {
    CHECK(in_class(OrderIdeal::make(3, parse_terms("1,x1,x1^2,x2,x3,x1*x3", 3)), IdealClass::stable));
    CHECK_FALSE(in_class(OrderIdeal::make(3, parse_terms("1,x1,x1^2,x2,x3,x1*x3", 3)), IdealClass::strongly_stable));
    CHECK(in_class(OrderIdeal::make(3, parse_terms("1,x1,x2", 3)), IdealClass::strongly_stable));
    CHECK_FALSE(in_class(OrderIdeal::make(2, parse_terms("1,x2", 2)), IdealClass::stable));
}

TEST_CASE("caps and their override") {
    CHECK(oracle_cap(3) == 12);
    CHECK(oracle_cap(4) == 8);
    CHECK_THROWS_AS(enumerate_order_ideals(3, 13), std::out_of_range);
    CHECK_THROWS_AS(count_by_definition(4, 9, IdealClass::stable), std::out_of_range);
    {
        EnvGuard g("ESCALIER_CAP_N3", "5");
        CHECK(oracle_cap(3) == 5);
        CHECK_THROWS_AS(enumerate_order_ideals(3, 6), std::out_of_range);
        CHECK(enumerate_order_ideals(3, 5).items.size() == 24);
    }
    {
        EnvGuard g("ESCALIER_CAP_N3", "many");
        CHECK_THROWS_AS(oracle_cap(3), std::invalid_argument);
    }
    CHECK(oracle_cap(3) == 12);
    CHECK_THROWS_AS(enumerate_order_ideals(0, 3), std::invalid_argument);
    CHECK_THROWS(enumerate_order_ideals(3, 0));
}

TEST_CASE("four-variable probe runs on small cases") {
    for (int p = 1; p <= 6; ++p)
        for (auto cls : {IdealClass::stable, IdealClass::strongly_stable}) {
            auto r = conjecture_probe(4, p, cls);
            CHECK(r.p == p);
            CHECK_FALSE(r.rows.empty());
            BigInt ideals = 0;
            for (const auto& row : r.rows) {
                ideals += row.ideals;
                CHECK(row.bar_list.size() == 4);
                CHECK(row.bar_list[0] == p);
            }
            CHECK(ideals == count_by_definition(4, p, cls));
        }
    CHECK_THROWS_AS(conjecture_probe(3, 5, IdealClass::stable), std::invalid_argument);
}
