#pragma once

#include "escalier/counting.hpp"
#include "escalier/monomials.hpp"
#include "escalier/qpolys.hpp"

#include <map>
#include <vector>

namespace esc {

// Largest p the brute force accepts for n variables. Defaults: 12 for n = 3,
// 8 for n = 4; overridden by the environment variable ESCALIER_CAP_N<n>.
int oracle_cap(int n);

struct EscalierEnumeration {
    int n = 0;
    int p = 0;
    std::vector<OrderIdeal> items;
};

// Throws std::out_of_range when p exceeds the cap.
EscalierEnumeration enumerate_order_ideals(int n, int p, Exec exec = Exec::parallel);

bool in_class(const OrderIdeal& N, IdealClass cls);
BigInt count_by_definition(int n, int p, IdealClass cls, Exec exec = Exec::parallel);
// Counts of class members keyed by bar list.
std::map<std::vector<int>, BigInt> count_by_definition_per_barlist(int n, int p, IdealClass cls,
                                                                   Exec exec = Exec::parallel);

struct ProbeRow {
    std::vector<int> bar_list;
    BigInt ideals;
    BigInt partitions;
    bool agree() const { return ideals == partitions; }
};

struct ProbeReport {
    int n = 4;
    int p = 0;
    IdealClass cls = IdealClass::stable;
    std::vector<ProbeRow> rows;
    bool all_agree() const;
};

// Compares four-variable ideals against three-dimensional partitions bar list by bar list.
ProbeReport conjecture_probe(int n, int p, IdealClass cls);

}  // namespace esc
