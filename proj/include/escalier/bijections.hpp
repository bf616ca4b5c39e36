#pragma once

#include "escalier/barcode.hpp"
#include "escalier/counting.hpp"
#include "escalier/monomials.hpp"
#include "escalier/partitions.hpp"

#include <vector>

namespace esc {

// Row- and column-strict (1,1)-plane partition with positive parts and strictly decreasing shape.
bool is_stable_partition(const PlanePartition& rho);
// Shifted (1,0)-plane partition with positive parts whose row lengths strictly decrease.
bool is_strongly_stable_partition(const PlanePartition& pi);

PlanePartition make_strict_pp(const std::vector<std::vector<long>>& rows);
PlanePartition make_shifted_pp(const std::vector<std::vector<long>>& rows);

BarCode barcode_from_strict_pp(const PlanePartition& rho);
PlanePartition strict_pp_from_barcode(const BarCode& b);
MonomialIdeal ideal_from_strict_pp(const PlanePartition& rho);

BarCode barcode_from_shifted_pp(const PlanePartition& pi);
PlanePartition shifted_pp_from_barcode(const BarCode& b);
MonomialIdeal ideal_from_shifted_pp(const PlanePartition& pi);

IntPartition partition_2vars(const BarCode& b);
BarCode barcode_from_partition_2vars(const IntPartition& alpha);
MonomialIdeal ideal_from_partition_2vars(const IntPartition& alpha);

struct ListedIdeal {
    std::vector<int> bar_list;
    PlanePartition partition;  // a single strict row for two variables
    BarCode barcode;
    MonomialIdeal ideal;
};

struct IdealListing {
    int p = 0;
    int n = 0;
    IdealClass cls = IdealClass::stable;
    std::vector<ListedIdeal> items;
};

IdealListing list_ideals(int p, int n, IdealClass cls, Exec exec = Exec::parallel);

}  // namespace esc
