#pragma once

#include "escalier/partitions.hpp"
#include "escalier/qpolys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esc {

enum class IdealClass { stable, strongly_stable };
std::string to_string(IdealClass c);
IdealClass parse_class(const std::string& s);

// Parallel kernels use OpenMP; the serial path is the reference they are tested against.
enum class Exec { serial, parallel };

struct ShapeCount {
    std::vector<int> shape;
    BigInt count;
};

struct BarListRow {
    std::vector<int> bar_list;
    std::vector<ShapeCount> shapes;
    BigInt subtotal;
};

struct BarListCensus {
    int p = 0;
    int n = 0;
    IdealClass cls = IdealClass::stable;
    std::vector<BarListRow> rows;
    BigInt total;
};

int max_h_2vars(int p);
BigInt count_2vars(int p);
BarListCensus census_2vars(int p, IdealClass cls);

// Largest k with C(k+2, 3) <= p.
int max_k_3vars(int p);
// Some strict partition of r into k parts has minimal sum at most p.
bool shape_feasible(int r, int k, int p);
std::vector<std::vector<int>> bar_lists_3vars(int p);

std::optional<std::vector<long>> a_vector_stable(const IntPartition& beta, int p);
BarListRow count_stable_barlist(int p, int h, int k, Exec exec = Exec::parallel);
BarListCensus count_stable_3vars(int p, Exec exec = Exec::parallel);

std::vector<int> shifted_shape(const IntPartition& alpha);
std::vector<std::vector<long>> a_vectors_strongly(const std::vector<int>& lambda, int p);
BarListRow count_sstable_barlist(int p, int h, int k, Exec exec = Exec::parallel);
BarListCensus count_sstable_3vars(int p, Exec exec = Exec::parallel);

BarListCensus census(int n, int p, IdealClass cls, Exec exec = Exec::parallel);

long closed_form_shape22(int p);

}  // namespace esc
