#pragma once

#include "escalier/qpolys.hpp"

#include <map>
#include <vector>

namespace esc {

using IntPartition = std::vector<int>;

BigInt count_P(int n, int k);
BigInt count_Q(int p, int i);

// Partitions of p into exactly k distinct parts, lexicographically descending.
std::vector<IntPartition> enumerate_distinct(int p, int k);
long minimal_sum(const std::vector<int>& parts);

// Entries of row i sit in columns mu_i+1..lambda_i (straight or skew) or in
// columns i..lambda_i (shifted). Cells outside the shape are simply absent.
struct PlanePartition {
    std::vector<int> lambda;
    std::vector<int> mu;  // empty or all zero unless skew; ignored when shifted
    bool shifted = false;
    int c = 1;
    int d = 1;
    std::vector<std::vector<long>> rows;

    long norm() const;
    int first_column(std::size_t row) const;  // 0-based row, 1-based column
    long at(std::size_t row, int col) const;  // 1-based column; throws when absent
    bool has(std::size_t row, int col) const;
    bool operator==(const PlanePartition&) const = default;
};

// Throws std::invalid_argument on ragged rows (lengths not matching the shape).
bool validate(const PlanePartition& pp);

struct EnumerationRequest {
    std::vector<int> lambda;
    std::vector<int> mu;
    bool shifted = false;
    int c = 1;
    int d = 1;
    std::vector<long> a;  // strict: first part of row i at most a_i; shifted: equal to a_i
    std::vector<long> b;  // last part of row i at least b_i
    long norm = 0;
};

// Depth-first over cells, row by row; output is descending in the flattened entries.
std::vector<PlanePartition> enumerate_plane_partitions(const EnumerationRequest& req);

// Partitions of higher dimension. Cells are keyed by their 1-based index tuples
// (i_1, ..., i_d) following the layer conventions: for strict arrays the layer
// l = i_3 holds rows i_1 = 1.. and columns i_2 = 1..; for shifted arrays layer
// l holds rows i_1 = l.. and row i_1 starts at column i_2 = i_1.
enum class SolidKind { strict, shifted };

struct SolidPartition {
    SolidKind kind = SolidKind::strict;
    int dimension = 3;
    std::map<std::vector<int>, long> cells;

    // layers[l][r] lists the entries of row r of layer l, in column order.
    static SolidPartition from_layers(SolidKind kind, const std::vector<std::vector<std::vector<long>>>& layers);
    long norm() const;
};

bool validate_solid(const SolidPartition& sp);

// The same objects in exponent coordinates: a cell (e_2, ..., e_{d+1}) with
// value v stands for the terms x_1^0..x_1^{v-1} times x_2^{e_2}...x_{d+1}^{e_{d+1}}.
using ExpArray = std::map<std::vector<int>, long>;

ExpArray to_exponent_coords(const SolidPartition& sp);  // throws for cells outside the index region
SolidPartition from_exponent_coords(SolidKind kind, int dim, const ExpArray& f);
bool validate_exp_array(SolidKind kind, int dim, const ExpArray& f);
// Counts along the first axis, giving the (dim-1)-dimensional shape.
ExpArray shape_of(const ExpArray& f);

// All arrays of the given kind with norm chain (norms[0] = sum of values,
// norms[1] = number of cells, norms[2] = cells of the shape, ...). A chain of
// length dim+1 determines a dim-dimensional array.
std::vector<ExpArray> enumerate_exp_arrays(SolidKind kind, const std::vector<int>& norms);

}  // namespace esc
