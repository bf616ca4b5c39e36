#pragma once

#include "escalier/monomials.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace esc {

// rows[i-1] lists the lengths of the i-bars from left to right, measured in
// 1-bars; every row sums to width and every row refines the one below it.
struct BarCode {
    std::size_t n = 0;
    std::size_t width = 0;
    std::vector<std::vector<std::size_t>> rows;

    bool operator==(const BarCode&) const = default;
};

// Throws std::invalid_argument describing the first violated condition.
void check_structure(const BarCode& b);
bool is_structurally_valid(const BarCode& b);

BarCode encode(const std::vector<Term>& terms);
std::vector<Term> decode(const BarCode& b);
std::vector<std::size_t> bar_list(const BarCode& b);

// Number of l-bars lying over the j-th i-bar (all indices 1-based).
std::size_t length(const BarCode& b, std::size_t i, std::size_t j, std::size_t l);

// Index (1-based) of the i-bar lying under 1-bar col (1-based).
std::size_t bar_under(const BarCode& b, std::size_t i, std::size_t col);

std::vector<Exp> e_list(const BarCode& b, std::size_t j);
bool is_admissible(const BarCode& b);

enum class RenderFormat { ascii, svg };
std::string render(const BarCode& b, RenderFormat fmt, bool labels = true);

}  // namespace esc
