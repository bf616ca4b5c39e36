#include "escalier/barcode.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace esc {

namespace {

std::vector<std::size_t> boundaries(const std::vector<std::size_t>& lengths) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    for (std::size_t len : lengths) out.push_back(pos += len);
    return out;
}

// owner[i][c] = 0-based index of the (i+1)-bar over 0-based column c
std::vector<std::vector<std::size_t>> owners(const BarCode& b) {
    std::vector<std::vector<std::size_t>> own(b.n, std::vector<std::size_t>(b.width));
    for (std::size_t i = 0; i < b.n; ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < b.rows[i].size(); ++j)
            for (std::size_t k = 0; k < b.rows[i][j]; ++k) own[i][col++] = j;
    }
    return own;
}

}  // namespace

void check_structure(const BarCode& b) {
    if (b.n == 0) throw std::invalid_argument("bar code needs at least one row");
    if (b.rows.size() != b.n) throw std::invalid_argument("bar code row count differs from n");
    if (b.width == 0) throw std::invalid_argument("bar code width must be positive");
    for (std::size_t i = 0; i < b.n; ++i) {
        const auto& row = b.rows[i];
        if (std::any_of(row.begin(), row.end(), [](std::size_t x) { return x == 0; }))
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has an empty bar");
        if (std::accumulate(row.begin(), row.end(), std::size_t{0}) != b.width)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " does not sum to the width");
    }
    if (std::any_of(b.rows[0].begin(), b.rows[0].end(), [](std::size_t x) { return x != 1; }))
        throw std::invalid_argument("row 1 must consist of unit bars");
    for (std::size_t i = 0; i + 1 < b.n; ++i) {
        auto lower = boundaries(b.rows[i]);
        auto upper = boundaries(b.rows[i + 1]);
        std::set<std::size_t> mine(lower.begin(), lower.end());
        for (std::size_t x : upper)
            if (!mine.count(x))
                throw std::invalid_argument("row " + std::to_string(i + 1) + " does not refine row " +
                                            std::to_string(i + 2));
    }
}

bool is_structurally_valid(const BarCode& b) {
    try {
        check_structure(b);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

BarCode encode(const std::vector<Term>& terms) {
    if (terms.empty()) throw std::invalid_argument("cannot encode an empty term set");
    auto sorted = normalize(terms);
    if (sorted.size() != terms.size()) throw std::invalid_argument("duplicate terms in encode input");
    BarCode b;
    b.n = sorted.front().arity();
    b.width = sorted.size();
    if (b.n == 0) throw std::invalid_argument("terms need at least one variable");
    for (std::size_t i = 1; i <= b.n; ++i) {
        std::vector<std::size_t> row;
        Term last;
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            Term p = p_operator(sorted[k], i);
            if (k > 0 && p == last) ++row.back();
            else row.push_back(1);
            last = std::move(p);
        }
        b.rows.push_back(std::move(row));
    }
    return b;
}

std::vector<std::size_t> bar_list(const BarCode& b) {
    check_structure(b);
    std::vector<std::size_t> out;
    for (const auto& row : b.rows) out.push_back(row.size());
    return out;
}

std::size_t bar_under(const BarCode& b, std::size_t i, std::size_t col) {
    check_structure(b);
    if (i < 1 || i > b.n || col < 1 || col > b.width) throw std::out_of_range("bar index out of range");
    std::size_t pos = 0;
    for (std::size_t j = 0; j < b.rows[i - 1].size(); ++j) {
        pos += b.rows[i - 1][j];
        if (col <= pos) return j + 1;
    }
    throw std::logic_error("unreachable");
}

std::size_t length(const BarCode& b, std::size_t i, std::size_t j, std::size_t l) {
    check_structure(b);
    if (i < 1 || i > b.n || l < 1 || l > i || j < 1 || j > b.rows[i - 1].size())
        throw std::out_of_range("length index out of range");
    std::size_t start = std::accumulate(b.rows[i - 1].begin(), b.rows[i - 1].begin() + static_cast<long>(j - 1),
                                        std::size_t{0});
    std::size_t end = start + b.rows[i - 1][j - 1];
    std::size_t count = 0, pos = 0;
    for (std::size_t len : b.rows[l - 1]) {
        if (pos >= start && pos + len <= end) ++count;
        pos += len;
    }
    return count;
}

namespace {

std::vector<std::vector<Exp>> all_e_lists(const BarCode& b) {
    check_structure(b);
    auto own = owners(b);
    // first_child[i][j] = 0-based index of the first i-bar over the j-th (i+1)-bar
    std::vector<std::vector<std::size_t>> first_child(b.n);
    for (std::size_t i = 0; i + 1 < b.n; ++i) {
        first_child[i].assign(b.rows[i + 1].size(), 0);
        std::vector<bool> seen(b.rows[i + 1].size(), false);
        std::size_t col = 0;
        for (std::size_t j = 0; j < b.rows[i].size(); ++j) {
            std::size_t parent = own[i + 1][col];
            if (!seen[parent]) {
                seen[parent] = true;
                first_child[i][parent] = j;
            }
            col += b.rows[i][j];
        }
    }
    std::vector<std::vector<Exp>> out(b.width, std::vector<Exp>(b.n));
    for (std::size_t c = 0; c < b.width; ++c) {
        out[c][b.n - 1] = static_cast<Exp>(own[b.n - 1][c]);
        for (std::size_t i = 0; i + 1 < b.n; ++i)
            out[c][i] = static_cast<Exp>(own[i][c] - first_child[i][own[i + 1][c]]);
    }
    return out;
}

}  // namespace

std::vector<Exp> e_list(const BarCode& b, std::size_t j) {
    if (j < 1 || j > b.width) throw std::out_of_range("1-bar index out of range");
    return all_e_lists(b)[j - 1];
}

std::vector<Term> decode(const BarCode& b) {
    std::vector<Term> out;
    for (auto& e : all_e_lists(b)) out.emplace_back(std::move(e));
    return out;
}

bool is_admissible(const BarCode& b) {
    auto lists = all_e_lists(b);
    std::set<std::vector<Exp>> present(lists.begin(), lists.end());
    for (const auto& e : lists)
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            auto dec = e;
            --dec[k];
            if (!present.count(dec)) return false;
        }
    return true;
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '&') out += "&amp;";
        else if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else out += ch;
    }
    return out;
}

}  // namespace

std::string render(const BarCode& b, RenderFormat fmt, bool labels) {
    check_structure(b);
    std::vector<std::string> names;
    if (labels)
        for (const auto& t : decode(b)) names.push_back(to_string(t));
    if (fmt == RenderFormat::ascii) {
        std::size_t cell = 4;
        for (const auto& s : names) cell = std::max(cell, s.size() + 1);
        std::ostringstream os;
        auto rstrip = [](std::string s) {
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        if (labels) {
            std::string line;
            for (const auto& s : names) line += s + std::string(cell - s.size(), ' ');
            os << rstrip(line) << '\n';
        }
        for (const auto& row : b.rows) {
            std::string line;
            for (std::size_t len : row) line += std::string(cell * len - 1, '-') + ' ';
            os << rstrip(line) << '\n';
        }
        return os.str();
    }
    const int unit = 48, gap = 6, bar_h = 6, row_h = 24, top = labels ? 28 : 10;
    const int w = static_cast<int>(b.width) * unit + 20;
    const int h = top + static_cast<int>(b.n) * row_h + 10;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    if (labels)
        for (std::size_t c = 0; c < names.size(); ++c)
            os << "  <text x=\"" << 10 + static_cast<int>(c) * unit + (unit - gap) / 2 << "\" y=\"18\" font-size=\"11\" "
               << "font-family=\"monospace\" text-anchor=\"middle\">" << xml_escape(names[c]) << "</text>\n";
    for (std::size_t i = 0; i < b.n; ++i) {
        std::size_t pos = 0;
        for (std::size_t len : b.rows[i]) {
            os << "  <rect x=\"" << 10 + static_cast<int>(pos) * unit << "\" y=\"" << top + static_cast<int>(i) * row_h
               << "\" width=\"" << static_cast<int>(len) * unit - gap << "\" height=\"" << bar_h << "\" fill=\"black\"/>\n";
            pos += len;
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace esc
