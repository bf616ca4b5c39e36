#include "escalier/barcode.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace esc;
using esc::testing::Rng;
using esc::testing::uniform;

namespace {

std::vector<Term> T(const char* s, std::size_t n) { return parse_terms(s, n); }

BarCode code(std::vector<std::vector<std::size_t>> rows) {
    BarCode b;
    b.n = rows.size();
    b.width = rows.front().size();
    b.rows = std::move(rows);
    return b;
}

const BarCode kFiveFourTwo = code({{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 3}});

// Tags open and close in a properly nested way; enough to catch broken output.
bool balanced_xml(const std::string& s) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = s.find('<', pos)) != std::string::npos) {
        std::size_t end = s.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = s.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag.back() == '/') continue;
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else {
            stack.push_back(tag.substr(0, tag.find(' ')));
        }
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("encoding a set that is not an order ideal") {
    auto b = encode(T("x1,x1^2,x2*x3,x1*x2^2*x3,x2^3*x3", 3));
    CHECK(b == kFiveFourTwo);
    CHECK(bar_list(b) == std::vector<std::size_t>{5, 4, 2});
    CHECK(length(b, 2, 1, 1) == 2);
    CHECK(length(b, 3, 2, 2) == 3);
    CHECK(length(b, 3, 2, 1) == 3);
    CHECK(bar_under(b, 3, 4) == 2);
    CHECK(bar_under(b, 2, 2) == 1);
    CHECK_THROWS(length(b, 4, 1, 1));
    CHECK_THROWS(bar_under(b, 2, 6));
}

TEST_CASE("different sets may share a Bar Code") {
    CHECK(encode(T("1,x1", 2)) == encode(T("x1,x1^2", 2)));
}

TEST_CASE("decoding assigns the smallest exponents") {
    CHECK(decode(kFiveFourTwo) == T("1,x1,x3,x2*x3,x2^2*x3", 3));
    CHECK_FALSE(is_admissible(kFiveFourTwo));
    CHECK_FALSE(esc::testing::divisor_closed(decode(kFiveFourTwo)));
}

TEST_CASE("e-lists") {
    auto b = encode(T("1,x1,x2,x3", 3));
    CHECK(e_list(b, 1) == std::vector<Exp>{0, 0, 0});
    CHECK(e_list(b, 2) == std::vector<Exp>{1, 0, 0});
    CHECK(e_list(b, 3) == std::vector<Exp>{0, 1, 0});
    CHECK(e_list(b, 4) == std::vector<Exp>{0, 0, 1});
    CHECK_THROWS(e_list(b, 5));
    CHECK_THROWS(e_list(b, 0));
}

TEST_CASE("structure checks") {
    CHECK(is_structurally_valid(kFiveFourTwo));
    CHECK_FALSE(is_structurally_valid(code({{1, 2}, {3}})));          // row 1 not unit bars
    CHECK_FALSE(is_structurally_valid(code({{1, 1, 1}, {2}})));        // sums differ
    CHECK_FALSE(is_structurally_valid(code({{1, 1, 1}, {1, 2}, {2, 1}})));  // no refinement
    BarCode wrong_n = kFiveFourTwo;
    wrong_n.n = 2;
    CHECK_FALSE(is_structurally_valid(wrong_n));
    CHECK_THROWS_AS(check_structure(code({{1, 1}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(encode(T("1,1", 2)), std::invalid_argument);
    CHECK_THROWS_AS(encode({Term{0}, Term{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(encode({}), std::invalid_argument);
}

TEST_CASE("rendering") {
    auto unit = encode({Term{0, 0, 0}});
    CHECK(render(unit, RenderFormat::ascii, false) == "---\n---\n---\n");

    std::ifstream in(ESCALIER_FIXTURES "/intro_render.txt");
    REQUIRE(in);
    std::stringstream expected;
    expected << in.rdbuf();
    auto intro = encode(T("1,x1,x1^2,x2,x3,x1*x3", 3));
    CHECK(render(intro, RenderFormat::ascii) == expected.str());

    auto svg = render(intro, RenderFormat::svg);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(balanced_xml(svg));
    CHECK(balanced_xml(render(kFiveFourTwo, RenderFormat::svg, false)));
    CHECK(render(intro, RenderFormat::svg) == svg);
}

TEST_CASE("decode inverts encode on order ideals") {
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        auto N = esc::testing::random_order_ideal(n, static_cast<std::size_t>(uniform(rng, 1, 30)), rng);
        auto b = encode(N);
        CHECK(is_structurally_valid(b));
        CHECK(is_admissible(b));
        CHECK(decode(b) == N);
        CHECK(bar_list(b).front() == N.size());
        for (std::size_t j = 1; j <= N.size(); ++j) CHECK(e_list(b, j) == N[j - 1].e);
    }
}

TEST_CASE("random Bar Codes: criterion, roundtrip and monotone lengths") {
    Rng rng(32);
    int admissible = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        auto b = esc::testing::random_barcode(n, static_cast<std::size_t>(uniform(rng, 1, 9)), rng);
        REQUIRE(is_structurally_valid(b));
        auto m = decode(b);
        bool adm = is_admissible(b);
        CHECK(adm == esc::testing::divisor_closed(m));
        if (!adm) continue;
        ++admissible;
        CHECK(encode(m) == b);
        // inside each (i+1)-bar the i-bars shrink from left to right
        for (std::size_t i = 2; i <= n; ++i) {
            for (std::size_t j = 1; j < b.rows[i - 1].size(); ++j) {
                std::size_t col_j = 1, col_next = 1;
                for (std::size_t q = 0; q + 1 < j; ++q) col_j += b.rows[i - 1][q];
                col_next = col_j + b.rows[i - 1][j - 1];
                bool same_parent = i == n || bar_under(b, i + 1, col_j) == bar_under(b, i + 1, col_next);
                if (same_parent) CHECK(length(b, i, j, i - 1) >= length(b, i, j + 1, i - 1));
            }
        }
    }
    CHECK(admissible > 100);
}
