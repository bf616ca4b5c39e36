#include "json_io.hpp"

#include <limits>
#include <stdexcept>

namespace esc::io {

json to_json(const Term& t) { return json(t.e); }

json to_json(const std::vector<Term>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    return arr;
}

json to_json(const BarCode& b) { return {{"n", b.n}, {"width", b.width}, {"rows", b.rows}}; }

json to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    if (arr.empty()) arr.push_back("0");
    return {{"coeffs", arr}};
}

json to_json(const PlanePartition& pp) {
    json j = {{"shape", pp.lambda}, {"shifted", pp.shifted}, {"c", pp.c}, {"d", pp.d}, {"rows", pp.rows}};
    if (!pp.shifted && !pp.mu.empty()) j["inner"] = pp.mu;
    return j;
}

json to_json(const BarListCensus& c) {
    json rows = json::array();
    for (const auto& r : c.rows) {
        json shapes = json::array();
        for (const auto& s : r.shapes) shapes.push_back({{"shape", s.shape}, {"count", s.count.str()}});
        rows.push_back({{"bar_list", r.bar_list}, {"subtotal", r.subtotal.str()}, {"shapes", shapes}});
    }
    return {{"vars", c.n}, {"hilbert", c.p}, {"class", to_string(c.cls)}, {"total", c.total.str()}, {"bar_lists", rows}};
}

json to_json(const IdealListing& l) {
    json arr = json::array();
    for (const auto& item : l.items) {
        json part;
        if (l.n == 2) part = item.partition.rows.front();
        else part = to_json(item.partition);
        arr.push_back({{"partition", part},
                       {"barcode", to_json(item.barcode)},
                       {"generators", to_json(item.ideal.generators)}});
    }
    return arr;
}

json to_json(const ProbeReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"bar_list", row.bar_list},
                        {"ideals", row.ideals.str()},
                        {"partitions", row.partitions.str()},
                        {"agree", row.agree()}});
    return {{"vars", r.n}, {"hilbert", r.p}, {"class", to_string(r.cls)}, {"all_agree", r.all_agree()}, {"bar_lists", rows}};
}

Term term_from_json(const json& j, std::size_t n) {
    if (j.is_string()) return parse_term(j.get<std::string>(), n);
    if (!j.is_array()) throw std::invalid_argument("term must be an exponent array or a term string");
    if (j.size() != n) throw std::invalid_argument("term has " + std::to_string(j.size()) + " exponents, expected " + std::to_string(n));
    Term t(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_number_integer() || j[i].get<long>() < 0 || j[i].get<long>() > std::numeric_limits<Exp>::max())
            throw std::invalid_argument("exponents must be non-negative integers in range");
        t.e[i] = static_cast<Exp>(j[i].get<long>());
    }
    return t;
}

std::vector<Term> terms_from_json(const json& j, std::size_t n) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
    std::vector<Term> out;
    for (const auto& x : j) out.push_back(term_from_json(x, n));
    return out;
}

BarCode barcode_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("bar code JSON needs a rows field");
    BarCode b;
    b.rows = j.at("rows").get<std::vector<std::vector<std::size_t>>>();
    b.n = j.contains("n") ? j.at("n").get<std::size_t>() : b.rows.size();
    b.width = j.contains("width") ? j.at("width").get<std::size_t>() : (b.rows.empty() ? 0 : b.rows.front().size());
    check_structure(b);
    return b;
}

PlanePartition plane_partition_from_json(const json& j) {
    PlanePartition pp;
    pp.rows = j.at("rows").get<std::vector<std::vector<long>>>();
    pp.shifted = j.value("shifted", false);
    pp.c = j.value("c", 1);
    pp.d = j.value("d", pp.shifted ? 0 : 1);
    if (j.contains("shape")) pp.lambda = j.at("shape").get<std::vector<int>>();
    else
        for (std::size_t i = 0; i < pp.rows.size(); ++i)
            pp.lambda.push_back(static_cast<int>(pp.rows[i].size() + (pp.shifted ? i : 0)));
    if (j.contains("inner")) pp.mu = j.at("inner").get<std::vector<int>>();
    return pp;
}

IntPoly poly_from_json(const json& j) {
    std::vector<BigInt> c;
    for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>());
    return IntPoly(std::move(c));
}

}  // namespace esc::io
