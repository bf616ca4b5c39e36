#pragma once

#include "escalier/barcode.hpp"
#include "escalier/bijections.hpp"
#include "escalier/counting.hpp"
#include "escalier/oracle.hpp"
#include "escalier/partitions.hpp"
#include "escalier/qpolys.hpp"

#include <json.hpp>

namespace esc::io {

using json = nlohmann::ordered_json;

json to_json(const Term& t);
json to_json(const std::vector<Term>& ts);
json to_json(const BarCode& b);
json to_json(const IntPoly& p);
json to_json(const PlanePartition& pp);
json to_json(const BarListCensus& c);
json to_json(const IdealListing& l);
json to_json(const ProbeReport& r);

Term term_from_json(const json& j, std::size_t n);
std::vector<Term> terms_from_json(const json& j, std::size_t n);
BarCode barcode_from_json(const json& j);
PlanePartition plane_partition_from_json(const json& j);
IntPoly poly_from_json(const json& j);

}  // namespace esc::io
