#pragma once

#include <json.hpp>

#include "hqcf/hyperq.hpp"

namespace hqcf {

// Stable key order everywhere: reports are byte-identical across runs.
using ojson = nlohmann::ordered_json;

ojson expansion_to_json(const Expansion& e);
ojson quad_expansion_to_json(const FieldSpec* spec, const QuadExpansion& q);
ojson scan_report_to_json(const ScanReport& r);
ojson pattern_report_to_json(const PatternReport& r, const GrowthCheck* growth = nullptr);
ojson growth_to_json(const GrowthCheck& g);

}  // namespace hqcf
