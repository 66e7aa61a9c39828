#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <weilptb/distinction.hpp>
#include <weilptb/orbits.hpp>

namespace weilptb {

nlohmann::ordered_json to_json(const DistinctionReport &r);

nlohmann::ordered_json to_json(const ExactMatrix &m);

struct OrbitReportOptions {
    bool witness = false;
};

// Full description of every element of the orbit parameter set of spec.
nlohmann::ordered_json orbits_json(const PartitionSpec &spec, const OrbitReportOptions &opts = {});

std::string csv_header();
std::string csv_row(const DistinctionReport &r);
// Header followed by one row per report.
std::string to_csv(const std::vector<DistinctionReport> &reports);

} // namespace weilptb
