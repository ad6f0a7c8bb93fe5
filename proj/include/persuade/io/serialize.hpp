#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "persuade/concav/solver.hpp"
#include "persuade/core/partition.hpp"
#include "persuade/core/simulate.hpp"
#include "persuade/core/value_table.hpp"
#include "persuade/densities/grid_density.hpp"
#include "persuade/statics/conditions.hpp"
#include "persuade/statics/sweeps.hpp"

namespace persuade::io {

/// All numeric output uses 12 significant digits.
std::string format_number(double x);

/// Rounds to 12 significant digits so JSON output is reproducible.
double round12(double x);

// CSV writers; every table starts with a header row.
std::string density_csv(const GridDensity1D& d);             // x,value
std::string value_table_csv(const ValueTable& vt);          // mu,v,h
std::string partition_csv(const ReceiverPartition& part);   // c,p_lo,p_hi
std::string sweep_csv(const SweepResult& sweep);            // param,mu_hat,sigma0,sigma1,value,shape

// CSV readers; throw ValidationError on a malformed table.
GridDensity1D parse_density_csv(std::string_view text);
ValueTable parse_value_table_csv(std::string_view text);
ReceiverPartition parse_partition_csv(std::string_view text, const Policy& policy);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

nlohmann::ordered_json solution_json(const PersuasionSolution& sol);
nlohmann::ordered_json payoff_json(const Policy& policy, double payoff, const PartitionMeasures& m);
nlohmann::ordered_json verdict_json(const SweepResult& sweep);
nlohmann::ordered_json condition_json(const ConditionReport& report);
nlohmann::ordered_json shape_json(const ShapeClass& shape);
nlohmann::ordered_json simulation_json(const SimulationResult& sim, std::uint64_t seed,
                                       double payoff);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace persuade::io
