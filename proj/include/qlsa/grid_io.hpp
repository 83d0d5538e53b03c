#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlsa/advantage.hpp"

namespace qlsa {

/// One output row. Quantum-side and ratio fields are empty for infeasible cells.
struct GridRow {
    std::uint32_t n = 0;
    double N = 0;
    double kappa = 0;
    std::uint64_t s = 0;
    double epsilon = 0;
    std::optional<double> q_tcount;
    std::optional<std::uint64_t> q_logical_qubits;
    std::optional<std::uint64_t> q_physical_qubits;
    std::optional<double> q_runtime_s;
    std::optional<double> q_energy_j;
    double c_flops = 0;
    double c_runtime_s = 0;
    std::optional<double> c_energy_j;
    std::optional<double> runtime_ratio;
    std::optional<double> energy_ratio;
    std::string scheme;
    bool feasible = false;

    bool operator==(const GridRow&) const = default;
};

const std::vector<std::string>& grid_columns();

GridRow to_row(const ComparisonPoint& p);
std::vector<GridRow> to_rows(const std::vector<ComparisonPoint>& points);

enum class GridFormat { Csv, Json };

void write_grid(std::ostream& os, const std::vector<GridRow>& rows, GridFormat format);
/// Throws IoError when the destination cannot be written.
void write_grid(const std::filesystem::path& path, const std::vector<GridRow>& rows, GridFormat format);

std::vector<GridRow> parse_grid_json(const std::string& text);

}  // namespace qlsa
