#include "qlsa/grid_io.hpp"

#include <fmt/format.h>
#include <fstream>
#include "json.hpp"
#include <ostream>

#include "qlsa/errors.hpp"

namespace qlsa {
namespace {

using nlohmann::json;

template <class T>
std::string cell(const std::optional<T>& v)
{
    return v ? fmt::format("{}", *v) : std::string();
}

template <class T>
json to_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_field(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

}  // namespace

const std::vector<std::string>& grid_columns()
{
    static const std::vector<std::string> cols{
        "n",          "N",           "kappa",     "s",          "epsilon",     "q_tcount",      "q_logical_qubits",
        "q_physical_qubits", "q_runtime_s", "q_energy_j", "c_flops", "c_runtime_s", "c_energy_j", "runtime_ratio",
        "energy_ratio", "scheme",   "feasible",
    };
    return cols;
}

GridRow to_row(const ComparisonPoint& p)
{
    GridRow r;
    r.n = p.problem.n;
    r.N = p.problem.matrix_size();
    r.kappa = p.problem.kappa;
    r.s = p.problem.s;
    r.epsilon = p.problem.epsilon;
    r.c_flops = p.classical.flops;
    r.c_runtime_s = p.classical.runtime_s;
    r.c_energy_j = p.classical.joules;
    r.feasible = p.feasible();
    if (p.quantum) {
        r.q_tcount = p.quantum->logical.t_count;
        r.q_logical_qubits = p.quantum->logical.n_logical;
        r.q_physical_qubits = p.quantum->physical.n_physical_qubits;
        r.q_runtime_s = p.quantum->physical.runtime_s;
        r.q_energy_j = p.quantum->energy.joules;
        r.scheme = p.quantum->scheme_summary();
    }
    r.runtime_ratio = p.runtime_ratio;
    r.energy_ratio = p.energy_ratio;
    return r;
}

std::vector<GridRow> to_rows(const std::vector<ComparisonPoint>& points)
{
    std::vector<GridRow> rows;
    rows.reserve(points.size());
    for (const auto& p : points) rows.push_back(to_row(p));
    return rows;
}

void write_grid(std::ostream& os, const std::vector<GridRow>& rows, GridFormat format)
{
    if (rows.empty()) throw PreconditionError("no grid points to write");
    if (format == GridFormat::Csv) {
        const auto& cols = grid_columns();
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << '\n';
        for (const auto& r : rows) {
            os << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.N, r.kappa, r.s, r.epsilon,
                              cell(r.q_tcount), cell(r.q_logical_qubits), cell(r.q_physical_qubits), cell(r.q_runtime_s),
                              cell(r.q_energy_j), r.c_flops, r.c_runtime_s, cell(r.c_energy_j), cell(r.runtime_ratio),
                              cell(r.energy_ratio), r.scheme, r.feasible ? "true" : "false");
        }
        return;
    }
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["n"] = r.n;
        j["N"] = r.N;
        j["kappa"] = r.kappa;
        j["s"] = r.s;
        j["epsilon"] = r.epsilon;
        j["q_tcount"] = to_json(r.q_tcount);
        j["q_logical_qubits"] = to_json(r.q_logical_qubits);
        j["q_physical_qubits"] = to_json(r.q_physical_qubits);
        j["q_runtime_s"] = to_json(r.q_runtime_s);
        j["q_energy_j"] = to_json(r.q_energy_j);
        j["c_flops"] = r.c_flops;
        j["c_runtime_s"] = r.c_runtime_s;
        j["c_energy_j"] = to_json(r.c_energy_j);
        j["runtime_ratio"] = to_json(r.runtime_ratio);
        j["energy_ratio"] = to_json(r.energy_ratio);
        j["scheme"] = r.scheme;
        j["feasible"] = r.feasible;
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

void write_grid(const std::filesystem::path& path, const std::vector<GridRow>& rows, GridFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_grid(out, rows, format);
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<GridRow> parse_grid_json(const std::string& text)
{
    std::vector<GridRow> rows;
    try {
        const json arr = json::parse(text);
        for (const json& j : arr) {
            GridRow r;
            r.n = j.at("n").get<std::uint32_t>();
            r.N = j.at("N").get<double>();
            r.kappa = j.at("kappa").get<double>();
            r.s = j.at("s").get<std::uint64_t>();
            r.epsilon = j.at("epsilon").get<double>();
            r.q_tcount = opt_field<double>(j, "q_tcount");
            r.q_logical_qubits = opt_field<std::uint64_t>(j, "q_logical_qubits");
            r.q_physical_qubits = opt_field<std::uint64_t>(j, "q_physical_qubits");
            r.q_runtime_s = opt_field<double>(j, "q_runtime_s");
            r.q_energy_j = opt_field<double>(j, "q_energy_j");
            r.c_flops = j.at("c_flops").get<double>();
            r.c_runtime_s = j.at("c_runtime_s").get<double>();
            r.c_energy_j = opt_field<double>(j, "c_energy_j");
            r.runtime_ratio = opt_field<double>(j, "runtime_ratio");
            r.energy_ratio = opt_field<double>(j, "energy_ratio");
            r.scheme = j.at("scheme").get<std::string>();
            r.feasible = j.at("feasible").get<bool>();
            rows.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ValidationError("grid", std::string("malformed grid JSON: ") + e.what());
    }
    return rows;
}

}  // namespace qlsa
