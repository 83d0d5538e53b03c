#include "qlsa/config.hpp"

#include <array>
#include <cmath>
#include <map>
#include <fmt/format.h>
#include <fstream>
#include <set>
#include <sstream>

#include "qlsa/energy.hpp"
#include "qlsa/errors.hpp"
#include "qlsa/toml_lite.hpp"

namespace qlsa {
namespace {

using toml::Document;
using toml::Value;

const std::map<std::string, std::set<std::string>>& schema()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"problem",
         {"n", "kappa", "s", "epsilon", "r_bits", "oracle_model", "mode", "t_per_rotation", "extra_logical_qubits"}},
        {"quantum_hw", {"p_phys", "t_cycle_s", "watts_per_qubit", "qubit_budget", "error_budget", "distill_share"}},
        {"classical_hw",
         {"preset", "name", "freq_hz", "watts_per_ghz", "flops_per_cycle", "peak_flops", "method", "iteration_log"}},
        {"cryo", {"model", "q_comp", "phi", "beta", "n_p", "eta_c", "cop", "fom", "q_tilde"}},
        {"sweep", {"n", "kappa", "s", "epsilon"}},
    };
    return keys;
}

void check_schema(const Document& doc)
{
    for (const auto& [name, section] : doc.sections()) {
        auto it = schema().find(name);
        if (it == schema().end()) throw ValidationError(name, "unknown section [" + name + "]");
        for (const auto& [key, value] : section.entries) {
            if (!it->second.count(key)) {
                throw ValidationError(name + "." + key, fmt::format("unknown key (line {})", value.line));
            }
        }
    }
}

std::string field_name(const std::string& section, const std::string& key) { return section + "." + key; }

class Reader {
public:
    explicit Reader(const Document& doc) : doc_(doc) {}

    template <class T>
    void number(const std::string& section, const std::string& key, T& out) const
    {
        if (const Value* v = doc_.find(section, key)) out = static_cast<T>(as_number(*v, section, key));
    }

    template <class T>
    void integer(const std::string& section, const std::string& key, T& out) const
    {
        if (const Value* v = doc_.find(section, key)) out = as_integer<T>(*v, section, key);
    }

    template <class T>
    bool optional_integer(const std::string& section, const std::string& key, std::optional<T>& out) const
    {
        const Value* v = doc_.find(section, key);
        if (v) out = as_integer<T>(*v, section, key);
        return v != nullptr;
    }

    void text(const std::string& section, const std::string& key, std::string& out) const
    {
        if (const Value* v = doc_.find(section, key)) out = as_string(*v, section, key);
    }

    const Value* raw(const std::string& section, const std::string& key) const { return doc_.find(section, key); }

    static double as_number(const Value& v, const std::string& section, const std::string& key)
    {
        if (!v.is_number()) throw ValidationError(field_name(section, key), fmt::format("expected a number (line {})", v.line));
        return v.number();
    }

    template <class T>
    static T as_integer(const Value& v, const std::string& section, const std::string& key)
    {
        const double d = as_number(v, section, key);
        if (d != std::floor(d) || d < 0 || d > 9.007199254740992e15) {
            throw ValidationError(field_name(section, key), fmt::format("expected a non-negative integer (line {})", v.line));
        }
        return static_cast<T>(d);
    }

    static const std::string& as_string(const Value& v, const std::string& section, const std::string& key)
    {
        if (!v.is_string()) throw ValidationError(field_name(section, key), fmt::format("expected a string (line {})", v.line));
        return v.string();
    }

private:
    const Document& doc_;
};

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& text, const std::array<std::pair<const char*, Enum>, N>& table, const std::string& field)
{
    for (const auto& [name, value] : table) {
        if (text == name) return value;
    }
    std::string allowed;
    for (const auto& [name, value] : table) allowed += std::string(allowed.empty() ? "" : ", ") + name;
    throw ValidationError(field, "unknown value '" + text + "' (expected one of: " + allowed + ")");
}

constexpr std::array<std::pair<const char*, OracleModel>, 2> kOracleModels{{
    {"structured", OracleModel::Structured},
    {"graph_coloring", OracleModel::GraphColoring},
}};
constexpr std::array<std::pair<const char*, CountingMode>, 2> kModes{{
    {"analytic", CountingMode::Analytic},
    {"engineered", CountingMode::Engineered},
}};
constexpr std::array<std::pair<const char*, ClassicalMethod>, 2> kMethods{{
    {"cg", ClassicalMethod::CG},
    {"cholesky", ClassicalMethod::Cholesky},
}};
constexpr std::array<std::pair<const char*, LogBase>, 3> kLogBases{{
    {"e", LogBase::Natural},
    {"2", LogBase::Two},
    {"10", LogBase::Ten},
}};
constexpr std::array<std::pair<const char*, CryoModel>, 3> kCryoModels{{
    {"none", CryoModel::None},
    {"full", CryoModel::Full},
    {"simplified", CryoModel::Simplified},
}};

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(const std::string& text, const std::string& field)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(field, "invalid number '" + text + "'");
    }
}

// Axis strings: "n" | "<scale>*n" | "a:b:step" | "lin:a:b:count" | "log:a:b:count".
AxisSpec parse_axis_string(const std::string& text, const std::string& field)
{
    AxisSpec axis;
    if (text == "n") {
        axis.kind = AxisKind::Coupled;
        return axis;
    }
    if (text.size() > 2 && text.substr(text.size() - 2) == "*n") {
        axis.kind = AxisKind::Coupled;
        axis.scale = parse_double(text.substr(0, text.size() - 2), field);
        return axis;
    }
    const auto parts = split(text, ':');
    axis.kind = AxisKind::Values;
    if (parts.size() == 3) {
        const double a = parse_double(parts[0], field);
        const double b = parse_double(parts[1], field);
        const double step = parse_double(parts[2], field);
        if (!(step > 0) || b < a) throw ValidationError(field, "range needs start <= stop and step > 0");
        for (std::size_t i = 0;; ++i) {
            const double v = a + static_cast<double>(i) * step;
            if (v > b + 1e-9 * step) break;
            axis.values.push_back(v);
        }
        return axis;
    }
    if (parts.size() == 4 && (parts[0] == "lin" || parts[0] == "log")) {
        const double a = parse_double(parts[1], field);
        const double b = parse_double(parts[2], field);
        const double count_d = parse_double(parts[3], field);
        if (count_d < 1 || count_d != std::floor(count_d)) throw ValidationError(field, "point count must be a positive integer");
        const auto count = static_cast<std::size_t>(count_d);
        if (parts[0] == "log" && !(a > 0 && b > 0)) throw ValidationError(field, "log range needs positive endpoints");
        for (std::size_t i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
            axis.values.push_back(parts[0] == "lin" ? a + f * (b - a)
                                                    : std::exp(std::log(a) + f * (std::log(b) - std::log(a))));
        }
        return axis;
    }
    throw ValidationError(field, "cannot interpret axis '" + text + "'");
}

AxisSpec parse_axis(const Value& v, const std::string& key)
{
    const std::string field = "sweep." + key;
    if (v.is_number()) return AxisSpec{AxisKind::Values, {v.number()}, 1.0};
    if (v.is_string()) return parse_axis_string(v.string(), field);
    if (v.is_array()) {
        AxisSpec axis{AxisKind::Values, {}, 1.0};
        for (const Value& item : v.array()) axis.values.push_back(Reader::as_number(item, "sweep", key));
        return axis;
    }
    throw ValidationError(field, fmt::format("expected number, array or string (line {})", v.line));
}

void apply_override(Document& doc, const std::string& assignment)
{
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos) throw ValidationError(assignment, "override must look like section.key=value");
    const std::string path = assignment.substr(0, eq);
    const std::size_t dot = path.find('.');
    if (dot == std::string::npos) throw ValidationError(path, "override key must be section.key");
    const std::string section = path.substr(0, dot);
    const std::string key = path.substr(dot + 1);
    auto it = schema().find(section);
    if (it == schema().end() || !it->second.count(key)) throw ValidationError(path, "unknown configuration key");

    std::string rhs = assignment.substr(eq + 1);
    toml::Value value;
    try {
        value = toml::parse_value(rhs, 0);
    } catch (const ParseError&) {
        // Bare words such as `mode=engineered` are accepted as strings.
        value = toml::Value{rhs, false, 0};
    }
    doc.set(section, key, std::move(value));
}

Config build(const Document& doc)
{
    check_schema(doc);
    Reader rd(doc);
    Config cfg;

    // [problem]
    auto& p = cfg.problem;
    rd.integer("problem", "n", p.n);
    rd.number("problem", "kappa", p.kappa);
    rd.integer("problem", "s", p.s);
    rd.number("problem", "epsilon", p.epsilon);
    std::optional<std::uint32_t> r_bits;
    cfg.r_bits_explicit = rd.optional_integer("problem", "r_bits", r_bits);
    std::string text;
    if (rd.raw("problem", "oracle_model")) {
        rd.text("problem", "oracle_model", text);
        p.oracle_model = parse_enum(text, kOracleModels, "problem.oracle_model");
    }
    if (rd.raw("problem", "mode")) {
        rd.text("problem", "mode", text);
        cfg.options.mode = parse_enum(text, kModes, "problem.mode");
    }
    rd.integer("problem", "t_per_rotation", cfg.options.t_per_rotation);
    rd.integer("problem", "extra_logical_qubits", cfg.options.extra_logical_qubits);
    if (cfg.options.t_per_rotation < 1) throw ValidationError("problem.t_per_rotation", "must be >= 1");
    // Validate kappa/epsilon before deriving r_bits from them.
    p.r_bits = 1;
    validate(p);
    p.r_bits = r_bits ? *r_bits : default_r_bits(p.kappa, p.epsilon);
    validate(p);

    // [quantum_hw]
    auto& q = cfg.quantum_hw;
    rd.number("quantum_hw", "p_phys", q.p_phys);
    rd.number("quantum_hw", "t_cycle_s", q.t_cycle_s);
    rd.number("quantum_hw", "watts_per_qubit", q.watts_per_qubit);
    rd.optional_integer("quantum_hw", "qubit_budget", q.qubit_budget);
    rd.number("quantum_hw", "error_budget", q.error_budget);
    rd.number("quantum_hw", "distill_share", q.distill_share);
    validate(q);

    // [classical_hw]: a preset first, explicit keys on top of it.
    auto& c = cfg.classical_hw;
    if (rd.raw("classical_hw", "preset")) {
        rd.text("classical_hw", "preset", text);
        auto preset = classical_preset(text);
        if (!preset) throw ValidationError("classical_hw.preset", "unknown machine preset '" + text + "'");
        c = *preset;
    }
    rd.text("classical_hw", "name", c.name);
    rd.number("classical_hw", "freq_hz", c.freq_hz);
    rd.number("classical_hw", "watts_per_ghz", c.watts_per_ghz);
    rd.number("classical_hw", "flops_per_cycle", c.flops_per_cycle);
    if (const Value* v = rd.raw("classical_hw", "peak_flops")) {
        c.peak_flops = Reader::as_number(*v, "classical_hw", "peak_flops");
    }
    if (rd.raw("classical_hw", "method")) {
        rd.text("classical_hw", "method", text);
        cfg.options.method = parse_enum(text, kMethods, "classical_hw.method");
    }
    if (const Value* v = rd.raw("classical_hw", "iteration_log")) {
        // Accept both "e" and a bare number (2 or 10).
        text = v->is_number() ? fmt::format("{}", v->number()) : Reader::as_string(*v, "classical_hw", "iteration_log");
        cfg.options.iteration_log = parse_enum(text, kLogBases, "classical_hw.iteration_log");
    }
    validate(c);

    // [cryo]
    if (rd.raw("cryo", "model")) {
        rd.text("cryo", "model", text);
        cfg.cryo_model = parse_enum(text, kCryoModels, "cryo.model");
    }
    auto& cr = cfg.cryo;
    rd.number("cryo", "q_comp", cr.q_comp);
    rd.number("cryo", "phi", cr.phi);
    rd.number("cryo", "beta", cr.beta);
    rd.integer("cryo", "n_p", cr.n_p);
    rd.number("cryo", "eta_c", cr.eta_c);
    rd.number("cryo", "cop", cr.cop);
    rd.number("cryo", "fom", cr.fom);
    rd.number("cryo", "q_tilde", cr.q_tilde);
    validate(cr);

    // [sweep]: absent section means the default grid.
    if (doc.has_section("sweep")) {
        cfg.sweep = SweepSpec{};
        if (const Value* v = rd.raw("sweep", "n")) cfg.sweep.n = parse_axis(*v, "n");
        if (const Value* v = rd.raw("sweep", "kappa")) cfg.sweep.kappa = parse_axis(*v, "kappa");
        if (const Value* v = rd.raw("sweep", "s")) cfg.sweep.s = parse_axis(*v, "s");
        if (const Value* v = rd.raw("sweep", "epsilon")) cfg.sweep.epsilon = parse_axis(*v, "epsilon");
    }
    validate(cfg.sweep, cfg.problem);
    return cfg;
}

std::string num(double v) { return fmt::format("{}", v); }

std::string quote_str(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_axis(std::ostringstream& os, const char* key, const AxisSpec& axis)
{
    switch (axis.kind) {
    case AxisKind::Fixed: return;
    case AxisKind::Coupled:
        os << key << " = " << (axis.scale == 1.0 ? quote_str("n") : quote_str(num(axis.scale) + "*n")) << "\n";
        return;
    case AxisKind::Values: {
        os << key << " = [";
        for (std::size_t i = 0; i < axis.values.size(); ++i) os << (i ? ", " : "") << num(axis.values[i]);
        os << "]\n";
        return;
    }
    }
}

}  // namespace

Config parse_config(std::string_view text, std::span<const std::string> overrides)
{
    Document doc = Document::parse(text);
    for (const auto& o : overrides) apply_override(doc, o);
    return build(doc);
}

Config load_config(const std::filesystem::path& path, std::span<const std::string> overrides)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open configuration file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides);
}

std::string serialize_config(const Config& cfg)
{
    std::ostringstream os;
    const auto& p = cfg.problem;
    os << "[problem]\n"
       << "n = " << p.n << "\n"
       << "kappa = " << num(p.kappa) << "\n"
       << "s = " << p.s << "\n"
       << "epsilon = " << num(p.epsilon) << "\n";
    if (cfg.r_bits_explicit) os << "r_bits = " << p.r_bits << "\n";
    os << "oracle_model = " << quote_str(to_string(p.oracle_model)) << "\n"
       << "mode = " << quote_str(to_string(cfg.options.mode)) << "\n"
       << "t_per_rotation = " << cfg.options.t_per_rotation << "\n"
       << "extra_logical_qubits = " << cfg.options.extra_logical_qubits << "\n\n";

    const auto& q = cfg.quantum_hw;
    os << "[quantum_hw]\n"
       << "p_phys = " << num(q.p_phys) << "\n"
       << "t_cycle_s = " << num(q.t_cycle_s) << "\n"
       << "watts_per_qubit = " << num(q.watts_per_qubit) << "\n";
    if (q.qubit_budget) os << "qubit_budget = " << *q.qubit_budget << "\n";
    os << "error_budget = " << num(q.error_budget) << "\n"
       << "distill_share = " << num(q.distill_share) << "\n\n";

    const auto& c = cfg.classical_hw;
    os << "[classical_hw]\n"
       << "name = " << quote_str(c.name) << "\n"
       << "freq_hz = " << num(c.freq_hz) << "\n"
       << "watts_per_ghz = " << num(c.watts_per_ghz) << "\n"
       << "flops_per_cycle = " << num(c.flops_per_cycle) << "\n";
    if (c.peak_flops) os << "peak_flops = " << num(*c.peak_flops) << "\n";
    os << "method = " << quote_str(to_string(cfg.options.method)) << "\n"
       << "iteration_log = " << quote_str(to_string(cfg.options.iteration_log)) << "\n\n";

    const auto& cr = cfg.cryo;
    os << "[cryo]\n"
       << "model = " << quote_str(to_string(cfg.cryo_model)) << "\n"
       << "q_comp = " << num(cr.q_comp) << "\n"
       << "phi = " << num(cr.phi) << "\n"
       << "beta = " << num(cr.beta) << "\n"
       << "n_p = " << cr.n_p << "\n"
       << "eta_c = " << num(cr.eta_c) << "\n"
       << "cop = " << num(cr.cop) << "\n"
       << "fom = " << num(cr.fom) << "\n"
       << "q_tilde = " << num(cr.q_tilde) << "\n\n";

    os << "[sweep]\n";
    write_axis(os, "n", cfg.sweep.n);
    write_axis(os, "kappa", cfg.sweep.kappa);
    write_axis(os, "s", cfg.sweep.s);
    write_axis(os, "epsilon", cfg.sweep.epsilon);
    return os.str();
}

QuantumHardwareProfile effective_quantum_hw(const Config& cfg)
{
    QuantumHardwareProfile hw = cfg.quantum_hw;
    switch (cfg.cryo_model) {
    case CryoModel::None: break;
    case CryoModel::Full: hw.watts_per_qubit = quantum_power_per_qubit_full(cfg.cryo); break;
    case CryoModel::Simplified:
        hw.watts_per_qubit = quantum_power_per_qubit_simplified(cfg.cryo.q_tilde, cfg.cryo.eta_c, cfg.cryo.cop);
        break;
    }
    return hw;
}

ProblemInstance cell_problem(const Config& cfg, std::uint32_t n, double kappa, std::uint64_t s, double epsilon)
{
    ProblemInstance p = cfg.problem;
    p.n = n;
    p.kappa = kappa;
    p.s = s;
    p.epsilon = epsilon;
    if (!cfg.r_bits_explicit) p.r_bits = default_r_bits(kappa, epsilon);
    return p;
}

}  // namespace qlsa
