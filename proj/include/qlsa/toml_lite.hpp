#pragma once

// Reader for the TOML subset used by configuration files: [section] headers,
// `key = value` pairs, numbers (incl. scientific notation), booleans, basic
// double-quoted strings, single-line arrays and `#` comments.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qlsa::toml {

struct Value {
    using Array = std::vector<Value>;

    std::variant<double, bool, std::string, Array> data;
    bool integer = false;  // numeric literal written without fraction/exponent
    int line = 0;

    bool is_number() const { return std::holds_alternative<double>(data); }
    bool is_bool() const { return std::holds_alternative<bool>(data); }
    bool is_string() const { return std::holds_alternative<std::string>(data); }
    bool is_array() const { return std::holds_alternative<Array>(data); }

    double number() const { return std::get<double>(data); }
    bool boolean() const { return std::get<bool>(data); }
    const std::string& string() const { return std::get<std::string>(data); }
    const Array& array() const { return std::get<Array>(data); }
};

struct Section {
    int line = 0;
    std::map<std::string, Value> entries;
};

class Document {
public:
    static Document parse(std::string_view text);

    bool has_section(const std::string& name) const { return sections_.count(name) != 0; }
    const Section* section(const std::string& name) const;
    const Value* find(const std::string& section, const std::string& key) const;
    const std::map<std::string, Section>& sections() const { return sections_; }

    /// Insert or replace a value, creating the section when needed.
    void set(const std::string& section, const std::string& key, Value v);

private:
    std::map<std::string, Section> sections_;
};

/// Parse a single right-hand-side value (used for command-line overrides).
Value parse_value(std::string_view text, int line);

}  // namespace qlsa::toml
