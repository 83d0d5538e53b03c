#include "qlsa/toml_lite.hpp"

#include <cctype>
#include <charconv>

#include "qlsa/errors.hpp"

namespace qlsa::toml {
namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Drops a trailing comment, ignoring '#' inside strings.
std::string_view strip_comment(std::string_view s)
{
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string && c == '\\') {
            ++i;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (c == '#' && !in_string) {
            return s.substr(0, i);
        }
    }
    return s;
}

bool is_bare_key(std::string_view k)
{
    if (k.empty()) return false;
    for (char c : k) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    }
    return true;
}

class ValueParser {
public:
    ValueParser(std::string_view text, int line) : text_(text), line_(line) {}

    Value parse_all()
    {
        Value v = parse_one();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing characters '" + std::string(text_.substr(pos_)) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Value parse_one()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("missing value");
        const char c = text_[pos_];
        if (c == '"') return parse_string();
        if (c == '[') return parse_array();
        if (text_.substr(pos_, 4) == "true") {
            pos_ += 4;
            return Value{true, false, line_};
        }
        if (text_.substr(pos_, 5) == "false") {
            pos_ += 5;
            return Value{false, false, line_};
        }
        return parse_number();
    }

    Value parse_string()
    {
        ++pos_;
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) fail("unterminated escape");
                const char e = text_[pos_++];
                switch (e) {
                case 'n': c = '\n'; break;
                case 't': c = '\t'; break;
                case '"': c = '"'; break;
                case '\\': c = '\\'; break;
                default: fail(std::string("unsupported escape \\") + e);
                }
            }
            out.push_back(c);
        }
        if (pos_ >= text_.size()) fail("unterminated string");
        ++pos_;
        return Value{std::move(out), false, line_};
    }

    Value parse_array()
    {
        ++pos_;
        Value::Array items;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return Value{std::move(items), false, line_};
        }
        while (true) {
            items.push_back(parse_one());
            skip_ws();
            if (pos_ >= text_.size()) fail("unterminated array");
            if (text_[pos_] == ',') {
                ++pos_;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ']') {  // trailing comma
                    ++pos_;
                    break;
                }
                continue;
            }
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            fail("expected ',' or ']' in array");
        }
        return Value{std::move(items), false, line_};
    }

    Value parse_number()
    {
        std::size_t end = pos_;
        while (end < text_.size() && text_[end] != ',' && text_[end] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[end]))) {
            ++end;
        }
        std::string token(text_.substr(pos_, end - pos_));
        std::erase(token, '_');  // TOML digit separators
        std::string_view tok = token;
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
            fail("invalid value '" + std::string(text_.substr(pos_, end - pos_)) + "'");
        }
        const bool integer = tok.find_first_of(".eEnN") == std::string_view::npos;
        pos_ = end;
        return Value{value, integer, line_};
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

Value parse_value(std::string_view text, int line)
{
    return ValueParser(trim(text), line).parse_all();
}

Document Document::parse(std::string_view text)
{
    Document doc;
    std::string current;
    bool have_section = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        ++line_no;
        std::string_view line = trim(strip_comment(text.substr(start, nl - start)));
        start = nl + 1;
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!is_bare_key(name)) throw ParseError(line_no, "invalid section name '" + std::string(name) + "'");
            current = std::string(name);
            if (doc.sections_.count(current)) throw ParseError(line_no, "duplicate section [" + current + "]");
            doc.sections_[current].line = line_no;
            have_section = true;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        if (!is_bare_key(key)) throw ParseError(line_no, "invalid key '" + std::string(key) + "'");
        if (!have_section) throw ParseError(line_no, "key '" + std::string(key) + "' appears before any [section]");
        auto& entries = doc.sections_[current].entries;
        if (entries.count(std::string(key))) {
            throw ParseError(line_no, "duplicate key '" + std::string(key) + "' in [" + current + "]");
        }
        entries.emplace(std::string(key), parse_value(line.substr(eq + 1), line_no));
    }
    return doc;
}

const Section* Document::section(const std::string& name) const
{
    auto it = sections_.find(name);
    return it == sections_.end() ? nullptr : &it->second;
}

const Value* Document::find(const std::string& section, const std::string& key) const
{
    const Section* s = this->section(section);
    if (!s) return nullptr;
    auto it = s->entries.find(key);
    return it == s->entries.end() ? nullptr : &it->second;
}

void Document::set(const std::string& section, const std::string& key, Value v)
{
    sections_[section].entries[key] = std::move(v);
}

}  // namespace qlsa::toml
