#pragma once

// Flat "key = value" text format shared by run configs and fixture tables.
// '#' starts a comment when it opens a line or follows whitespace. Keys may contain
// dots for section prefixes (grid.n_points). Line order and comments are kept so a
// canonical document re-emits byte-identically.

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "landau_paraxial/errors.hpp"

namespace landau_paraxial {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool valid_key(std::string_view key)
{
    if (key.empty()) {
        return false;
    }
    const auto head = key.front();
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) {
        return false;
    }
    for (char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) {
            return false;
        }
    }
    return key.back() != '.';
}

} // namespace detail

struct KeyValueLine
{
    enum class Kind
    {
        blank,
        comment,
        entry
    };
    Kind kind = Kind::blank;
    int line_no = 0;
    std::string raw;   ///< original text for blank/comment lines
    std::string key;   ///< entries only
    std::string value; ///< entries only, trimmed, inline comment removed
};

class KeyValueDocument
{
  public:
    static KeyValueDocument parse(const std::string& text)
    {
        KeyValueDocument doc;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            KeyValueLine kv;
            kv.line_no = line_no;
            const std::string_view body = detail::trim(line);
            if (body.empty()) {
                kv.kind = KeyValueLine::Kind::blank;
                kv.raw = line;
            } else if (body.front() == '#') {
                kv.kind = KeyValueLine::Kind::comment;
                kv.raw = line;
            } else {
                const auto eq = body.find('=');
                if (eq == std::string_view::npos) {
                    throw ConfigError(line_no, "", "expected 'key = value', got '" + std::string(body) + "'");
                }
                const std::string key(detail::trim(body.substr(0, eq)));
                std::string_view value = body.substr(eq + 1);
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (value[i] == '#' && (i == 0 || value[i - 1] == ' ' || value[i - 1] == '\t')) {
                        value = value.substr(0, i);
                        break;
                    }
                }
                value = detail::trim(value);
                if (!detail::valid_key(key)) {
                    throw ConfigError(line_no, key, "malformed key");
                }
                if (value.empty()) {
                    throw ConfigError(line_no, key, "missing value");
                }
                if (doc.find(key) != nullptr) {
                    throw ConfigError(line_no, key, "duplicate key");
                }
                kv.kind = KeyValueLine::Kind::entry;
                kv.key = key;
                kv.value = std::string(value);
            }
            doc.lines_.push_back(std::move(kv));
        }
        return doc;
    }

    const std::vector<KeyValueLine>& lines() const noexcept { return lines_; }

    const KeyValueLine* find(std::string_view key) const
    {
        for (const auto& l : lines_) {
            if (l.kind == KeyValueLine::Kind::entry && l.key == key) {
                return &l;
            }
        }
        return nullptr;
    }

    /// Canonical text: entries as "key = value", other lines verbatim.
    std::string emit() const
    {
        std::string out;
        for (const auto& l : lines_) {
            if (l.kind == KeyValueLine::Kind::entry) {
                out += l.key + " = " + l.value;
            } else {
                out += l.raw;
            }
            out += '\n';
        }
        return out;
    }

  private:
    std::vector<KeyValueLine> lines_;
};

/// Strict numeric conversions: the whole token must be consumed and finite.
inline std::optional<double> parse_double(const std::string& s)
{
    if (s.empty()) {
        return std::nullopt;
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

inline std::optional<long> parse_long(const std::string& s)
{
    if (s.empty()) {
        return std::nullopt;
    }
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        return std::nullopt;
    }
    return v;
}

} // namespace landau_paraxial
