#pragma once

// Reference-value tables. Each entry `name = value` has a twin
// `provenance.name = <kind>: <how it was obtained>` with kind one of
// derived / trivial / published.

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/keyvalue.hpp"

namespace landau_paraxial {

struct Fixture
{
    std::string value;
    std::string provenance;

    double as_double() const
    {
        const auto v = parse_double(value);
        if (!v) {
            throw UsageError("fixture value '" + value + "' is not a number");
        }
        return *v;
    }

    long as_long() const
    {
        const auto v = parse_long(value);
        if (!v) {
            throw UsageError("fixture value '" + value + "' is not an integer");
        }
        return *v;
    }

    /// Comma-separated list of numbers.
    std::vector<double> as_vector() const
    {
        std::vector<double> out;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto v = parse_double(std::string(detail::trim(item)));
            if (!v) {
                throw UsageError("fixture vector element '" + item + "' is not a number");
            }
            out.push_back(*v);
        }
        return out;
    }

    std::string kind() const { return provenance.substr(0, provenance.find(':')); }
};

class FixtureTable
{
  public:
    static constexpr const char* provenance_prefix = "provenance.";

    static FixtureTable parse(const std::string& text)
    {
        FixtureTable t;
        t.doc_ = KeyValueDocument::parse(text);
        const std::string prefix = provenance_prefix;
        for (const auto& l : t.doc_.lines()) {
            if (l.kind != KeyValueLine::Kind::entry || l.key.rfind(prefix, 0) == 0) {
                continue;
            }
            const KeyValueLine* p = t.doc_.find(prefix + l.key);
            if (p == nullptr) {
                throw ConfigError(l.line_no, l.key, "fixture has no provenance entry");
            }
            const std::string kind = p->value.substr(0, p->value.find(':'));
            if (kind != "derived" && kind != "trivial" && kind != "published") {
                throw ConfigError(p->line_no, p->key, "provenance must start with derived:, trivial: or published:");
            }
            t.entries_.emplace(l.key, Fixture{l.value, p->value});
        }
        for (const auto& l : t.doc_.lines()) {
            if (l.kind == KeyValueLine::Kind::entry && l.key.rfind(prefix, 0) == 0 &&
                t.entries_.find(l.key.substr(prefix.size())) == t.entries_.end()) {
                throw ConfigError(l.line_no, l.key, "provenance entry without a fixture");
            }
        }
        return t;
    }

    static FixtureTable load(const std::filesystem::path& path) { return parse(read_text_file(path)); }

    const Fixture& get(const std::string& name) const
    {
        const auto it = entries_.find(name);
        if (it == entries_.end()) {
            throw LookupError("unknown fixture '" + name + "'");
        }
        return it->second;
    }

    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::string emit() const { return doc_.emit(); }

  private:
    KeyValueDocument doc_;
    std::map<std::string, Fixture> entries_;
};

inline Fixture load_fixture(const FixtureTable& table, const std::string& name) { return table.get(name); }

} // namespace landau_paraxial
