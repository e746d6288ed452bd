#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wikiqual {

/// Plain-text sectioned config:
///
///   # comment
///   [section]
///   key = value
///   other = a, b, c
///
/// Section and key order is preserved. Duplicate sections merge; a repeated
/// key within a section keeps both entries (last one wins via get()).
class ConfigFile {
public:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;

        const std::string* get(std::string_view key) const;
    };

    static ConfigFile parse(std::istream& in, std::string_view source = "<stream>");
    static ConfigFile load(const std::filesystem::path& path);

    const Section* find(std::string_view name) const;
    Section& section(std::string_view name);  // creates when absent

    void write(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;

    std::vector<Section> sections;
};

/// Splits "a, b ,c" into {"a","b","c"} with surrounding whitespace trimmed;
/// empty items are dropped.
std::vector<std::string> split_list(std::string_view value);

}  // namespace wikiqual
