#include "wikiqual/config.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "wikiqual/errors.hpp"

namespace wikiqual {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

const std::string* ConfigFile::Section::get(std::string_view key) const {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries) {
        if (k == key) found = &v;
    }
    return found;
}

ConfigFile ConfigFile::parse(std::istream& in, std::string_view source) {
    ConfigFile cfg;
    Section* current = nullptr;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#' || s.front() == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ConfigError(std::string(source) + ":" + std::to_string(lineno) +
                                  ": malformed section header '" + std::string(s) + "'");
            }
            current = &cfg.section(trim(s.substr(1, s.size() - 2)));
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(source) + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + std::string(s) + "'");
        }
        if (current == nullptr) {
            throw ConfigError(std::string(source) + ":" + std::to_string(lineno) +
                              ": entry before any [section]");
        }
        std::string key(trim(s.substr(0, eq)));
        std::string value(trim(s.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError(std::string(source) + ":" + std::to_string(lineno) +
                              ": empty key");
        }
        current->entries.emplace_back(std::move(key), std::move(value));
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    return parse(in, path.string());
}

const ConfigFile::Section* ConfigFile::find(std::string_view name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

ConfigFile::Section& ConfigFile::section(std::string_view name) {
    for (auto& s : sections) {
        if (s.name == name) return s;
    }
    sections.push_back(Section{std::string(name), {}});
    return sections.back();
}

void ConfigFile::write(std::ostream& out) const {
    bool first = true;
    for (const auto& s : sections) {
        if (!first) out << "\n";
        first = false;
        out << "[" << s.name << "]\n";
        for (const auto& [k, v] : s.entries) out << k << " = " << v << "\n";
    }
}

void ConfigFile::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config file: " + path.string());
    write(out);
    if (!out.good()) throw IoError("write failed: " + path.string());
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        std::string_view item = trim(value.substr(start, comma - start));
        if (!item.empty()) items.emplace_back(item);
        start = comma + 1;
    }
    return items;
}

}  // namespace wikiqual
