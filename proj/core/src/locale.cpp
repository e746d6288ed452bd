#include "wikiqual/locale.hpp"

#include <algorithm>
#include <cctype>

#include "wikiqual/config.hpp"
#include "wikiqual/errors.hpp"

namespace wikiqual {

std::string normalize_namespace_prefix(std::string_view prefix) {
    std::string out;
    out.reserve(prefix.size());
    for (char c : prefix) {
        if (c == '_') c = ' ';
        if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
        out.push_back(c);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    // fold the first letter only; the rest stays case-sensitive
    if (!out.empty())
        out.front() = static_cast<char>(std::tolower(static_cast<unsigned char>(out.front())));
    return out;
}

namespace {

std::vector<std::string> normalize_all(const std::vector<std::string>& aliases) {
    std::vector<std::string> keys;
    keys.reserve(aliases.size());
    for (const auto& a : aliases) keys.push_back(normalize_namespace_prefix(a));
    return keys;
}

bool contains(const std::vector<std::string>& keys, std::string_view prefix) {
    std::string k = normalize_namespace_prefix(prefix);
    return std::find(keys.begin(), keys.end(), k) != keys.end();
}

}  // namespace

LocaleConfig::LocaleConfig(std::string language,
                           std::vector<std::string> category_aliases,
                           std::vector<std::string> media_aliases)
    : language_(std::move(language)),
      category_aliases_(std::move(category_aliases)),
      media_aliases_(std::move(media_aliases)),
      category_keys_(normalize_all(category_aliases_)),
      media_keys_(normalize_all(media_aliases_)) {
    if (language_.empty()) throw ConfigError("locale: empty language code");
    if (category_aliases_.empty() || media_aliases_.empty()) {
        throw ConfigError("locale '" + language_ +
                          "': category and media alias sets must be non-empty");
    }
}

bool LocaleConfig::matches_category(std::string_view prefix) const {
    return contains(category_keys_, prefix);
}

bool LocaleConfig::matches_media(std::string_view prefix) const {
    return contains(media_keys_, prefix);
}

LocaleConfig LocaleConfig::builtin(std::string_view language) {
    // Canonical English namespace names work on every wiki, so each locale
    // carries them alongside its local aliases.
    if (language == "en") {
        return LocaleConfig("en", {"Category"}, {"File", "Image", "Media"});
    }
    if (language == "fr") {
        return LocaleConfig("fr", {"Catégorie", "Category"},
                            {"Fichier", "File", "Image", "Media"});
    }
    if (language == "de") {
        return LocaleConfig("de", {"Kategorie", "Category"},
                            {"Datei", "Bild", "File", "Image", "Media"});
    }
    if (language == "es") {
        return LocaleConfig("es", {"Categoría", "Category"},
                            {"Archivo", "Imagen", "File", "Image", "Media"});
    }
    std::string known;
    for (const auto& l : builtin_languages()) {
        if (!known.empty()) known += ", ";
        known += l;
    }
    throw InputError("unknown language '" + std::string(language) +
                     "' (built-in locales: " + known +
                     "; supply aliases via a locale config file)");
}

std::vector<std::string> LocaleConfig::builtin_languages() {
    return {"en", "fr", "de", "es"};
}

std::vector<LocaleConfig> LocaleConfig::load_file(const std::filesystem::path& path) {
    ConfigFile cfg = ConfigFile::load(path);
    std::vector<LocaleConfig> locales;
    for (const auto& section : cfg.sections) {
        const std::string* cats = section.get("categories");
        const std::string* media = section.get("media");
        if (cats == nullptr || media == nullptr) {
            throw ConfigError(path.string() + ": locale section [" + section.name +
                              "] needs both 'categories' and 'media' keys");
        }
        locales.emplace_back(section.name, split_list(*cats), split_list(*media));
    }
    return locales;
}

LocaleConfig LocaleConfig::resolve(std::string_view language,
                                   const std::filesystem::path& path) {
    if (!path.empty()) {
        auto locales = load_file(path);
        for (auto& l : locales) {
            if (l.language() == language) return std::move(l);
        }
        // fall through to builtins when the file lacks this language
    }
    return builtin(language);
}

}  // namespace wikiqual
