#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wikiqual {

/// Per-language namespace aliases used to tell categories and media links
/// apart from ordinary wikilinks. Immutable once built; safe to share
/// across threads.
class LocaleConfig {
public:
    LocaleConfig(std::string language,
                 std::vector<std::string> category_aliases,
                 std::vector<std::string> media_aliases);

    const std::string& language() const { return language_; }
    const std::vector<std::string>& category_aliases() const { return category_aliases_; }
    const std::vector<std::string>& media_aliases() const { return media_aliases_; }

    /// Namespace-prefix match: underscores equal spaces, runs of spaces
    /// collapse, surrounding whitespace is ignored, and the first letter is
    /// case-insensitive (MediaWiki title normalization).
    bool matches_category(std::string_view prefix) const;
    bool matches_media(std::string_view prefix) const;

    /// Compiled-in aliases for en, fr, de, es. Throws InputError for other
    /// codes; the message lists the known ones.
    static LocaleConfig builtin(std::string_view language);
    static std::vector<std::string> builtin_languages();

    /// Loads every [lang] section of a locale config file:
    ///   [fr]
    ///   categories = Catégorie, Category
    ///   media = Fichier, File, Image
    static std::vector<LocaleConfig> load_file(const std::filesystem::path& path);

    /// Picks `language` from `path` when given, else from builtins.
    static LocaleConfig resolve(std::string_view language,
                                const std::filesystem::path& path);

private:
    std::string language_;
    std::vector<std::string> category_aliases_;
    std::vector<std::string> media_aliases_;
    std::vector<std::string> category_keys_;  // normalized
    std::vector<std::string> media_keys_;
};

/// The normalization used for alias matching, exposed for tests.
std::string normalize_namespace_prefix(std::string_view prefix);

}  // namespace wikiqual
