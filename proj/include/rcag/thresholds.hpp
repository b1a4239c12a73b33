#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcag {

enum class ThresholdSource { Calibrated, PublishedReference };

[[nodiscard]] std::string_view to_string(ThresholdSource s) noexcept;

/// One DD cutoff C_alpha(m) with enough metadata to regenerate it.
struct ThresholdEntry {
    std::size_t m = 0;  ///< observation count (even)
    double alpha = 0.0;
    double c = 0.0;
    std::size_t k = 0;  ///< replicate count, 0 when unknown
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string percentile = "linear-interp";
    ThresholdSource source = ThresholdSource::Calibrated;

    friend bool operator==(const ThresholdEntry&, const ThresholdEntry&) = default;
};

/// Cutoffs keyed by (m, alpha). Alpha keys are compared at 1e-9 resolution.
class ThresholdTable {
public:
    static constexpr int kFormatVersion = 1;

    /// Inserts or replaces the entry for (e.m, e.alpha).
    void upsert(ThresholdEntry e);

    [[nodiscard]] std::optional<ThresholdEntry> find(std::size_t m, double alpha) const;

    /// Throws MissingThreshold when absent.
    [[nodiscard]] const ThresholdEntry& at(std::size_t m, double alpha) const;

    [[nodiscard]] bool contains(std::size_t m, double alpha) const { return find(m, alpha).has_value(); }

    /// Entries ordered by (m, alpha).
    [[nodiscard]] std::vector<ThresholdEntry> entries() const;

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

    void merge(const ThresholdTable& other);

    friend bool operator==(const ThresholdTable&, const ThresholdTable&) = default;

private:
    using Key = std::pair<std::size_t, std::int64_t>;
    static Key key(std::size_t m, double alpha);
    std::map<Key, ThresholdEntry> entries_;
};

/// Versioned JSON document: {"version": 1, "entries": [...]}.
[[nodiscard]] std::string threshold_table_to_json(const ThresholdTable& table);

/// Throws ParseError (with field context) or VersionError.
[[nodiscard]] ThresholdTable threshold_table_from_json(std::string_view text);

/// Atomic write: temp file in the same directory, then rename.
void threshold_store_save(const std::filesystem::path& path, const ThresholdTable& table);

[[nodiscard]] ThresholdTable threshold_store_load(const std::filesystem::path& path);

/// Published reference cutoffs for m in 40..8000 at 10%, 5% and 1%.
[[nodiscard]] const ThresholdTable& published_reference_table();

/// Cutoffs produced by calibrate_threshold for the same m grid, shipped with
/// the library (k = 1000). Includes alpha/2 levels for odd-length series.
[[nodiscard]] const ThresholdTable& bundled_threshold_table();

/// "bundled", "reference", or a path to a threshold file.
[[nodiscard]] ThresholdTable resolve_threshold_table(std::string_view which);

}  // namespace rcag
