#include "rcag/thresholds.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcag/errors.hpp"

namespace rcag {

MissingThreshold::MissingThreshold(std::size_t m, double alpha)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "no DD threshold for m = " << m << ", alpha = " << alpha
             << "; calibrate it first (rcag calibrate --m " << m << " --alpha " << alpha << ")";
          return os.str();
      }()),
      m_(m),
      alpha_(alpha) {}

std::string_view to_string(ThresholdSource s) noexcept {
    return s == ThresholdSource::Calibrated ? "calibrated" : "published-reference";
}

ThresholdTable::Key ThresholdTable::key(std::size_t m, double alpha) {
    return {m, static_cast<std::int64_t>(std::llround(alpha * 1e9))};
}

void ThresholdTable::upsert(ThresholdEntry e) {
    const Key k = key(e.m, e.alpha);
    entries_.insert_or_assign(k, std::move(e));
}

std::optional<ThresholdEntry> ThresholdTable::find(std::size_t m, double alpha) const {
    const auto it = entries_.find(key(m, alpha));
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const ThresholdEntry& ThresholdTable::at(std::size_t m, double alpha) const {
    const auto it = entries_.find(key(m, alpha));
    if (it == entries_.end()) {
        throw MissingThreshold(m, alpha);
    }
    return it->second;
}

std::vector<ThresholdEntry> ThresholdTable::entries() const {
    std::vector<ThresholdEntry> out;
    out.reserve(entries_.size());
    for (const auto& [k, e] : entries_) {
        out.push_back(e);
    }
    return out;
}

void ThresholdTable::merge(const ThresholdTable& other) {
    for (const auto& [k, e] : other.entries_) {
        entries_.insert_or_assign(k, e);
    }
}

std::string threshold_table_to_json(const ThresholdTable& table) {
    nlohmann::ordered_json doc;
    doc["version"] = ThresholdTable::kFormatVersion;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : table.entries()) {
        nlohmann::ordered_json j;
        j["m"] = e.m;
        j["alpha"] = e.alpha;
        j["c"] = e.c;
        j["k"] = e.k;
        j["seed"] = e.seed;
        j["stream"] = e.stream;
        j["percentile"] = e.percentile;
        j["source"] = std::string(to_string(e.source));
        doc["entries"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
        }
    }
    return line;
}

template <typename T>
T field(const nlohmann::json& obj, const char* name, const std::string& where) {
    const auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError(where + "." + name + ": missing field");
    }
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(where + "." + name + ": wrong type");
    }
}

}  // namespace

ThresholdTable threshold_table_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed threshold cache: ") + e.what(), line_of(text, e.byte));
    }
    if (!doc.is_object()) {
        throw ParseError("threshold cache must be a JSON object");
    }
    if (!doc.contains("version")) {
        throw ParseError("version: missing field");
    }
    const auto version = field<int>(doc, "version", "$");
    if (version != ThresholdTable::kFormatVersion) {
        throw VersionError("threshold cache version " + std::to_string(version) + " is not supported (expected " +
                           std::to_string(ThresholdTable::kFormatVersion) + ")");
    }
    const auto it = doc.find("entries");
    if (it == doc.end() || !it->is_array()) {
        throw ParseError("entries: expected an array");
    }
    ThresholdTable table;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& j = (*it)[i];
        const std::string where = "entries[" + std::to_string(i) + "]";
        if (!j.is_object()) {
            throw ParseError(where + ": expected an object");
        }
        ThresholdEntry e;
        e.m = field<std::size_t>(j, "m", where);
        e.alpha = field<double>(j, "alpha", where);
        e.c = field<double>(j, "c", where);
        e.k = field<std::size_t>(j, "k", where);
        e.seed = field<std::uint64_t>(j, "seed", where);
        e.stream = j.contains("stream") ? field<std::uint64_t>(j, "stream", where) : 0;
        e.percentile = field<std::string>(j, "percentile", where);
        const auto source = field<std::string>(j, "source", where);
        if (source == "calibrated") {
            e.source = ThresholdSource::Calibrated;
        } else if (source == "published-reference") {
            e.source = ThresholdSource::PublishedReference;
        } else {
            throw ParseError(where + ".source: unknown value '" + source + "'");
        }
        if (!(e.alpha > 0.0 && e.alpha < 1.0)) {
            throw ParseError(where + ".alpha: must lie in (0, 1)");
        }
        table.upsert(std::move(e));
    }
    return table;
}

void threshold_store_save(const std::filesystem::path& path, const ThresholdTable& table) {
    const std::string body = threshold_table_to_json(table);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << body;
        if (!out.flush()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

ThresholdTable threshold_store_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read threshold cache " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return threshold_table_from_json(buf.str());
}

const ThresholdTable& published_reference_table() {
    static const ThresholdTable table = [] {
        struct Row {
            std::size_t m;
            double c10, c05, c01;
        };
        static constexpr Row rows[] = {
            {40, 0.61479, 0.63671, 0.71622},   {60, 0.55796, 0.57901, 0.61061},   {80, 0.52982, 0.54835, 0.58169},
            {100, 0.50929, 0.52625, 0.56101},  {200, 0.45365, 0.46431, 0.48605},  {300, 0.43288, 0.44144, 0.46347},
            {400, 0.41672, 0.42533, 0.44297},  {500, 0.40645, 0.41239, 0.42510},  {600, 0.39746, 0.40262, 0.41657},
            {700, 0.39256, 0.39836, 0.41047},  {800, 0.38662, 0.39131, 0.40196},  {900, 0.38347, 0.38864, 0.39882},
            {1000, 0.37982, 0.38380, 0.39133}, {1200, 0.37465, 0.37881, 0.38782}, {1500, 0.36822, 0.37237, 0.37968},
            {2000, 0.36317, 0.36693, 0.37196}, {2300, 0.35944, 0.36258, 0.36697}, {2700, 0.35640, 0.35988, 0.36477},
            {3000, 0.35453, 0.35735, 0.36214}, {3300, 0.35353, 0.35639, 0.36121}, {3700, 0.35162, 0.35443, 0.36130},
            {4000, 0.35037, 0.35249, 0.35696}, {5000, 0.34854, 0.35102, 0.35613}, {6000, 0.34642, 0.34827, 0.35230},
            {7000, 0.34457, 0.34639, 0.34955}, {8000, 0.34365, 0.34519, 0.34817},
        };
        ThresholdTable t;
        for (const auto& r : rows) {
            for (const auto& [alpha, c] : {std::pair{0.10, r.c10}, std::pair{0.05, r.c05}, std::pair{0.01, r.c01}}) {
                ThresholdEntry e;
                e.m = r.m;
                e.alpha = alpha;
                e.c = c;
                e.k = 1000;
                e.percentile = "unspecified";
                e.source = ThresholdSource::PublishedReference;
                t.upsert(std::move(e));
            }
        }
        return t;
    }();
    return table;
}

const ThresholdTable& bundled_threshold_table() {
    static const ThresholdTable table = threshold_table_from_json(
#include "bundled_thresholds.inc"
    );
    return table;
}

ThresholdTable resolve_threshold_table(std::string_view which) {
    if (which == "bundled") {
        return bundled_threshold_table();
    }
    if (which == "reference") {
        return published_reference_table();
    }
    return threshold_store_load(std::filesystem::path(which));
}

}  // namespace rcag
