#include "rcag/report.hpp"

#include <cstdio>
#include <json.hpp>

namespace rcag {

namespace {

using Json = nlohmann::ordered_json;

Json seed_json(const RngSeed& s) { return Json{{"master", s.master}, {"stream", s.stream}}; }

std::string_view decision_name(Decision d) { return rejects(d) ? "reject" : "not-reject"; }

Json group_json(const TestOutcome& t, const GroupOutcome& g) {
    Json j;
    j["first"] = g.first;
    j["length"] = g.length;
    j["statistic"] = g.statistic;
    if (t.test == "ep") {
        j["pairs"] = g.pairs;
        j["non_edges"] = g.non_edges;
        j["regime"] = g.regime;
        j["p_value"] = g.p_value.value_or(1.0);
        if (g.critical_distance) {
            j["critical_distance"] = *g.critical_distance;
        }
        if (g.coin) {
            j["coin"] = *g.coin;
        }
        j["pairing"] = g.pairing_seed ? "random" : "explicit";
        if (g.pairing_seed) {
            j["pairing_seed"] = seed_json(*g.pairing_seed);
        }
    } else {
        j["vertices"] = g.vertices;
        j["degree_zero_mass"] = g.degree_zero_mass;
        j["threshold"] = g.threshold.value_or(0.0);
        if (g.threshold_source) {
            j["threshold_source"] = to_string(*g.threshold_source);
        }
    }
    j["decision"] = decision_name(g.decision);
    return j;
}

Json outcome_json(const TestOutcome& t) {
    Json j;
    j["test"] = t.test;
    j["m"] = t.m;
    j["alpha"] = t.alpha;
    j["group_level"] = t.group_level;
    j["seed"] = t.seed ? seed_json(*t.seed) : Json(nullptr);
    Json groups = Json::array();
    for (const auto& g : t.groups) {
        groups.push_back(group_json(t, g));
    }
    j["groups"] = std::move(groups);
    if (t.adjusted_p_values) {
        j["adjusted_p_values"] = *t.adjusted_p_values;
    }
    j["decision"] = decision_name(t.decision);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

std::string to_json(const TestOutcome& outcome) { return dump(outcome_json(outcome)); }

std::string to_json(std::span<const TestOutcome> outcomes) {
    Json j;
    j["m"] = outcomes.empty() ? 0 : outcomes.front().m;
    Json results = Json::array();
    bool any = false;
    for (const auto& t : outcomes) {
        results.push_back(outcome_json(t));
        any = any || rejects(t.decision);
    }
    j["results"] = std::move(results);
    j["decision"] = any ? "reject" : "not-reject";
    return dump(j);
}

std::string to_json(const PowerReport& r) {
    Json j;
    j["process"] = r.process;
    j["m"] = r.m;
    j["replicates"] = r.replicates;
    j["alpha"] = r.alpha;
    j["test"] = r.test;
    j["rejections"] = r.rejections;
    j["rejection_rate"] = r.rejection_rate;
    j["standard_error"] = r.standard_error;
    j["seed"] = seed_json(r.seed);
    if (r.threshold_source) {
        j["threshold_source"] = to_string(*r.threshold_source);
    }
    return dump(j);
}

std::string to_json(const TheoryValidation& v) {
    Json j;
    j["seed"] = seed_json(v.seed);
    j["draws"] = v.draws;
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"observed", c.observed},
                              {"expected", c.expected},
                              {"tolerance", c.tolerance},
                              {"passed", c.passed},
                              {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    j["passed"] = v.all_passed();
    return dump(j);
}

std::string to_text(const TestOutcome& t) {
    std::string s = "RCAG-" + std::string(t.test == "ep" ? "EP" : "DD") + " test, m = " + std::to_string(t.m) +
                    ", alpha = " + fmt("%g", t.alpha) + "\n";
    s += "  group  first  length   statistic  ";
    s += t.test == "ep" ? "   p-value" : " threshold";
    s += "  decision\n";
    for (std::size_t i = 0; i < t.groups.size(); ++i) {
        const auto& g = t.groups[i];
        char line[160];
        const double cut = t.test == "ep" ? g.p_value.value_or(1.0) : g.threshold.value_or(0.0);
        std::snprintf(line, sizeof line, "  %5zu  %5zu  %6zu  %10.6f  %10.6g  %s\n", i + 1, g.first, g.length,
                      g.statistic, cut, std::string(decision_name(g.decision)).c_str());
        s += line;
    }
    if (t.adjusted_p_values) {
        s += "  BH-adjusted p-values:";
        for (double p : *t.adjusted_p_values) {
            s += " " + fmt("%.6g", p);
        }
        s += "\n";
    }
    s += "  decision: " + std::string(decision_name(t.decision)) + "\n";
    return s;
}

std::string to_text(const PowerReport& r) {
    return "power of " + r.test + " on " + r.process + ", m = " + std::to_string(r.m) + ": " +
           std::to_string(r.rejections) + "/" + std::to_string(r.replicates) + " = " +
           fmt("%.4f", r.rejection_rate) + " (se " + fmt("%.4f", r.standard_error) + ")\n";
}

std::string to_text(const TheoryValidation& v) {
    std::string s;
    for (const auto& c : v.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-28s observed %-14.10g expected %-14.10g tol %g\n",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.observed, c.expected, c.tolerance);
        s += line;
    }
    return s;
}

}  // namespace rcag
