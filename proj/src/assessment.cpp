#include "pmsmetrics/assessment.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pmsmetrics {

using json = nlohmann::ordered_json;

std::string to_upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

namespace {

std::string trim(std::string_view text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        return {};
    auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

[[noreturn]] void syntax_error_at(std::string_view text, std::size_t byte, const std::string& what) {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t stop = byte > 0 ? std::min(byte - 1, text.size()) : 0;
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream msg;
    msg << "line " << line << ", column " << column << ": " << what;
    throw SyntaxError(msg.str(), line, column);
}

// --- schema helpers -------------------------------------------------------

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object())
        throw SchemaError(path + ": expected an object");
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](std::string_view k) { return k == item.key(); });
        if (!known)
            throw SchemaError(path + ": unknown key \"" + item.key() + "\"");
    }
}

const json& require_key(const json& j, const std::string& path, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(path + ": missing key \"" + key + "\"");
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string())
        throw SchemaError(path + ": expected a string");
    return j.get<std::string>();
}

double get_real(const json& j, const std::string& path) {
    if (!j.is_number())
        throw SchemaError(path + ": expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw SchemaError(path + ": expected an integer");
    return j.get<int>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean())
        throw SchemaError(path + ": expected a boolean");
    return j.get<bool>();
}

// --- section parsers ------------------------------------------------------

PmsIdentity parse_pms(const json& j) {
    expect_object(j, "pms");
    reject_unknown_keys(j, "pms", {"name", "version"});
    PmsIdentity pms;
    pms.name = get_string(require_key(j, "pms", "name"), "pms.name");
    pms.version = get_string(require_key(j, "pms", "version"), "pms.version");
    return pms;
}

ComplexitySource parse_complexity(const json& j, const std::string& path) {
    expect_object(j, path);
    std::string mode = get_string(require_key(j, path, "mode"), path + ".mode");
    if (mode == "manual") {
        reject_unknown_keys(j, path, {"mode", "readability", "mccabe", "fan_in", "fan_out"});
        ManualComplexity manual;
        manual.inputs.readability = get_real(require_key(j, path, "readability"), path + ".readability");
        manual.inputs.mccabe = get_int(require_key(j, path, "mccabe"), path + ".mccabe");
        manual.inputs.fan_in = get_int(require_key(j, path, "fan_in"), path + ".fan_in");
        manual.inputs.fan_out = get_int(require_key(j, path, "fan_out"), path + ".fan_out");
        return manual;
    }
    if (mode == "source") {
        reject_unknown_keys(j, path, {"mode", "path"});
        return SourceComplexity{get_string(require_key(j, path, "path"), path + ".path")};
    }
    if (mode == "blackbox") {
        reject_unknown_keys(j, path, {"mode", "inputs", "outputs"});
        BlackBoxSpec spec;
        spec.inputs = get_int(require_key(j, path, "inputs"), path + ".inputs");
        spec.outputs = get_int(require_key(j, path, "outputs"), path + ".outputs");
        return spec;
    }
    throw SchemaError(path + ".mode: expected \"manual\", \"source\" or \"blackbox\"");
}

ModuleAssessment parse_module(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"name", "weight", "portability", "scalability", "complexity"});
    ModuleAssessment module;
    module.name = get_string(require_key(j, path, "name"), path + ".name");
    if (auto it = j.find("weight"); it != j.end())
        module.weight = get_real(*it, path + ".weight");
    module.portability = get_real(require_key(j, path, "portability"), path + ".portability");
    module.scalability = get_real(require_key(j, path, "scalability"), path + ".scalability");
    module.complexity = parse_complexity(require_key(j, path, "complexity"), path + ".complexity");
    return module;
}

CoverageEvidence parse_coverage(const json& j, const std::string& path) {
    expect_object(j, path);
    if (j.contains("percent")) {
        reject_unknown_keys(j, path, {"percent"});
        return CoveragePercent{get_real(j.at("percent"), path + ".percent")};
    }
    if (j.contains("auto") || j.contains("total")) {
        reject_unknown_keys(j, path, {"auto", "total"});
        CoverageCounts counts;
        counts.automated = get_int(require_key(j, path, "auto"), path + ".auto");
        counts.total = get_int(require_key(j, path, "total"), path + ".total");
        return counts;
    }
    throw SchemaError(path + ": expected {\"auto\",\"total\"} or {\"percent\"}");
}

BandedScore parse_banded(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"percent", "justification"});
    BandedScore score;
    score.percent = get_real(require_key(j, path, "percent"), path + ".percent");
    if (auto it = j.find("justification"); it != j.end())
        score.justification = get_string(*it, path + ".justification");
    return score;
}

AutonomyAssessment parse_autonomy(const json& j) {
    expect_object(j, "autonomy");
    reject_unknown_keys(j, "autonomy",
                        {"operator_independence", "self_preservation", "strategy", "coordination"});
    AutonomyAssessment autonomy;
    autonomy.operator_independence =
        parse_coverage(require_key(j, "autonomy", "operator_independence"),
                       "autonomy.operator_independence");
    autonomy.self_preservation = parse_coverage(
        require_key(j, "autonomy", "self_preservation"), "autonomy.self_preservation");
    autonomy.strategy = parse_banded(require_key(j, "autonomy", "strategy"), "autonomy.strategy");
    autonomy.coordination =
        parse_banded(require_key(j, "autonomy", "coordination"), "autonomy.coordination");
    return autonomy;
}

AnalyzerConfig parse_config(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(
        j, path, {"constant_patterns", "builtins", "symbolic_constants", "extended_decision_counting"});
    AnalyzerConfig config = AnalyzerConfig::defaults();
    if (auto it = j.find("constant_patterns"); it != j.end()) {
        if (!it->is_array())
            throw SchemaError(path + ".constant_patterns: expected an array of strings");
        config.constant_patterns.clear();
        std::size_t i = 0;
        for (const auto& entry : *it)
            config.constant_patterns.push_back(to_upper(
                get_string(entry, path + ".constant_patterns[" + std::to_string(i++) + "]")));
    }
    auto read_name_set = [&](const char* key, std::set<std::string>& out) {
        auto it = j.find(key);
        if (it == j.end())
            return;
        if (!it->is_array())
            throw SchemaError(path + "." + key + ": expected an array of strings");
        out.clear();
        std::size_t i = 0;
        for (const auto& entry : *it)
            out.insert(to_upper(
                get_string(entry, path + "." + key + "[" + std::to_string(i++) + "]")));
    };
    read_name_set("builtins", config.builtins);
    read_name_set("symbolic_constants", config.symbolic_constants);
    if (auto it = j.find("extended_decision_counting"); it != j.end())
        config.extended_decision_counting = get_bool(*it, path + ".extended_decision_counting");
    return config;
}

json document_to_json(const AssessmentDocument& doc) {
    json root;
    root["pms"] = {{"name", doc.pms.name}, {"version", doc.pms.version}};

    json modules = json::array();
    for (const auto& module : doc.modules) {
        json m;
        m["name"] = module.name;
        m["weight"] = module.weight;
        m["portability"] = module.portability;
        m["scalability"] = module.scalability;
        json c;
        if (const auto* manual = std::get_if<ManualComplexity>(&module.complexity)) {
            c["mode"] = "manual";
            c["readability"] = manual->inputs.readability;
            c["mccabe"] = manual->inputs.mccabe;
            c["fan_in"] = manual->inputs.fan_in;
            c["fan_out"] = manual->inputs.fan_out;
        } else if (const auto* source = std::get_if<SourceComplexity>(&module.complexity)) {
            c["mode"] = "source";
            c["path"] = source->path;
        } else {
            const auto& blackbox = std::get<BlackBoxSpec>(module.complexity);
            c["mode"] = "blackbox";
            c["inputs"] = blackbox.inputs;
            c["outputs"] = blackbox.outputs;
        }
        m["complexity"] = std::move(c);
        modules.push_back(std::move(m));
    }
    root["modules"] = std::move(modules);

    auto coverage_json = [](const CoverageEvidence& evidence) {
        json c;
        if (const auto* counts = std::get_if<CoverageCounts>(&evidence)) {
            c["auto"] = counts->automated;
            c["total"] = counts->total;
        } else {
            c["percent"] = std::get<CoveragePercent>(evidence).value;
        }
        return c;
    };
    auto banded_json = [](const BandedScore& score) {
        return json{{"percent", score.percent}, {"justification", score.justification}};
    };
    root["autonomy"] = {
        {"operator_independence", coverage_json(doc.autonomy.operator_independence)},
        {"self_preservation", coverage_json(doc.autonomy.self_preservation)},
        {"strategy", banded_json(doc.autonomy.strategy)},
        {"coordination", banded_json(doc.autonomy.coordination)},
    };

    root["analyzer_config"] = {
        {"constant_patterns", doc.analyzer_config.constant_patterns},
        {"builtins", doc.analyzer_config.builtins},
        {"symbolic_constants", doc.analyzer_config.symbolic_constants},
        {"extended_decision_counting", doc.analyzer_config.extended_decision_counting},
    };
    return root;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error_at(text, e.byte, e.what());
    }
}

void check_range(std::vector<Violation>& out, const std::string& path, double value, double lo,
                 double hi) {
    if (value < lo || value > hi) {
        std::ostringstream msg;
        msg << "must be between " << lo << " and " << hi << ", got " << value;
        out.push_back({path, msg.str()});
    }
}

} // namespace

AnalyzerConfig AnalyzerConfig::defaults() {
    AnalyzerConfig config;
    config.constant_patterns = {"K#"};
    config.builtins = {"T"};
    config.symbolic_constants = {"ON", "OFF", "LOW", "HI", "HIGH", "ERROR"};
    config.extended_decision_counting = false;
    return config;
}

bool valid_constant_pattern(std::string_view pattern) {
    if (pattern.size() < 2 || pattern.back() != '#')
        return false;
    std::string_view prefix = pattern.substr(0, pattern.size() - 1);
    if (!is_ident_start(prefix.front()))
        return false;
    return std::all_of(prefix.begin(), prefix.end(), is_ident_char);
}

bool matches_constant_pattern(std::string_view identifier, std::string_view pattern) {
    if (!valid_constant_pattern(pattern))
        return false;
    std::string_view prefix = pattern.substr(0, pattern.size() - 1);
    if (identifier.size() <= prefix.size())
        return false;
    if (to_upper(identifier.substr(0, prefix.size())) != to_upper(prefix))
        return false;
    auto rest = identifier.substr(prefix.size());
    return std::all_of(rest.begin(), rest.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

AssessmentDocument parse_assessment(std::string_view text) {
    json root = parse_json_text(text);
    expect_object(root, "document");
    reject_unknown_keys(root, "document", {"pms", "modules", "autonomy", "analyzer_config"});

    AssessmentDocument doc;
    doc.pms = parse_pms(require_key(root, "document", "pms"));

    const json& modules = require_key(root, "document", "modules");
    if (!modules.is_array())
        throw SchemaError("modules: expected an array");
    std::size_t i = 0;
    for (const auto& entry : modules)
        doc.modules.push_back(parse_module(entry, "modules[" + std::to_string(i++) + "]"));

    doc.autonomy = parse_autonomy(require_key(root, "document", "autonomy"));

    if (auto it = root.find("analyzer_config"); it != root.end())
        doc.analyzer_config = parse_config(*it, "analyzer_config");
    else
        doc.analyzer_config = AnalyzerConfig::defaults();
    return doc;
}

ValidationReport validate_assessment(const AssessmentDocument& doc) {
    ValidationReport report;
    auto& v = report.violations;

    if (trim(doc.pms.name).empty())
        v.push_back({"pms.name", "must be nonempty"});
    if (trim(doc.pms.version).empty())
        v.push_back({"pms.version", "must be nonempty"});

    if (doc.modules.empty())
        v.push_back({"modules", "at least one module is required"});

    std::map<std::string, int> name_counts;
    for (std::size_t i = 0; i < doc.modules.size(); ++i) {
        const auto& module = doc.modules[i];
        const std::string path = "modules[" + std::to_string(i) + "]";
        name_counts[module.name] += 1;
        if (!(module.weight > 0.0)) {
            std::ostringstream msg;
            msg << "weight must be > 0, got " << module.weight;
            v.push_back({path + ".weight", msg.str()});
        }
        check_range(v, path + ".portability", module.portability, 0.0, 3.0);
        check_range(v, path + ".scalability", module.scalability, 0.0, 3.0);
        if (const auto* manual = std::get_if<ManualComplexity>(&module.complexity)) {
            check_range(v, path + ".complexity.readability", manual->inputs.readability, 1.0, 3.0);
            if (manual->inputs.mccabe < 1)
                v.push_back({path + ".complexity.mccabe", "must be >= 1"});
            if (manual->inputs.fan_in < 0)
                v.push_back({path + ".complexity.fan_in", "must be >= 0"});
            if (manual->inputs.fan_out < 0)
                v.push_back({path + ".complexity.fan_out", "must be >= 0"});
        } else if (const auto* blackbox = std::get_if<BlackBoxSpec>(&module.complexity)) {
            if (blackbox->inputs < 0)
                v.push_back({path + ".complexity.inputs", "must be >= 0"});
            if (blackbox->outputs < 0)
                v.push_back({path + ".complexity.outputs", "must be >= 0"});
        }
    }
    for (const auto& [name, count] : name_counts) {
        if (count > 1)
            v.push_back({"modules", "module name \"" + name + "\" appears " +
                                        std::to_string(count) + " times, names must be unique"});
    }

    auto check_coverage = [&](const CoverageEvidence& evidence, const std::string& path) {
        if (const auto* counts = std::get_if<CoverageCounts>(&evidence)) {
            if (counts->automated < 0)
                v.push_back({path + ".auto", "must be >= 0"});
            if (counts->total < 1)
                v.push_back({path + ".total", "must be >= 1"});
            else if (counts->automated > counts->total)
                v.push_back({path, "auto must be <= total so the ratio stays within 100%"});
        } else {
            check_range(v, path + ".percent", std::get<CoveragePercent>(evidence).value, 0.0, 100.0);
        }
    };
    check_coverage(doc.autonomy.operator_independence, "autonomy.operator_independence");
    check_coverage(doc.autonomy.self_preservation, "autonomy.self_preservation");
    check_range(v, "autonomy.strategy.percent", doc.autonomy.strategy.percent, 0.0, 100.0);
    check_range(v, "autonomy.coordination.percent", doc.autonomy.coordination.percent, 0.0, 100.0);

    for (std::size_t i = 0; i < doc.analyzer_config.constant_patterns.size(); ++i) {
        const auto& pattern = doc.analyzer_config.constant_patterns[i];
        if (!valid_constant_pattern(pattern))
            v.push_back({"analyzer_config.constant_patterns[" + std::to_string(i) + "]",
                         "pattern must be a literal identifier prefix followed by '#', got \"" +
                             pattern + "\""});
    }
    return report;
}

AssessmentDocument load_assessment(std::string_view text) {
    AssessmentDocument doc = parse_assessment(text);
    ValidationReport report = validate_assessment(doc);
    if (!report.valid()) {
        const auto& first = report.violations.front();
        throw RangeError(first.path, first.message);
    }
    return doc;
}

std::string serialize_assessment(const AssessmentDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

AnalyzerConfig load_analyzer_config(std::string_view text) {
    return parse_config(parse_json_text(text), "analyzer_config");
}

} // namespace pmsmetrics
