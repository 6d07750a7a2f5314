#include "mockgauss/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mockgauss {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown config key '" + where + key + "'");
    }
}

const json& require_object(const json& j, const std::string& field) {
    if (!j.is_object()) throw ConfigError("config field '" + field + "' must be an object");
    return j;
}

std::string get_string(const json& j, const std::string& field) {
    if (!j.is_string()) throw ConfigError("config field '" + field + "' must be a string");
    return j.get<std::string>();
}

double get_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError("config field '" + field + "' must be a number");
    return j.get<double>();
}

std::int64_t get_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ConfigError("config field '" + field + "' must be an integer");
    return j.get<std::int64_t>();
}

std::uint64_t get_uint(const json& j, const std::string& field) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw ConfigError("config field '" + field + "' must be a non-negative integer");
    return j.get<std::uint64_t>();
}

int get_small_int(const json& j, const std::string& field) {
    const std::int64_t v = get_int(j, field);
    if (v < -1'000'000 || v > 1'000'000) throw ConfigError("config field '" + field + "' is out of range");
    return static_cast<int>(v);
}

template <class T, class Get>
std::vector<T> get_array(const json& j, const std::string& field, Get get) {
    if (!j.is_array()) throw ConfigError("config field '" + field + "' must be an array");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

void parse_group(const json& j, ExperimentConfig& config) {
    require_object(j, "group");
    reject_unknown(j, {"family", "n"}, "group.");
    if (!j.contains("family")) throw ConfigError("config field 'group.family' is required");
    const std::string family = get_string(j["family"], "group.family");
    config.group_family = family;
    if (!j.contains("n")) {
        // Validate the family name alone; sizes come from n_list.
        if (family != "U" && family != "Sp" && family != "SO" && family != "Unitary" && family != "Symplectic" &&
            family != "SpecialOrthogonal")
            throw ConfigError("config field 'group.family': unknown family '" + family + "'");
        return;
    }
    const int n = get_small_int(j["n"], "group.n");
    try {
        config.group = GroupLabel::parse(family, n);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config field 'group': ") + e.what());
    }
}

void parse_function(const json& j, ExperimentConfig& config) {
    require_object(j, "function");
    reject_unknown(j, {"family", "delta", "scale", "amplitude"}, "function.");
    FunctionConfig fn;
    if (!j.contains("family")) throw ConfigError("config field 'function.family' is required");
    if (!j.contains("delta")) throw ConfigError("config field 'function.delta' is required");
    fn.family = get_string(j["family"], "function.family");
    fn.delta = get_number(j["delta"], "function.delta");
    if (j.contains("scale")) fn.scale = get_number(j["scale"], "function.scale");
    if (j.contains("amplitude")) fn.amplitude = get_number(j["amplitude"], "function.amplitude");
    try {
        (void)BandLimitedFunction::parse(fn.family, fn.delta, fn.amplitude);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config field 'function': ") + e.what());
    }
    if (fn.scale && !(*fn.scale > 0.0)) throw ConfigError("config field 'function.scale' must be > 0");
    config.function = fn;
}

}  // namespace

ExperimentConfig parse_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    reject_unknown(doc,
                   {"experiment", "group", "function", "m_max", "samples", "seed", "output", "format", "order", "k",
                    "profile", "deltas", "n_list", "bins", "sampler"},
                   "");

    ExperimentConfig config;
    if (doc.contains("experiment")) config.experiment = get_string(doc["experiment"], "experiment");
    if (doc.contains("group")) parse_group(doc["group"], config);
    if (doc.contains("function")) parse_function(doc["function"], config);
    if (doc.contains("m_max")) {
        config.m_max = get_small_int(doc["m_max"], "m_max");
        if (config.m_max < 1 || config.m_max > 10) throw ConfigError("config field 'm_max' must be in 1..10");
    }
    if (doc.contains("samples")) config.samples = get_uint(doc["samples"], "samples");
    if (doc.contains("seed")) config.seed = get_uint(doc["seed"], "seed");
    if (doc.contains("output")) config.output = get_string(doc["output"], "output");
    if (doc.contains("format")) {
        config.format = get_string(doc["format"], "format");
        if (config.format != "csv" && config.format != "json")
            throw ConfigError("config field 'format' must be \"csv\" or \"json\"");
    }
    if (doc.contains("order")) config.order = get_small_int(doc["order"], "order");
    if (doc.contains("k")) config.k = get_array<int>(doc["k"], "k", get_small_int);
    if (doc.contains("profile")) config.profile = get_array<int>(doc["profile"], "profile", get_small_int);
    if (doc.contains("deltas")) config.deltas = get_array<double>(doc["deltas"], "deltas", get_number);
    if (doc.contains("n_list")) config.n_list = get_array<int>(doc["n_list"], "n_list", get_small_int);
    if (doc.contains("bins")) {
        config.bins = get_small_int(doc["bins"], "bins");
        if (config.bins < 1) throw ConfigError("config field 'bins' must be positive");
    }
    if (doc.contains("sampler")) {
        config.sampler = get_string(doc["sampler"], "sampler");
        if (config.sampler != "dpp" && config.sampler != "qr")
            throw ConfigError("config field 'sampler' must be \"dpp\" or \"qr\"");
    }
    return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string config_to_json(const ExperimentConfig& config) {
    json doc = json::object();
    if (config.experiment) doc["experiment"] = *config.experiment;
    if (config.group) {
        doc["group"] = {{"family", std::string(config.group->family_tag())}, {"n", config.group->matrix_size()}};
    } else if (config.group_family) {
        doc["group"] = {{"family", *config.group_family}};
    }
    if (config.function) {
        json f = {{"family", config.function->family},
                  {"delta", config.function->delta},
                  {"amplitude", config.function->amplitude}};
        if (config.function->scale) f["scale"] = *config.function->scale;
        doc["function"] = f;
    }
    doc["m_max"] = config.m_max;
    doc["samples"] = config.samples;
    doc["seed"] = config.seed;
    if (config.output) doc["output"] = *config.output;
    doc["format"] = config.format;
    if (config.order) doc["order"] = *config.order;
    if (!config.k.empty()) doc["k"] = config.k;
    if (!config.profile.empty()) doc["profile"] = config.profile;
    if (!config.deltas.empty()) doc["deltas"] = config.deltas;
    if (!config.n_list.empty()) doc["n_list"] = config.n_list;
    doc["bins"] = config.bins;
    doc["sampler"] = config.sampler;
    return doc.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const ExperimentConfig& config) {
    ExperimentConfig hashed = config;
    hashed.output.reset();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(config_to_json(hashed))));
    return buf;
}

}  // namespace mockgauss
