#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "mockgauss/experiments.hpp"

namespace mockgauss {

/// Malformed configuration document; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strict parse of a JSON run configuration. Accepted keys:
///
///   experiment, group {family, n}, function {family, delta, scale, amplitude},
///   m_max, samples, seed, output, format,
///   order, k, profile, deltas, n_list, bins, sampler
///
/// Any other key is rejected.
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Canonical JSON rendering (sorted keys, defaults filled in).
std::string config_to_json(const ExperimentConfig& config);

/// 64-bit FNV-1a of the canonical JSON without the output path, as 16 hex
/// digits.
std::string config_hash(const ExperimentConfig& config);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace mockgauss
