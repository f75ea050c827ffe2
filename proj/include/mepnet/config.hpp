#pragma once

// INI-style experiment configuration.
//
//      [section]
//      key = value     ; or # comments
//
// See configs/paper_fig3.ini for every recognized key.

#include "mepnet/experiment.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace mepnet
{

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Starts from ExperimentConfig defaults; every message names the key and line.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

}  // namespace mepnet
