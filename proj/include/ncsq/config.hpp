#pragma once

#include <filesystem>
#include <string_view>

#include "ncsq/params.hpp"

namespace ncsq {

// Applies a flat "name = value" parameter file on top of `base`. Recognized
// names: theta, eta, mass, omega, hbar, lambda, mu. Blank lines and lines
// starting with '#' are ignored. Throws DomainError on unknown names,
// duplicate names or malformed values.
ParamInputs apply_config_text(ParamInputs base, std::string_view text);

// Throws IoError if the file cannot be read.
ParamInputs apply_config_file(ParamInputs base,
                              const std::filesystem::path& path);

}  // namespace ncsq
