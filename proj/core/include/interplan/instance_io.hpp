#pragma once

#include "interplan/instance.hpp"

#include <filesystem>
#include <string>

namespace interplan {

// Parses the instance file format. Shape problems (missing keys, wrong
// types, malformed money strings) throw std::runtime_error; domain rules
// are left to validate_instance.
RawInstance instance_from_json(const std::string& text);

RawInstance load_instance_file(const std::filesystem::path& path);

// Canonical serialization; parsing it back yields an equivalent instance.
std::string instance_to_json(const ProblemInstance& instance);

} // namespace interplan
