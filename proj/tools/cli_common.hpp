#pragma once

#include <functional>
#include <string>

#include "json.hpp"

namespace cli {

// Runs body and maps library exceptions to exit codes: input and size-guard
// errors give 2, failed consistency checks give 1.
int guarded(const std::function<int()>& body);

// When the JSON goes to stdout, the text report is dropped so that stdout
// stays parseable. Call after argument parsing.
void quiet_text_if_json_stdout(const std::string& json_path);

// Writes JSON to path; "-" means stdout.
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace cli
