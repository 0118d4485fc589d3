#pragma once

#include <stdexcept>
#include <string>

#include "shrink/scenario.hpp"

namespace shrink {

class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedScenario {
    Scenario scenario;
    Mode mode = Mode::theorem1;
};

/// Parses a sectioned key = value scenario document. Unknown sections or keys
/// are rejected; all numeric parameters must be finite; radii positive.
ParsedScenario parse_scenario_text(const std::string& text,
                                   const std::string& origin = "<string>");
ParsedScenario parse_scenario_file(const std::string& path);

}  // namespace shrink
