#pragma once

#include <string>

#include "linaut/json_io.hpp"

#ifndef LINAUT_FIXTURE_DIR
#error "LINAUT_FIXTURE_DIR must be defined by the build"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(LINAUT_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
    return linaut::read_file(fixture_path(name));
}

inline linaut::LinearAutomaton fixture_automaton(const std::string& name) {
    return linaut::parse_automaton(fixture_text(name));
}

} // namespace testsupport
