#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linaut/run.hpp"
#include "linaut/synth.hpp"

namespace linaut {

// Raised on malformed documents; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Strict parsers: unknown fields, duplicate entries and foreign letters are
// rejected. Serializers emit the canonical form (declaration-order states,
// transitions sorted by (from, head, letter), two-space indent, trailing
// newline); parse of a serialized document reproduces the value exactly.
LinearAutomaton parse_automaton(std::string_view text);
std::string serialize_automaton(const LinearAutomaton& a);

std::vector<Presu> parse_presus(std::string_view text);
std::string serialize_presus(const std::vector<Presu>& presus);

BCSpec parse_bc_spec(std::string_view text);
std::string serialize_bc_spec(const BCSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace linaut
