#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace jetvpa {

// Reports are built as order-preserving JSON; the structured output mode
// is its serialization and the text mode is a line renderer over the
// same tree, so both modes present identical numbers.
using Report = nlohmann::ordered_json;

std::string render_text(const Report& report);

// FNV-1a 64-bit digest of the raw input, as "fnv1a64:<hex>".
std::string input_digest(std::string_view bytes);

}  // namespace jetvpa
