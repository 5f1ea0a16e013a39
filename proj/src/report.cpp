#include "jetvpa/report.hpp"

namespace jetvpa {

namespace {

std::string scalar_text(const Report& node) {
    if (node.is_string()) return node.get<std::string>();
    return node.dump();
}

void render(const Report& node, int depth, std::string& out) {
    const std::string pad(2 * depth, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out += pad + key + ":\n";
                render(value, depth + 1, out);
            } else {
                out += pad + key + ": " + scalar_text(value) + "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                out += pad + "-\n";
                render(value, depth + 1, out);
            } else {
                out += pad + "- " + scalar_text(value) + "\n";
            }
        }
        if (node.empty()) out += pad + "(none)\n";
    } else {
        out += pad + scalar_text(node) + "\n";
    }
}

}  // namespace

std::string render_text(const Report& report) {
    std::string out;
    render(report, 0, out);
    return out;
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string digits(16, '0');
    for (int i = 15; i >= 0; --i) {
        digits[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    return "fnv1a64:" + digits;
}

}  // namespace jetvpa
