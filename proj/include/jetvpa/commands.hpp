#pragma once

#include <map>
#include <string>

#include "jetvpa/report.hpp"

namespace jetvpa {

// A single batch job: one verb, the raw input text (empty when the
// command takes no file), and the explicitly supplied options. Options
// from the file's [options] section fill in underneath; documented
// defaults apply last.
struct JobSpec {
    std::string command;  // jet | lisse | vpa-check | virasoro | affine
    std::string input_path;
    std::string input_text;
    std::map<std::string, std::string> options;
};

struct CommandResult {
    Report report;
    // 0 success, 1 negative verdict on a check command, 2 input error
    int exit_code = 0;
};

CommandResult run_command(const JobSpec& spec);

}  // namespace jetvpa
