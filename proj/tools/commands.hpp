#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hvdc::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kValidation = 3,
    kResolution = 4,
    kDomain = 5,
};

// Bundled data root: $HVDC_DATA_DIR when set, else the build-time default.
std::filesystem::path data_directory();

// Runs one command line (args exclude the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvdc::cli
