#pragma once

#include <string>
#include <vector>

namespace spellfix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitTransport = 4;

int run(int argc, char** argv);

// argv[0] is supplied.
int run(const std::vector<std::string>& args);

}  // namespace spellfix::cli
