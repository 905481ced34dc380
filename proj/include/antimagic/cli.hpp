#ifndef ANTIMAGIC_CLI_HPP
#define ANTIMAGIC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace antimagic::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kSuccess = 0;
inline constexpr int kNotAntimagic = 1;
inline constexpr int kProvenNonexistent = 2;
inline constexpr int kBudgetExhausted = 3;
inline constexpr int kUsage = 64;
inline constexpr int kBadInput = 65;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli

#endif  // ANTIMAGIC_CLI_HPP
