#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace raag {

// All user-facing failures carry a stable machine-readable code plus a human
// message. The CLI turns these into {"error": {"code": ..., "message": ...}}
// and a nonzero exit. Codes are part of the tool's interface; do not rename.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* unknown_vertex = "unknown_vertex";
inline constexpr const char* bad_graph = "bad_graph";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* constraint_violation = "constraint_violation";
inline constexpr const char* graph_mismatch = "graph_mismatch";
inline constexpr const char* cap_mismatch = "cap_mismatch";
inline constexpr const char* not_torelli = "not_torelli";
inline constexpr const char* not_in_gamma2 = "not_in_gamma2";
inline constexpr const char* missing_word = "missing_word";
inline constexpr const char* unsupported_generator = "unsupported_generator";
inline constexpr const char* not_maximal = "not_maximal";
inline constexpr const char* not_disconnected = "not_disconnected";
inline constexpr const char* not_a_component = "not_a_component";
inline constexpr const char* not_isolated = "not_isolated";
inline constexpr const char* zero_series = "zero_series";
inline constexpr const char* cap_exceeded = "cap_exceeded";
inline constexpr const char* bad_argument = "bad_argument";
inline constexpr const char* io_error = "io_error";
}  // namespace errc

}  // namespace raag
