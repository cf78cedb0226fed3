#pragma once

#include <stdexcept>
#include <string>

namespace spacefill {

enum class ErrorCode {
    ConfigNotFound,
    ConfigParse,
    ConfigInvalid,
    InvalidArgument,
    DimensionMismatch,
    SimulationDiverged,
    SteadyStateDiverged,
    SteadyStateNotConverged,
    ObjectiveNotFinite,
    Io,
};

// Machine-greppable code, stable across releases. The CLI prints
// "<code_name>: <detail>" on stderr and maps the code to an exit status
// (config/usage errors -> 1, numerical failures -> 2).
const char* error_code_name(ErrorCode code);
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }
    const char* code_name() const { return error_code_name(code_); }
    int exit_code() const { return error_exit_code(code_); }

  private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace spacefill
