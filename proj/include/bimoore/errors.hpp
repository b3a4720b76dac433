#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bimoore {

// Machine-readable failure categories. Every exception thrown by the library
// carries one of these so callers (and the CLI exit-code mapping) can react
// without parsing message text.
enum class Errc {
  unsupported_order,    // no construction exists for the requested size
  unsupported_residue,  // parameter violates a residue-class precondition
  too_small,
  too_large,
  not_regular,
  regular_case,          // degenerate r == s case of a biregular-only formula
  param_mismatch,        // graph does not match the stated parameters
  bad_multiplicity,
  bad_spectral_symmetry,
  not_applicable,
  needs_input,           // an external input file is required
  bad_input,
  parse_error,
  work_limit,            // configured search budget exhausted
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::unsupported_order: return "UNSUPPORTED_ORDER";
    case Errc::unsupported_residue: return "UNSUPPORTED_RESIDUE";
    case Errc::too_small: return "TOO_SMALL";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::not_regular: return "NOT_REGULAR";
    case Errc::regular_case: return "REGULAR_CASE";
    case Errc::param_mismatch: return "PARAM_MISMATCH";
    case Errc::bad_multiplicity: return "BAD_MULTIPLICITY";
    case Errc::bad_spectral_symmetry: return "BAD_SPECTRAL_SYMMETRY";
    case Errc::not_applicable: return "NOT_APPLICABLE";
    case Errc::needs_input: return "NEEDS_INPUT";
    case Errc::bad_input: return "BAD_INPUT";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::work_limit: return "WORK_LIMIT";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failure in an input stream; offset is the byte position of the first
// offending byte within the line or buffer being decoded.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(Errc::parse_error, msg + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bimoore
