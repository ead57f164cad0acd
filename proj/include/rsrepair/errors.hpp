#pragma once

#include <stdexcept>
#include <string>

namespace rsrepair {

/// An element was asked for coordinates in a basis that does not span it.
/// This is a meaningful outcome, not a bug: callers use it to witness
/// linear independence.
class NotInSpanError : public std::domain_error {
 public:
  explicit NotInSpanError(const std::string& what) : std::domain_error(what) {}
};

/// A repair scheme's precondition does not hold for the given code
/// (eligibility n-k >= |B|^(t-1), characteristic gate, degenerate t=1, ...).
class SchemeInapplicableError : public std::runtime_error {
 public:
  explicit SchemeInapplicableError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A protocol step was invoked out of order (e.g. collaboration before the
/// download phase, or the depth-two reply before recovery).
class SequencingError : public std::logic_error {
 public:
  explicit SequencingError(const std::string& what) : std::logic_error(what) {}
};

/// Over-determined interpolation input was inconsistent with any polynomial
/// of the expected degree; the input is not a codeword.
class CorruptionError : public std::runtime_error {
 public:
  explicit CorruptionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A repair step was started without the full set of required inputs
/// (missing surviving symbol or repair trace).
class IncompleteDownloadError : public std::runtime_error {
 public:
  explicit IncompleteDownloadError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rsrepair
