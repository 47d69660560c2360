#pragma once

#include "stieltjes/fractions.hpp"
#include "stieltjes/laguerre.hpp"
#include "stieltjes/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace stieltjes::cli {

/// Malformed job input. position names the offending place: a byte offset
/// for JSON syntax errors, a JSON pointer or an item number otherwise.
class JobError : public std::runtime_error {
public:
  JobError(const std::string& message, std::string position)
      : std::runtime_error(message), position_(std::move(position)) {}
  const std::string& position() const { return position_; }

private:
  std::string position_;
};

struct InlineMoments {
  MomentSequence moments;
};

struct LaguerreInput {
  Rational alpha;
  std::size_t count = 10;
};

struct SFractionInput {
  SFraction fraction;
  /// Number of moments to expand; defaults to 2 n_N.
  std::optional<std::size_t> length;
};

using JobInput = std::variant<InlineMoments, LaguerreInput, SFractionInput>;

enum class Format { Json, Text, Csv };

struct JobOptions {
  std::optional<std::size_t> N;
  std::optional<std::size_t> j;
  std::optional<std::string> parity;  ///< "even" | "odd"
  std::optional<std::string> kind;    ///< "diagonal" | "subdiagonal"
  std::optional<Tau> tau;
  std::optional<std::vector<Rational>> points;
  std::optional<Format> format;
  bool emit = false;
  bool from_fraction = false;
  bool floats = false;
};

struct JobSpec {
  std::string command;
  std::optional<JobInput> input;
  JobOptions options;
};

/// Parses a JobSpec document. Accepted keys: exactly one of "moments",
/// "laguerre", "s_fraction" (with optional "length"), plus optional
/// "command" and "options". Anything else is rejected.
JobSpec parse_job_json(const std::string& text);

Rational parse_rational_at(const std::string& text, const std::string& position);
/// Comma-separated rationals, e.g. "1,1/2,-3".
std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what);
/// "NUM_COEFFS/DEN_COEFFS" with comma-separated coefficient lists in
/// increasing degree, or the words "zero" / "infinity". Plain lists take
/// integer coefficients ("-1/0,1" is -1/z); bracket the lists to use
/// rational coefficients ("[1/2]/[0,1]").
Tau parse_tau(const std::string& text);
Format parse_format(const std::string& text);

/// Moments described by the input.
MomentSequence resolve_moments(const JobInput& in);
/// S-fraction given directly, or computed as far as the data allows.
SFraction resolve_fraction(const JobInput& in);

}  // namespace stieltjes::cli
