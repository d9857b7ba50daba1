#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <evpoly/io.hpp>

namespace evpoly::cli {

using Json = nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,      // the input is mathematically rejected (witness attached)
  kSchema = 2,        // malformed document or violated precondition
  kResourceCap = 3,   // a configured cap would be exceeded
  kInconclusive = 4,  // a search ran out of limits; partial report attached
  kVerification = 5,  // an internal cross-check failed
};

/// Command-line values that take precedence over the document.
struct Overrides {
  std::optional<unsigned> box;
  std::optional<std::size_t> cap;
  std::optional<std::uint32_t> seed;
};

struct JobResult {
  Json document;
  int exit_code = kOk;
};

const std::vector<std::string>& commands();

/// Runs one job document. `command` (if nonempty) takes precedence over the
/// document's "command" field. Never throws; failures become documents.
JobResult run(const Json& job, const std::string& command = {}, const Overrides& overrides = {});

/// Parses text and runs it; a parse failure is a schema error.
JobResult run_text(const std::string& text, const std::string& command = {}, const Overrides& overrides = {});

/// Compact JSON with sorted keys and a trailing newline.
std::string render_canonical(const Json& doc);
/// Indented plain-text view for people.
std::string render_pretty(const Json& doc);

}  // namespace evpoly::cli
