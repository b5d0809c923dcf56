#pragma once

// JSON density-matrix files:
//   {"dimA": 2, "dimB": 2, "re": [[...], ...], "im": [[...], ...]}
// Row-major, subsystem A as the slow index.

#include <filesystem>
#include <string>

#include "isospec/linalg.hpp"

namespace isospec {

/// The document is not valid JSON or lacks a required field of the right type.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Throws FormatError for malformed documents and InvalidStateError for
/// matrices that break a density-matrix invariant (including shape).
BipartiteState parse_state_json(const std::string& text, double tol = kDefaultTol);
BipartiteState read_state_file(const std::filesystem::path& path, double tol = kDefaultTol);

std::string state_to_json(const BipartiteState& s);
void write_state_file(const std::filesystem::path& path, const BipartiteState& s);

}  // namespace isospec
