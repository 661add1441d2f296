#ifndef SLOCC_IO_HPP
#define SLOCC_IO_HPP

#include "slocc/canon.hpp"

#include <json.hpp>

#include <string>

namespace slocc {

using Json = nlohmann::ordered_json;

// Exact scalars are written as strings ("3/2", "1-2i").  On input a literal
// is such a string, a JSON integer, or {"re": .., "im": ..}.
Json scalar_json(const Scalar& s);

enum class FileKind { State, Canon };
// a canon file carries a "format" member
FileKind detect_kind(const std::string& text, const std::string& origin);

// {"L": .., "N": .., "entries": L x N x N}
TensorState read_state(const std::string& text, const std::string& origin = "<input>");
std::string write_state(const TensorState& psi);

// {"format": "slocc-canon/1", "N": .., "blocks": [..]}; a block is
// {"lambda", "size", "coeffs"}, a coupled equal-eigenvalue run is
// {"lambda", "sizes", "grid"} with grid[k][l] of length sizes[l]
CanonicalForm read_canon(const std::string& text, const std::string& origin = "<input>");
Json canon_json(const CanonicalForm& cf);
// canonical text: normalized block order, fixed member order, trailing newline
std::string write_canon(const CanonicalForm& cf);

std::string read_file(const std::string& path);

} // namespace slocc

#endif
