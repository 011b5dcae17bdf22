#pragma once

#include "pg/plane_graph.hpp"
#include "pg/rooted.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pg {

class FormatError : public std::runtime_error {
public:
    enum class Kind { Syntax, TruncatedStream, BadHeader };
    FormatError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct RotationDocument {
    PlaneGraph graph;
    std::optional<std::vector<int>> outer; // from an `outer:` line
};

// Text format, 1-indexed:
//   pgraph v1
//   n 3
//   1: 2 3
//   2: 3 1
//   3: 1 2
//   outer: 1 2 3        (optional)
// '#' starts a comment. Parsing then serializing reproduces the document
// byte-for-byte modulo comments and surplus whitespace.
RotationDocument parse_rotation(const std::string& text);
std::string write_rotation(const PlaneGraph& g, const std::vector<int>* outer = nullptr);

// planar_code: optional ">>planar_code<<" header, then per graph one byte n,
// then for each vertex its clockwise neighbors as 1-based bytes, 0-terminated.
std::vector<PlaneGraph> read_planar_code(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> write_planar_code(const std::vector<PlaneGraph>& graphs);

std::string read_file_text(const std::string& path);
std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace pg
