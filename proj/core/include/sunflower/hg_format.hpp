#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sunflower/errors.hpp"
#include "sunflower/hypergraph.hpp"

namespace sunflower {

// Text format (".hg"):
//   n r m
//   <m lines of r strictly increasing ids>
// Blank lines and lines starting with '#' are ignored. For r = 0 the only
// possible edge is the empty set, so no edge lines follow and m is 0 or 1.

enum class ParseErrorKind {
    malformed_header,
    malformed_edge,
    wrong_arity,
    not_increasing,
    id_out_of_range,
    duplicate_edge,
    edge_count_mismatch,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public InvalidArgument {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);
    [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace sunflower
