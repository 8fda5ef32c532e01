#include "sunflower/hg_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace sunflower {

namespace {

std::string describe(ParseErrorKind kind, int line, const std::string& detail) {
    std::string msg = "line " + std::to_string(line) + ": " + std::string(to_string(kind));
    if (!detail.empty()) msg += ": " + detail;
    return msg;
}

/// Splits on ASCII whitespace and parses base-10 integers; nullopt on junk.
std::optional<std::vector<long long>> integers(std::string_view line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
        out.push_back(value);
        i = j;
    }
    return out;
}

bool skippable(std::string_view line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::malformed_header: return "malformed header";
        case ParseErrorKind::malformed_edge: return "malformed edge line";
        case ParseErrorKind::wrong_arity: return "wrong edge arity";
        case ParseErrorKind::not_increasing: return "edge ids not strictly increasing";
        case ParseErrorKind::id_out_of_range: return "vertex id out of range";
        case ParseErrorKind::duplicate_edge: return "duplicate edge";
        case ParseErrorKind::edge_count_mismatch: return "edge count mismatch";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : InvalidArgument(describe(kind, line, detail)), kind_(kind), line_(line) {}

Hypergraph parse_hypergraph(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    long long n = 0, r = 0, m = 0;
    std::vector<VertexSet> edges;
    std::vector<int> edge_lines;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (skippable(line)) {
            if (nl == text.size()) break;
            continue;
        }
        auto nums = integers(line);
        if (!have_header) {
            if (!nums || nums->size() != 3) {
                throw ParseError(ParseErrorKind::malformed_header, line_no,
                                 "expected three integers \"n r m\"");
            }
            n = (*nums)[0];
            r = (*nums)[1];
            m = (*nums)[2];
            if (n < 0 || r < 0 || m < 0 || n > (1 << 24)) {
                throw ParseError(ParseErrorKind::malformed_header, line_no,
                                 "need n >= 0, r >= 0, m >= 0");
            }
            if (r == 0 && m > 1) {
                throw ParseError(ParseErrorKind::malformed_header, line_no,
                                 "a 0-uniform hypergraph has at most one edge");
            }
            have_header = true;
        } else {
            if (!nums) throw ParseError(ParseErrorKind::malformed_edge, line_no, "non-integer token");
            if (nums->size() != static_cast<std::size_t>(r)) {
                throw ParseError(ParseErrorKind::wrong_arity, line_no,
                                 "expected " + std::to_string(r) + " ids, got " +
                                     std::to_string(nums->size()));
            }
            std::vector<Vertex> ids;
            ids.reserve(nums->size());
            for (std::size_t i = 0; i < nums->size(); ++i) {
                long long v = (*nums)[i];
                if (v < 1 || v > n) {
                    throw ParseError(ParseErrorKind::id_out_of_range, line_no,
                                     "id " + std::to_string(v) + " not in 1.." + std::to_string(n));
                }
                if (i > 0 && v <= ids.back()) {
                    throw ParseError(ParseErrorKind::not_increasing, line_no, "");
                }
                ids.push_back(static_cast<Vertex>(v));
            }
            edges.push_back(VertexSet::from_sorted(std::move(ids)));
            edge_lines.push_back(line_no);
        }
        if (nl == text.size()) break;
    }
    if (!have_header) throw ParseError(ParseErrorKind::malformed_header, line_no, "missing header");
    if (r == 0) {
        // the empty edge has no line of its own
        edges.assign(static_cast<std::size_t>(m), VertexSet{});
    } else if (edges.size() != static_cast<std::size_t>(m)) {
        throw ParseError(ParseErrorKind::edge_count_mismatch, line_no,
                         "header promises " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    }

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            throw ParseError(ParseErrorKind::duplicate_edge, edge_lines[order[i]],
                             edges[order[i]].to_string());
        }
    }
    std::vector<VertexSet> sorted;
    sorted.reserve(edges.size());
    for (auto i : order) sorted.push_back(std::move(edges[i]));
    return make_canonical(static_cast<int>(n), static_cast<int>(r), std::move(sorted));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n() << ' ' << h.r() << ' ' << h.edge_count() << '\n';
    if (h.r() == 0) return os.str();
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
    return os.str();
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << serialize_hypergraph(h);
}

}  // namespace sunflower
