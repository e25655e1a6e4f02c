#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>

#include "zf/graph.hpp"

namespace zf {

/// One line of a graph6 corpus. Malformed lines become error entries so a
/// single bad record never aborts the stream.
struct CorpusEntry {
    std::size_t index = 0;          // 0-based position among corpus lines
    std::string line;               // original text (header stripped)
    std::optional<Graph> graph;     // absent on parse failure
    std::string error;              // diagnostic when graph is absent
    std::size_t error_offset = 0;   // byte offset of the failure

    bool ok() const { return graph.has_value(); }
};

/// Lazy line-by-line reader. Blank lines are skipped; an optional
/// ">>graph6<<" header on the first line is tolerated. Throws IoError if the
/// file cannot be opened.
class CorpusReader {
public:
    explicit CorpusReader(const std::string& path);

    /// Next entry in file order, or nullopt at end of file.
    std::optional<CorpusEntry> next();

private:
    std::ifstream in_;
    std::size_t index_ = 0;
    bool first_line_ = true;
};

}  // namespace zf
