#include "zf/corpus.hpp"

#include "zf/errors.hpp"
#include "zf/graph6.hpp"

namespace zf {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void strip_trailing_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

}  // namespace

CorpusReader::CorpusReader(const std::string& path) : in_(path) {
    if (!in_) throw IoError("cannot open corpus file '" + path + "'");
}

std::optional<CorpusEntry> CorpusReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        strip_trailing_cr(line);
        if (first_line_) {
            first_line_ = false;
            if (line.rfind(kHeader, 0) == 0) line.erase(0, kHeader.size());
        }
        if (line.empty()) continue;

        CorpusEntry entry;
        entry.index = index_++;
        entry.line = line;
        try {
            entry.graph = parse_graph6(line);
        } catch (const ParseError& e) {
            entry.error = e.what();
            entry.error_offset = e.offset();
        }
        return entry;
    }
    return std::nullopt;
}

}  // namespace zf
