#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nqs {

// Shortest decimal text that round-trips to the same double ('.' separator,
// locale independent).
std::string format_real(double x);
std::string format_optional(const std::optional<double>& x);

// Minimal CSV builder: LF line endings, header always first, fields quoted
// only when they contain a separator, quote or newline.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& fields);
    const std::vector<std::string>& header() const { return header_; }
    std::string str() const { return out_.str(); }

private:
    void emit(const std::vector<std::string>& fields);
    std::vector<std::string> header_;
    std::ostringstream out_;
};

// Writes to a file, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace nqs
