#include "nqs/csv.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace nqs {

std::string format_real(double x)
{
    if (x == 0.0) x = 0.0;  // fold -0 so reruns cannot differ in sign of zero
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    if (res.ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& x)
{
    return x ? format_real(*x) : std::string();
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header))
{
    emit(header_);
}

void CsvWriter::row(const std::vector<std::string>& fields)
{
    if (fields.size() != header_.size())
        throw std::invalid_argument("CsvWriter: row has " + std::to_string(fields.size()) + " fields, header has " +
                                    std::to_string(header_.size()));
    emit(fields);
}

void CsvWriter::emit(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") == std::string::npos) {
            out_ << f;
            continue;
        }
        out_ << '"';
        for (char c : f) {
            if (c == '"') out_ << '"';
            out_ << c;
        }
        out_ << '"';
    }
    out_ << '\n';
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace nqs
