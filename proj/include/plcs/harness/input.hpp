#pragma once

// Loading sequences from the command line: inline strings, raw byte files
// and FASTA (first record only).

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "plcs/seqcore.hpp"

namespace plcs::harness {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path.string() + "'");
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw InputError("error while reading '" + path.string() + "'");
    }
    return data;
}

/*
 * Sequence of the first FASTA record: header lines start with '>', every
 * other line is concatenated with line breaks (and CR) removed. Content
 * before the first header is ignored.
 */
inline Sequence parse_fasta(std::string_view text) {
    Sequence seq;
    bool in_record = false;
    bool seen_record = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty() && line.front() == '>') {
            if (seen_record) {
                break;
            }
            seen_record = true;
            in_record = true;
            continue;
        }
        if (in_record) {
            seq.symbols.insert(seq.symbols.end(), line.begin(), line.end());
        }
    }
    if (!seen_record) {
        throw InputError("FASTA input contains no records");
    }
    return seq;
}

// Raw file contents minus one trailing line terminator.
inline Sequence parse_raw(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
    }
    return Sequence(text);
}

/*
 * An argument naming an existing file is read from disk (as FASTA when
 * `fasta` is set or the file starts with '>'); anything else is taken as
 * the sequence itself. With `fasta` set the argument must be a file.
 */
inline Sequence load_sequence(const std::string& arg, bool fasta) {
    std::error_code ec;
    const std::filesystem::path path(arg);
    const bool is_file = std::filesystem::is_regular_file(path, ec);
    if (!is_file) {
        if (fasta) {
            throw InputError("cannot read '" + arg + "'");
        }
        return Sequence(std::string_view(arg));
    }
    const std::string data = read_file(path);
    if (fasta || (!data.empty() && data.front() == '>')) {
        return parse_fasta(data);
    }
    return parse_raw(data);
}

} // namespace plcs::harness
