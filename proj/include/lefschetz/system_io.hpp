#pragma once

// System file format (UTF-8, LF or CRLF):
//
//   # comment, anywhere
//   vars: x, y, z          optional header; default x1..xn inferred from the
//   f1: x^2 - 2*y*z        number of generator lines
//   f2: y^2 - 2*x*z
//   f3: z^2 - 2*x*y
//
// Generator lines are `name: expression`; names are echoed in reports.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lefschetz {

struct SystemText {
    std::vector<std::string> vars;  // filled with x1..xn when no header present
    std::vector<std::pair<std::string, std::string>> entries;  // (name, expression)
    bool vars_were_declared = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

inline SystemText parse_system_text(const std::string& content) {
    SystemText sys;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        const std::size_t nl = content.find('\n', start);
        std::string line = content.substr(start, nl == std::string::npos ? nl : nl - start);
        start = nl == std::string::npos ? content.size() + 1 : nl + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, 1, "expected 'name: expression' or 'vars: ...'");
        const std::string key = detail::trim(line.substr(0, colon));
        const std::string value = detail::trim(line.substr(colon + 1));

        if (key == "vars") {
            if (sys.vars_were_declared)
                throw ParseError(line_no, 1, "duplicate vars header");
            if (!sys.entries.empty())
                throw ParseError(line_no, 1, "vars header must precede the generator lines");
            sys.vars = detail::split_csv(value);
            if (sys.vars.empty()) throw ParseError(line_no, 1, "empty vars header");
            for (const auto& v : sys.vars)
                if (!detail::valid_identifier(v))
                    throw ParseError(line_no, 1, "bad variable name '" + v + "'");
            sys.vars_were_declared = true;
            continue;
        }

        if (!detail::valid_identifier(key))
            throw ParseError(line_no, 1, "bad generator name '" + key + "'");
        if (value.empty()) throw ParseError(line_no, 1, "empty expression for '" + key + "'");
        sys.entries.emplace_back(key, value);
    }

    if (sys.entries.empty()) throw Error("system file contains no generator lines");
    if (!sys.vars_were_declared)
        for (std::size_t i = 1; i <= sys.entries.size(); ++i)
            sys.vars.push_back("x" + std::to_string(i));
    return sys;
}

}  // namespace lefschetz
