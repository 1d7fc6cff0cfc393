#include "latvis/base_set_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace latvis {

namespace {

std::int64_t parse_int(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("integer out of 64-bit range: '" + std::string(token) + "'", line);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("expected a decimal integer, got '" + std::string(token) + "'", line);
    return value;
}

}  // namespace

std::vector<LatticePoint> parse_base_set(std::istream& in) {
    std::vector<LatticePoint> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError("expected two integers 'u v', found " + std::to_string(tokens.size()) + " fields",
                             lineno);
        points.push_back({parse_int(tokens[0], lineno), parse_int(tokens[1], lineno)});
    }
    if (points.empty()) throw ParseError("base set contains no points", 0);
    return points;
}

std::vector<LatticePoint> read_base_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open base set file '" + path + "'", 0);
    return parse_base_set(in);
}

std::vector<LatticePoint> parse_inline_base_set(std::string_view text) {
    std::string compact;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    std::vector<LatticePoint> points;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        const std::size_t item = points.size() + 1;
        if (compact[pos] != '(') throw ParseError("inline point " + std::to_string(item) + ": expected '('", 0);
        const std::size_t comma = compact.find(',', pos);
        const std::size_t close = compact.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw ParseError("inline point " + std::to_string(item) + ": expected '(u,v)'", 0);
        const std::string_view body(compact);
        points.push_back({parse_int(body.substr(pos + 1, comma - pos - 1), 0),
                          parse_int(body.substr(comma + 1, close - comma - 1), 0)});
        pos = close + 1;
        if (pos < compact.size()) {
            if (compact[pos] != ';')
                throw ParseError("inline point " + std::to_string(item) + ": expected ';' separator", 0);
            ++pos;
        }
    }
    if (points.empty()) throw ParseError("base set contains no points", 0);
    return points;
}

std::vector<LatticePoint> load_base_set(const std::string& arg) {
    if (arg.find('(') != std::string::npos) return parse_inline_base_set(arg);
    return read_base_set_file(arg);
}

}  // namespace latvis
