#include "podq/bfile.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "podq/partition.hpp"

namespace podq {

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string index_tok;
        std::string value_tok;
        std::string extra;
        if (!(fields >> index_tok)) continue;  // blank
        if (!(fields >> value_tok)) throw ParseError("expected 'index value', got '" + line + "'", lineno);
        if (fields >> extra) throw ParseError("trailing field '" + extra + "'", lineno);
        if (!is_integer_token(index_tok)) throw ParseError("bad index '" + index_tok + "'", lineno);
        if (!is_integer_token(value_tok)) throw ParseError("bad value '" + value_tok + "'", lineno);
        if (value_tok[0] == '+') value_tok.erase(0, 1);
        BFileEntry e;
        try {
            e.index = std::stoll(index_tok);
        } catch (const std::out_of_range&) {
            throw ParseError("index '" + index_tok + "' out of range", lineno);
        }
        e.value = Integer(value_tok, 10);
        e.line = lineno;
        out.entries.push_back(std::move(e));
    }
    return out;
}

BFile load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open b-file '" + path.string() + "'");
    return parse_bfile(in);
}

}  // namespace podq
