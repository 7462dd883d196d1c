#include "supenum/codefile.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace supenum {

namespace {

struct Token {
    std::string text;
    std::size_t line, column;
};

// tokenized line with '#' comments stripped
std::vector<Token> tokenize_line(const std::string& raw, std::size_t line_no) {
    std::vector<Token> out;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::size_t i = 0; i < line.size();) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    return out;
}

unsigned parse_unsigned(const Token& t, const char* what) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line,
                         t.column);
    unsigned long v = 0;
    try {
        v = std::stoul(t.text);
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + " out of range: '" + t.text + "'", t.line, t.column);
    }
    if (v > 1u << 30) throw ParseError(std::string(what) + " out of range", t.line, t.column);
    return static_cast<unsigned>(v);
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
    std::vector<std::vector<Token>> lines;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokenize_line(raw, line_no);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    if (lines.empty()) throw ParseError("missing 'field' header", 1, 1);

    // header: field p m [c_0 .. c_m]
    std::size_t cursor = 0;
    const auto& header = lines[cursor++];
    if (header[0].text != "field")
        throw ParseError("expected 'field' header", header[0].line, header[0].column);
    if (header.size() < 3)
        throw ParseError("field header needs p and m", header[0].line, header[0].column);
    unsigned p = parse_unsigned(header[1], "characteristic p");
    unsigned m = parse_unsigned(header[2], "degree m");
    std::vector<unsigned> modulus;
    for (std::size_t i = 3; i < header.size(); ++i)
        modulus.push_back(parse_unsigned(header[i], "modulus coefficient"));
    if (m > 1 && !modulus.empty() && modulus.size() != m + 1)
        throw ParseError("modulus needs m+1 coefficients (c_0..c_m)", header[0].line,
                         header[0].column);
    if (m <= 1 && !modulus.empty())
        throw ParseError("prime fields take no modulus", header[3].line, header[3].column);

    FieldPtr field;
    try {
        field = modulus.empty() ? Field::make(p, m) : Field::make(p, m, modulus);
    } catch (const Error&) {
        throw;  // domain errors (non-prime, reducible, too large) keep their type
    }

    // optional: length n
    std::optional<std::size_t> length;
    if (cursor < lines.size() && lines[cursor][0].text == "length") {
        const auto& l = lines[cursor];
        if (l.size() != 2) throw ParseError("length line takes one value", l[0].line, l[0].column);
        length = parse_unsigned(l[1], "length n");
        if (*length < 1) throw ParseError("length must be >= 1", l[1].line, l[1].column);
        ++cursor;
    }

    // generator rows
    std::vector<std::vector<unsigned>> rows;
    for (; cursor < lines.size(); ++cursor) {
        const auto& toks = lines[cursor];
        std::vector<unsigned> row;
        row.reserve(toks.size());
        for (const auto& t : toks) {
            unsigned v = parse_unsigned(t, "element index");
            if (v >= field->order())
                throw ParseError("element index " + t.text + " is not below q = " +
                                     std::to_string(field->order()),
                                 t.line, t.column);
            row.push_back(v);
        }
        if (length && row.size() != *length)
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(*length),
                             toks[0].line, toks[0].column);
        if (!length && !rows.empty() && row.size() != rows[0].size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows[0].size()),
                             toks[0].line, toks[0].column);
        rows.push_back(std::move(row));
    }

    if (rows.empty() && !length)
        throw ParseError("zero-row file needs an explicit 'length' line", line_no ? line_no : 1, 1);

    std::size_t n = length ? *length : rows[0].size();
    Matrix gen(field, rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            gen.set_idx(r, c, static_cast<std::uint8_t>(rows[r][c]));
    return {field, std::move(gen)};
}

CodeFile parse_code_file_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open code file: " + path);
    return parse_code_file(in);
}

std::string emit_code_file(const Matrix& generator) {
    std::ostringstream os;
    const Field& f = *generator.field();
    os << "field " << f.characteristic() << " " << f.degree();
    for (unsigned c : f.modulus()) os << " " << c;
    os << "\n";
    os << "length " << generator.cols() << "\n";
    for (std::size_t r = 0; r < generator.rows(); ++r) {
        for (std::size_t c = 0; c < generator.cols(); ++c)
            os << (c ? " " : "") << unsigned(generator.idx(r, c));
        os << "\n";
    }
    return os.str();
}

std::string emit_code_file(const LinearCode& code) {
    return emit_code_file(code.generator());
}

}  // namespace supenum
