#include "mpm/io.hpp"

#include "mpm/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mpm {

std::vector<TextLine> tokenize(std::string_view text) {
    std::vector<TextLine> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (std::size_t c = line.find(':'); c != std::string::npos; c = line.find(':', c + 3)) line.replace(c, 1, " : ");
        std::istringstream in(line);
        TextLine tl{number, {}};
        for (std::string tok; in >> tok;) tl.tokens.push_back(tok);
        if (!tl.tokens.empty()) out.push_back(std::move(tl));
        if (end == text.size()) break;
    }
    return out;
}

Rational parse_number(const std::string& token, std::size_t line) {
    try {
        return parse_rational(token);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
    }
}

namespace {

unsigned long parse_count(const std::string& token, std::size_t line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
        throw ParseError("expected a non-negative integer, got '" + token + "'", line);
    return std::stoul(token);
}

const TextLine& expect(const std::vector<TextLine>& lines, std::size_t& at, const char* keyword,
                       std::size_t arity) {
    if (at >= lines.size())
        throw ParseError(std::string("unexpected end of document, expected '") + keyword + "'",
                         lines.empty() ? 0 : lines.back().number);
    const TextLine& l = lines[at++];
    if (l.tokens[0] != keyword || l.tokens.size() != arity + 1)
        throw ParseError(std::string("expected '") + keyword + "' with " + std::to_string(arity) + " argument(s)",
                         l.number);
    return l;
}

Grade parse_grade(const std::vector<std::string>& toks, std::size_t first, std::size_t n, std::size_t line) {
    if (n == 1) return Grade(parse_number(toks[first], line));
    return Grade(parse_number(toks[first], line), parse_number(toks[first + 1], line));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    auto lines = tokenize(text);
    std::size_t at = 0;
    const TextLine& header = expect(lines, at, "fpm", 1);
    if (header.tokens[1] != "1") throw ParseError("unsupported fpm version " + header.tokens[1], header.number);

    std::uint32_t q = 2;
    if (at < lines.size() && lines[at].tokens[0] == "field") {
        const TextLine& l = expect(lines, at, "field", 1);
        q = static_cast<std::uint32_t>(parse_count(l.tokens[1], l.number));
        if (!is_prime(q)) throw ParseError("field characteristic " + l.tokens[1] + " is not prime", l.number);
    }
    const TextLine& pl = expect(lines, at, "params", 1);
    std::size_t n = parse_count(pl.tokens[1], pl.number);
    if (n != 1 && n != 2) throw ParseError("params must be 1 or 2", pl.number);
    PrimeField field(q);

    const TextLine& rl = expect(lines, at, "rows", 1);
    std::size_t r = parse_count(rl.tokens[1], rl.number);
    std::vector<Grade> rows;
    for (std::size_t i = 0; i < r; ++i) {
        if (at >= lines.size()) throw ParseError("missing row labels", rl.number);
        const TextLine& l = lines[at++];
        if (l.tokens.size() != n) throw ParseError("row label needs " + std::to_string(n) + " coordinate(s)", l.number);
        rows.push_back(parse_grade(l.tokens, 0, n, l.number));
    }

    const TextLine& cl = expect(lines, at, "cols", 1);
    std::size_t c = parse_count(cl.tokens[1], cl.number);
    std::vector<Grade> cols;
    std::vector<SparseColumn> columns;
    for (std::size_t j = 0; j < c; ++j) {
        if (at >= lines.size()) throw ParseError("missing columns", cl.number);
        const TextLine& l = lines[at++];
        const auto& t = l.tokens;
        if (t.size() < n + 1 || t[n] != ":")
            throw ParseError("column line must be '<grade> : <row> <coeff> ...'", l.number);
        if ((t.size() - n - 1) % 2 != 0) throw ParseError("row index without coefficient", l.number);
        Grade g = parse_grade(t, 0, n, l.number);
        std::vector<std::pair<std::uint32_t, long long>> raw;
        for (std::size_t k = n + 1; k < t.size(); k += 2) {
            auto row = parse_count(t[k], l.number);
            if (row >= r) throw ParseError("row index " + t[k] + " out of range", l.number);
            long long v;
            try {
                std::size_t used = 0;
                v = std::stoll(t[k + 1], &used);
                if (used != t[k + 1].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("coefficient '" + t[k + 1] + "' is not an integer", l.number);
            }
            if (!field.contains(v))
                throw ParseError("coefficient " + t[k + 1] + " outside F_" + std::to_string(q), l.number);
            raw.emplace_back(static_cast<std::uint32_t>(row), v);
        }
        std::sort(raw.begin(), raw.end());
        SparseColumn col;
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (k && raw[k].first == raw[k - 1].first) throw ParseError("repeated row index", l.number);
            if (raw[k].second == 0) continue;
            if (!(rows[raw[k].first] <= g))
                throw ParseError("label order violated: row " + std::to_string(raw[k].first) + " " +
                                     rows[raw[k].first].str() + " is not <= column label " + g.str(),
                                 l.number);
            col.push_back({raw[k].first, static_cast<Coeff>(raw[k].second)});
        }
        cols.push_back(std::move(g));
        columns.push_back(std::move(col));
    }
    if (at < lines.size()) throw ParseError("unexpected content after the last column", lines[at].number);
    return Presentation(field, n, std::move(rows), std::move(cols), std::move(columns));
}

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream out;
    auto grade = [&](const Grade& g) {
        for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << format_rational(g[i]);
    };
    out << "fpm 1\nfield " << p.field().q() << "\nparams " << p.n_params() << "\nrows " << p.rows() << "\n";
    for (const auto& g : p.row_labels()) {
        grade(g);
        out << "\n";
    }
    out << "cols " << p.cols() << "\n";
    for (std::size_t j = 0; j < p.cols(); ++j) {
        grade(p.col_labels()[j]);
        out << " :";
        for (const auto& e : p.column(j)) out << " " << e.row << " " << e.value;
        out << "\n";
    }
    return out.str();
}

Barcode parse_barcode(std::string_view text) {
    Barcode b;
    for (const auto& l : tokenize(text)) {
        if (l.tokens.size() != 2) throw ParseError("bar line must be '<birth> <death|inf>'", l.number);
        Rational birth = parse_number(l.tokens[0], l.number);
        const std::string& d = l.tokens[1];
        if (d == "inf" || d == "Inf" || d == "infinity") {
            b.push_back(essential_bar(birth));
            continue;
        }
        Rational death = parse_number(d, l.number);
        if (!(birth < death)) throw ParseError("bar must satisfy birth < death", l.number);
        b.push_back(finite_bar(birth, death));
    }
    return b;
}

std::string serialize_barcode(const Barcode& b) {
    std::string out;
    for (const auto& bar : b)
        out += format_rational(bar.birth) + " " + (bar.essential ? std::string("inf") : format_rational(bar.death)) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw DataError("cannot write '" + path + "'");
}

}  // namespace mpm
