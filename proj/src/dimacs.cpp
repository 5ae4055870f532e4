#include "obddlab/dimacs.hpp"

#include "obddlab/errors.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace obddlab {
namespace {

std::vector<std::string_view> splitWords(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

long long toInt(std::string_view word, std::size_t line) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

} // namespace

Cnf parseDimacs(std::string_view text, Duplicates mode) {
    std::optional<std::pair<long long, long long>> header;
    std::vector<Clause> clauses;
    std::vector<long long> pending;
    std::size_t pendingLine = 0;
    std::size_t lineNo = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineNo;
        const auto words = splitWords(line);
        if (words.empty() || words[0][0] == 'c' || words[0] == "%")
            continue;
        if (words[0] == "p") {
            if (header)
                throw ParseError(lineNo, "second problem line");
            if (words.size() != 4 || words[1] != "cnf")
                throw ParseError(lineNo, "expected 'p cnf <vars> <clauses>'");
            header.emplace(toInt(words[2], lineNo), toInt(words[3], lineNo));
            if (header->first < 0 || header->second < 0)
                throw ParseError(lineNo, "negative count in problem line");
            continue;
        }
        if (!header)
            throw ParseError(lineNo, "clause before the problem line");
        for (const auto word : words) {
            const long long lit = toInt(word, lineNo);
            if (pending.empty())
                pendingLine = lineNo;
            if (lit != 0) {
                if (lit > header->first || -lit > header->first)
                    throw ParseError(lineNo, "literal " + std::to_string(lit) + " exceeds variable count");
                pending.push_back(lit);
                continue;
            }
            if (pending.size() != 2)
                throw WidthError(pendingLine, "clause has " + std::to_string(pending.size()) +
                                                  " literals, expected 2");
            if (pending[0] == -pending[1])
                throw TautologyError(pendingLine, "clause contains opposite literals");
            if (pending[0] == pending[1])
                throw WidthError(pendingLine, "clause repeats a literal");
            clauses.emplace_back(Literal::fromDimacs(static_cast<int>(pending[0])),
                                 Literal::fromDimacs(static_cast<int>(pending[1])));
            pending.clear();
        }
        if (pos > text.size())
            break;
    }
    if (!header)
        throw ParseError(lineNo, "missing problem line");
    if (!pending.empty())
        throw ParseError(pendingLine, "unterminated clause");
    if (static_cast<long long>(clauses.size()) != header->second)
        throw ParseError(lineNo, "problem line declares " + std::to_string(header->second) +
                                     " clauses, found " + std::to_string(clauses.size()));
    try {
        return Cnf(static_cast<std::size_t>(header->first), std::move(clauses), mode);
    } catch (const FormulaError& e) {
        throw ParseError(lineNo, e.what());
    }
}

std::string writeDimacs(const Cnf& f) {
    std::string out = "p cnf " + std::to_string(f.n()) + " " + std::to_string(f.size()) + "\n";
    for (const auto& c : f.clauses())
        out += std::to_string(c.first().toDimacs()) + " " + std::to_string(c.second().toDimacs()) + " 0\n";
    return out;
}

} // namespace obddlab
