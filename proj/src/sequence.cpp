#include "pathcover/sequence.hpp"

#include <cctype>

#include "pathcover/error.hpp"

namespace pathcover {

std::string PathSequence::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values_[i]);
    }
    out += ')';
    return out;
}

PathSequence parse_sequence(std::string_view text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin < end && text[begin] == '(') {
        if (text[end - 1] != ')') throw ParseError("sequence: unbalanced parenthesis");
        ++begin;
        --end;
    }

    std::vector<int> values;
    std::size_t i = begin;
    while (i < end) {
        const char c = text[i];
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("sequence: unexpected character '") + c + "'");
        long value = 0;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw ParseError("sequence: value too large");
            ++i;
        }
        values.push_back(static_cast<int>(value));
    }
    if (values.empty()) throw ParseError("sequence: no values");
    return PathSequence(std::move(values));
}

}  // namespace pathcover
