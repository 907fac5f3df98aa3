#include "almansi/rational.hpp"

#include <stdexcept>

namespace almansi {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace almansi
