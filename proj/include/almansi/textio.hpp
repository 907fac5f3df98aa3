#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "almansi/slice_poly.hpp"

namespace almansi {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line), column(column) {}
    int line;
    int column;
};

using ParsedPolynomial = std::variant<MvPolynomial, SlicePolynomial>;

// Grammar: poly := term (('+'|'-') term)*; term := [rational] factor*;
// factor := 'x'IDX['^'INT] | 'e'DIGITS | 'X'['^'INT]. Juxtaposition is
// product. Terms containing 'X' parse as slice polynomial coefficients;
// mixing 'X' with 'x_i' variables is rejected.
ParsedPolynomial parse_polynomial(const std::string& text, int n);

MvPolynomial parse_mv_polynomial(const std::string& text, int n);
SlicePolynomial parse_slice_polynomial(const std::string& text, int n);

// Canonical rendering: terms in descending graded lexicographic order of the
// exponent vector, ties broken by blade mask. parse(format(p)) == p.
std::string format_polynomial(const MvPolynomial& p);
std::string format_multivector(const Multivector& x);
std::string format_slice_polynomial(const SlicePolynomial& f);
std::string format_axial_polynomial(const AxialPolynomial& a);

// Structured document (JSON): carries any dimension, including n > 9.
std::string document_from_mv(const MvPolynomial& p);
std::string document_from_slice(const SlicePolynomial& f);
ParsedPolynomial parse_document(const std::string& json_text);

} // namespace almansi
