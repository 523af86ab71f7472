/**
 * @file literal.hpp
 * @brief Round-trippable text literals and JSON shapes for every value kind,
 *        plus the arithmetic expression evaluator used by the CLI.
 *
 * Grammar (whitespace-insensitive):
 *   rational   := '-'? digits ('/' digits)?
 *   element    := '{' tailspec (';' 'fix' p '->' v (',' p '->' v)*)? '}'
 *   tailspec   := rational | 'mod' m ':' r '->' rational (',' r '->' rational)*
 *   partition  := 'trivial' | 'mod' m ':' r '->' b (',' r '->' b)*
 *                                 (';' 'exc' p '->' b (',' p '->' b)*)?
 *   sequence   := 'seq' 'k' '=' k 'prefix' '[' (int (',' int)*)? ']' 'poly' '"' poly '"'
 *   polynomial := term (('+'|'-') term)*   with term := int | int? VAR ('^' exp)?
 *   expression := sum of products of (integer | element | parenthesized),
 *                 with unary minus; integers act as scalars.
 *
 * In an element literal the tailspec maps unit residues to rationals; primes
 * dividing the modulus take block 0's tail unless a fix overrides them.
 */
#ifndef PURERING_LITERAL_HPP
#define PURERING_LITERAL_HPP

#include <json.hpp>

#include <string>
#include <string_view>

#include "purering/element.hpp"
#include "purering/omega.hpp"
#include "purering/partition.hpp"
#include "purering/purity.hpp"
#include "purering/structure.hpp"

namespace purering {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line, int column);
    int line;
    int column;
};

Rat parse_rational(std::string_view text);
TailedElement parse_element(std::string_view text);
PrimePartition parse_partition(std::string_view text);
BoundedDenomSeq parse_sequence(std::string_view text);
IntPolynomial parse_polynomial(std::string_view text, char variable);
TailedElement parse_expression(std::string_view text);

std::string print_rational(const Rat& q);
std::string print_element(const TailedElement& x);
std::string print_partition(const PrimePartition& p);
std::string print_sequence(const BoundedDenomSeq& s);
std::string print_polynomial(const IntPolynomial& f, char variable);
std::string print_quotient(const QuotientElement& q);

nlohmann::ordered_json element_to_json(const TailedElement& x);
nlohmann::ordered_json quotient_to_json(const QuotientElement& q);
nlohmann::ordered_json sequence_to_json(const BoundedDenomSeq& s);
nlohmann::ordered_json polynomial_to_json(const IntPolynomial& f);

}  // namespace purering

#endif
