#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qseries {

// Abstract syntax for the q-series expression language. Trees are immutable
// and freely shareable.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        Integer,     // literal, arbitrary precision
        Monomial,    // the variable q
        Symbol,      // named series: X, Y, R, Rcal, Phi, phi_m, u_k, udag_k, U_k, alpha..delta
        Pochhammer,  // (t1,...,tk; q^b) with each t = +/- q^a
        Add, Sub, Mul, Div,
        Pow,         // integer exponent in k; negative exponents invert
        Neg,
        Substitute,  // q -> q^k
        Dissect      // [[r]]%m with r in `k`, m in `m`
    };

    Kind kind = Kind::Integer;
    mpz_class value{};     // Integer
    std::string symbol{};  // Symbol
    ProductSpec product{}; // Pochhammer
    ExprPtr a{}, b{};      // operands
    long k = 0;            // Pow exponent / Substitute power / Dissect residue
    long m = 0;            // Dissect modulus
};

// Parses expression text into an AST.
//
//   expr     = term { ("+"|"-") term }
//   term     = unary { ("*"|"/") unary }
//   unary    = { "-" } power
//   power    = postfix [ "^" integer ]
//   postfix  = atom { "[[" integer "]]" "%" integer | "@(" "q" "->" "q" ["^" integer] ")" }
//   atom     = integer | "q" | symbol | "(" expr ")" | pochhammer
//
// Throws SyntaxError (with a 0-based byte position) or UnknownSymbol; never
// crashes on arbitrary input.
ExprPtr parse(std::string_view text);

// Evaluates bottom-up to a series exact through q^order. Division and
// negative powers require unit series (NonUnitDivision / NonUnitConstantTerm);
// dissection indices outside [0, m) raise DissectionIndexOutOfRange.
TruncatedSeries evaluate(const ExprPtr& e, long order);

// Convenience: evaluate(parse(text), order).
TruncatedSeries evaluate(std::string_view text, long order);

} // namespace qseries
