#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qpw {

using Int = mpz_class;
using Rat = mpq_class;

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact rational from "p" or "p/q" text. Rejects anything else.
Rat parse_rat(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);
std::string int_str(const Int& z);
Int parse_int(const std::string& text);

}  // namespace qpw
