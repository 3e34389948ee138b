#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace svt {

using BigInt = mpz_class;
using Rational = mpq_class;

// 60 significant decimal digits; MPFR's exponent range makes 8^300 and
// friends representable without log-space tricks.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<60>,
    boost::multiprecision::et_off>;

/// Caller broke a precondition (bad dimension, out-of-range degree, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic produced something that cannot be right, e.g. a
/// non-integral term from an integer recurrence.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough terms to attempt the requested computation.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Real to_real(const BigInt& value);
Real to_real(const Rational& value);

/// log(|value|) for a nonzero integer of any size.
Real log_abs(const BigInt& value);

std::string to_decimal(const BigInt& value);

/// Fixed-point rendering with `significant` significant digits; never uses
/// exponent notation.
std::string format_real(const Real& value, int significant = 20);

std::size_t bit_length(const BigInt& value);

}  // namespace svt
