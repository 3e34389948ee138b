#include "svt/numeric.hpp"

#include <ios>

#include <boost/multiprecision/mpfr.hpp>

namespace svt {

Real to_real(const BigInt& value) {
  Real out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

Real to_real(const Rational& value) {
  Real out;
  mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real log_abs(const BigInt& value) {
  if (value == 0) throw UsageError("log of zero");
  return log(abs(to_real(value)));
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string format_real(const Real& value, int significant) {
  if (value == 0) return "0";
  const Real magnitude = abs(value);
  const long exponent = static_cast<long>(floor(log10(magnitude)));
  const long decimals = static_cast<long>(significant) - 1 - exponent;
  if (decimals <= 0) {
    // Whole number of digits; Boost treats a fixed precision of 0 as "all".
    BigInt rounded;
    mpfr_get_z(rounded.get_mpz_t(), value.backend().data(), MPFR_RNDN);
    return rounded.get_str();
  }
  return value.str(static_cast<std::streamsize>(decimals), std::ios_base::fixed);
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace svt
