#pragma once

#include <gmpxx.h>

#include <string>

namespace motcalc {

// All multiplicities, ranks and group orders are exact arbitrary-precision
// integers. Tower products overflow 64 bits quickly, so machine integers are
// reserved for indices and loop counters only.
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer integer_pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace motcalc
