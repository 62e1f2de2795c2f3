#pragma once

#include <gmpxx.h>

namespace graphmag {

using Integer = mpz_class;
using Rational = mpq_class;

}  // namespace graphmag
