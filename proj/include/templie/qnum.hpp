#pragma once

#include "templie/poly.hpp"

namespace templie {

// Modified q-number {m} as a polynomial in beta:
//   {0} = 0, {1} = 1, {m+1} = -beta*{m} - {m-1},
// extended to negative arguments by {-m} = -{m}.
Poly qnum(int m);

// {p}! = {1}{2}...{p}, with {0}! = 1.  Requires p >= 0.
Poly qnum_factorial(int p);

Int binomial(long n, long k);  // 0 outside 0 <= k <= n
Int catalan(int n);

}  // namespace templie
