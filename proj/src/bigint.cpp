#include "gct/bigint.hpp"

#include <stdexcept>

namespace gct {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is a running binomial
    }
    return r;
}

}
