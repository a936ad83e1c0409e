#include "loopchar/modfield.hpp"

namespace loopchar {

namespace modarith {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        if (n % s == 0) return n == s;
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace modarith

ModEval::ModEval(std::uint64_t prime, std::uint64_t q_value, long order_guard, int max_vars)
    : prime_(prime), q_value_(q_value % prime), order_guard_(order_guard) {
    require(prime_ > (1ull << 30), ErrorCode::BadSpecialization, "prime must exceed 2^30");
    require(modarith::is_prime(prime_), ErrorCode::BadSpecialization, "modulus is not prime");
    std::uint64_t fact = 1;
    for (int k = 2; k <= max_vars; ++k) fact *= static_cast<std::uint64_t>(k);
    require(prime_ > fact, ErrorCode::BadSpecialization,
            "prime must exceed the factorial of the largest variable count");
    require(q_value_ != 0, ErrorCode::BadSpecialization, "q_value must be nonzero");
    std::uint64_t x = 1;
    for (long k = 1; k <= order_guard_; ++k) {
        x = modarith::mul(x, q_value_, prime_);
        require(x != 1, ErrorCode::BadSpecialization,
                "q_value has multiplicative order <= " + std::to_string(k) +
                    " (order guard " + std::to_string(order_guard_) + ")");
    }
}

Fp specialize(const Qq& a, const ModEval& m) {
    std::uint64_t den = a.den().eval_mod(m.q_value(), m.prime());
    require(den != 0, ErrorCode::BadSpecialization, "denominator vanishes at q_value");
    std::uint64_t num = a.num().eval_mod(m.q_value(), m.prime());
    return Fp(modarith::mul(num, modarith::inv(den, m.prime()), m.prime()), m.prime());
}

}  // namespace loopchar
