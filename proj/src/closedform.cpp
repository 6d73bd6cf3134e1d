#include "syt/closedform.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "syt/errors.hpp"

namespace syt {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::dp: return "dp";
        case Method::genfun: return "genfun";
        case Method::closed: return "closed";
        case Method::tworow: return "tworow";
        case Method::dft: return "dft";
        case Method::oracle: return "oracle";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    for (Method m : {Method::dp, Method::genfun, Method::closed, Method::tworow,
                     Method::dft, Method::oracle})
        if (method_name(m) == name) return m;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Int factorial(unsigned long n) {
    // deque keeps element references stable while the cache grows
    static std::deque<Int> cache{Int(1)};
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    while (cache.size() <= n)
        cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    return cache[n];
}

ExactCount count_closed(const Partition& shape, std::size_t r) {
    const auto mu = StaircaseVector::mu(shape, r).entries();
    const long n = shape.size();

    Int numerator = factorial(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j)
            numerator *= Int(mu[i] - mu[j]);

    Int denominator = 1;
    for (long m : mu) denominator *= factorial(static_cast<unsigned long>(m));

    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw InternalNonInteger("shifted multinomial did not divide exactly for shape " +
                                 shape.to_string());
    return {numerator / denominator, Method::closed};
}

ExactCount count_two_row(long k, long ell) {
    if (ell < 0 || k < ell)
        throw NotAPartition("two-row shape requires k >= l >= 0");
    const auto n = static_cast<unsigned long>(k + ell);
    Int value = binomial(n, static_cast<unsigned long>(k)) -
                binomial(n, static_cast<unsigned long>(k + 1));
    return {std::move(value), Method::tworow};
}

} // namespace syt
