#pragma once

#include "permutation.hpp"
#include "polynomial.hpp"

#include <vector>

namespace schubert {

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}, the Schubert polynomial of the longest element of S_n.
inline Polynomial staircase_monomial(int n) {
    std::vector<unsigned> e;
    for (int k = 1; k < n; ++k) e.push_back(static_cast<unsigned>(n - k));
    return Polynomial::monomial(Monomial(std::move(e)));
}

/// Applies d_{w_1} d_{w_2} ... d_{w_k} to f (rightmost operator first).
inline Polynomial apply_divided_differences(Polynomial f, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

/**
 * Schubert polynomial of pi computed inside S_n (n >= support of pi), by
 * walking down from the staircase monomial along a reduced word of
 * pi^{-1} w_0. The choice of word only affects the route, never the result.
 */
inline Polynomial schubert_dd(const Permutation& pi, int n, const std::vector<int>& word_of_complement) {
    if (n < pi.size()) throw argument_error("ambient size smaller than support");
    return apply_divided_differences(staircase_monomial(n), word_of_complement);
}

inline Polynomial schubert_dd(const Permutation& pi, int n) {
    if (n < pi.size()) throw argument_error("ambient size smaller than support");
    Permutation complement = pi.inverse() * Permutation::longest(n);
    return schubert_dd(pi, n, some_reduced_word(complement));
}

inline Polynomial schubert_dd(const Permutation& pi) { return schubert_dd(pi, std::max(pi.size(), 1)); }

} // namespace schubert
