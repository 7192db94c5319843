#pragma once

// Finitely supported permutations of the positive integers.
//
// A Permutation stores its one-line word pi(1),...,pi(n) with trailing fixed
// points trimmed, so equal permutations compare equal regardless of the
// S_n they were built in. Composition is (sigma * pi)(i) = sigma(pi(i)):
// left multiplication by s_i swaps the values i and i+1, right
// multiplication by t_{a,b} swaps the positions a and b.

#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

class Permutation {
public:
    using Word = std::vector<int>;

    Permutation() = default;

    // Throws argument_error unless word is a permutation of {1,...,n}.
    explicit Permutation(Word word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v])
                throw argument_error("not a permutation word");
            seen[v] = true;
        }
        trim();
    }

    static Permutation identity() { return {}; }

    static Permutation simple(int i) {
        if (i < 1) throw argument_error("simple transposition index must be positive");
        return transposition(i, i + 1);
    }

    static Permutation transposition(int a, int b) {
        if (a < 1 || a >= b) throw argument_error("transposition needs 1 <= a < b");
        Word w(b);
        for (int k = 0; k < b; ++k) w[k] = k + 1;
        std::swap(w[a - 1], w[b - 1]);
        return Permutation(std::move(w));
    }

    static Permutation longest(int n) {
        Word w(std::max(n, 0));
        for (int k = 0; k < n; ++k) w[k] = n - k;
        return Permutation(std::move(w));
    }

    // Smallest n with pi in S_n; zero for the identity.
    int size() const { return static_cast<int>(word_.size()); }
    const Word& word() const { return word_; }
    bool is_identity() const { return word_.empty(); }

    int operator()(int i) const {
        return (i >= 1 && i <= size()) ? word_[i - 1] : i;
    }

    Permutation inverse() const {
        Word w(word_.size());
        for (int i = 1; i <= size(); ++i) w[word_[i - 1] - 1] = i;
        return Permutation(std::move(w), trusted{});
    }

    friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
        int n = std::max(lhs.size(), rhs.size());
        Word w(n);
        for (int i = 1; i <= n; ++i) w[i - 1] = lhs(rhs(i));
        return Permutation(std::move(w), trusted{});
    }

    // s_i * pi: swaps the values i and i+1.
    Permutation left_simple(int i) const { return simple(i) * *this; }
    // pi * t_{a,b}: swaps the entries in positions a and b.
    Permutation times_transposition(int a, int b) const { return *this * transposition(a, b); }

    int length() const {
        int inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (word_[i] > word_[j]) ++inv;
        return inv;
    }

    bool is_left_descent(int i) const {
        if (i < 1) return false;
        Permutation inv = inverse();
        return inv(i) > inv(i + 1);
    }

    bool is_right_descent(int i) const { return i >= 1 && (*this)(i) > (*this)(i + 1); }

    std::set<int> left_descents() const {
        std::set<int> out;
        Permutation inv = inverse();
        for (int i = 1; i < size(); ++i)
            if (inv(i) > inv(i + 1)) out.insert(i);
        return out;
    }

    // True iff pi * t_{a,b} covers pi in Bruhat order.
    bool is_bruhat_cover(int a, int b) const {
        if (a < 1 || a >= b) throw argument_error("is_bruhat_cover needs 1 <= a < b");
        int lo = (*this)(a), hi = (*this)(b);
        if (lo > hi) return false;
        for (int c = a + 1; c < b; ++c) {
            int v = (*this)(c);
            if (v > lo && v < hi) return false;
        }
        return true;
    }

    // Views pi inside S_n; the data is unchanged because words are trimmed.
    Permutation embed(int n) const {
        if (n < size()) throw argument_error("embedding target smaller than support");
        return *this;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
        return os.str();
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // Accepts "2,1,5,4,3", "2 1 5 4 3" or, when every entry is a single
    // digit, the compact "21543".
    static Permutation parse(std::string_view text) {
        Word w;
        std::string cleaned(text);
        bool separated = cleaned.find_first_of(", \t") != std::string::npos;
        if (!separated) {
            for (char c : cleaned) {
                if (c < '0' || c > '9') throw argument_error("bad permutation text: " + cleaned);
                w.push_back(c - '0');
            }
            return Permutation(std::move(w));
        }
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream is(cleaned);
        std::string tok;
        while (is >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw argument_error("bad permutation entry: " + tok);
            }
            if (used != tok.size()) throw argument_error("bad permutation entry: " + tok);
            w.push_back(v);
        }
        return Permutation(std::move(w));
    }

    // Every element of S_n, in lexicographic order of one-line words.
    static std::vector<Permutation> all(int n) {
        Word w(std::max(n, 0));
        for (int k = 0; k < n; ++k) w[k] = k + 1;
        std::vector<Permutation> out;
        do {
            out.push_back(Permutation(w));
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }

private:
    struct trusted {};
    Permutation(Word word, trusted) : word_(std::move(word)) { trim(); }

    void trim() {
        while (!word_.empty() && word_.back() == static_cast<int>(word_.size())) word_.pop_back();
    }

    Word word_;
};

/// Left and right index sets of Monk's rule for (pi, alpha).
struct MonkCovers {
    std::vector<int> left;  // s < alpha with pi t_{s,alpha} covering pi
    std::vector<int> right; // l > alpha with pi t_{alpha,l} covering pi
};

inline MonkCovers monk_covers(const Permutation& pi, int alpha) {
    if (alpha < 1) throw argument_error("alpha must be positive");
    MonkCovers out;
    for (int s = 1; s < alpha; ++s)
        if (pi.is_bruhat_cover(s, alpha)) out.left.push_back(s);
    // No cover can have l beyond max(support, alpha) + 1.
    int bound = std::max(pi.size(), alpha) + 1;
    for (int l = alpha + 1; l <= bound; ++l)
        if (pi.is_bruhat_cover(alpha, l)) out.right.push_back(l);
    return out;
}

namespace detail {

inline void reduced_words_into(const Permutation& pi,
                               std::map<Permutation, std::vector<std::vector<int>>>& memo) {
    if (memo.count(pi)) return;
    std::vector<std::vector<int>> words;
    if (pi.is_identity()) {
        words.emplace_back();
    } else {
        for (int j = 1; j < pi.size(); ++j) {
            if (!pi.is_right_descent(j)) continue;
            Permutation shorter = pi * Permutation::simple(j);
            reduced_words_into(shorter, memo);
            for (const auto& w : memo.at(shorter)) {
                auto ext = w;
                ext.push_back(j);
                words.push_back(std::move(ext));
            }
        }
    }
    memo.emplace(pi, std::move(words));
}

} // namespace detail

/// All (a_1,...,a_l) with s_{a_1} * ... * s_{a_l} = pi and l = length(pi).
inline std::set<std::vector<int>> reduced_words(const Permutation& pi) {
    std::map<Permutation, std::vector<std::vector<int>>> memo;
    detail::reduced_words_into(pi, memo);
    const auto& words = memo.at(pi);
    return {words.begin(), words.end()};
}

inline std::vector<int> some_reduced_word(Permutation pi) {
    std::vector<int> rev;
    while (!pi.is_identity()) {
        int j = 1;
        while (!pi.is_right_descent(j)) ++j;
        rev.push_back(j);
        pi = pi * Permutation::simple(j);
    }
    return {rev.rbegin(), rev.rend()};
}

inline Permutation word_product(const std::vector<int>& word) {
    Permutation p;
    for (int a : word) p = p * Permutation::simple(a);
    return p;
}

} // namespace schubert
