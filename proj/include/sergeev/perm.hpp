#ifndef SERGEEV_PERM_HPP
#define SERGEEV_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sergeev/errors.hpp"

namespace sergeev {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(int n);
    explicit Permutation(std::vector<int> images);

    /// The transposition (a b); requires 1 <= a, b <= n, a != b.
    static Permutation transposition(int n, int a, int b);
    /// The adjacent transposition s_a = (a, a+1); requires 1 <= a < n.
    static Permutation adjacent(int n, int a);

    int n() const { return static_cast<int>(img_.size()); }
    /// Image of i; 1-based.
    int operator()(int i) const {
        if (i < 1 || i > n()) throw IndexOutOfRange("permutation applied to " + std::to_string(i));
        return img_[i - 1];
    }

    /// Left-action composition: (a.compose(b))(i) = a(b(i)).
    Permutation compose(const Permutation& o) const;
    Permutation inverse() const;

    bool is_identity() const;
    /// Coxeter length = number of inversions.
    int length() const;
    /// Lexicographically smallest reduced word (letters a meaning s_a).
    std::vector<int> lex_min_reduced_word() const;

    const std::vector<int>& one_line() const { return img_; }

    /// One-line form packed 4 bits per image, position 1 in the top nibble,
    /// so packed values compare like one-line words.  Requires n <= 12.
    std::uint64_t packed() const;
    static Permutation unpacked(int n, std::uint64_t code);

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string to_string() const;

private:
    std::vector<int> img_;
};

} // namespace sergeev

#endif
