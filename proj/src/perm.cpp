#include "sergeev/perm.hpp"

#include <algorithm>
#include <numeric>

namespace sergeev {

Permutation::Permutation(int n) {
    if (n < 0) throw SizeMismatch("negative permutation size");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw SizeMismatch("one-line form is not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw IndexOutOfRange("transposition (" + std::to_string(a) + " " + std::to_string(b) + ") in size " + std::to_string(n));
    Permutation w(n);
    std::swap(w.img_[a - 1], w.img_[b - 1]);
    return w;
}

Permutation Permutation::adjacent(int n, int a) {
    if (a < 1 || a >= n) throw IndexOutOfRange("adjacent transposition index " + std::to_string(a));
    return transposition(n, a, a + 1);
}

Permutation Permutation::compose(const Permutation& o) const {
    if (n() != o.n()) throw SizeMismatch("composing permutations of different sizes");
    Permutation r(n());
    for (int i = 1; i <= n(); ++i) r.img_[i - 1] = img_[o.img_[i - 1] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(n());
    for (int i = 1; i <= n(); ++i) r.img_[img_[i - 1] - 1] = i;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int count = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

std::vector<int> Permutation::lex_min_reduced_word() const {
    // Greedy: always strip the smallest left descent.  A left descent of w is
    // a with w^{-1}(a) > w^{-1}(a+1); prepending it shortens the word, and
    // taking the smallest at each step yields the lex-least reduced word.
    std::vector<int> word;
    Permutation w = *this;
    Permutation winv = w.inverse();
    while (!w.is_identity()) {
        int a = 0;
        for (int c = 1; c < n(); ++c) {
            if (winv.img_[c - 1] > winv.img_[c]) {
                a = c;
                break;
            }
        }
        if (a == 0) throw InternalError("non-identity permutation with no descent");
        word.push_back(a);
        w = Permutation::adjacent(n(), a).compose(w);
        winv = w.inverse();
    }
    return word;
}

std::uint64_t Permutation::packed() const {
    if (n() > 12) throw IndexOutOfRange("packed permutation limited to n <= 12");
    std::uint64_t code = 0;
    for (int j = 1; j <= n(); ++j) code |= static_cast<std::uint64_t>(img_[j - 1]) << (4 * (12 - j));
    return code;
}

Permutation Permutation::unpacked(int n, std::uint64_t code) {
    if (n > 12) throw IndexOutOfRange("packed permutation limited to n <= 12");
    std::vector<int> images(n);
    for (int j = 1; j <= n; ++j) images[j - 1] = static_cast<int>((code >> (4 * (12 - j))) & 0xF);
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int i = 0; i < n(); ++i) {
        if (i) out += ",";
        out += std::to_string(img_[i]);
    }
    return out + "]";
}

} // namespace sergeev
