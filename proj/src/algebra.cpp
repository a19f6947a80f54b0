#include "sergeev/algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "sergeev/errors.hpp"

namespace sergeev {

namespace {

// Dense accumulation works over the full 2^n·n! slot table; beyond this the
// ordered-map route takes over.
constexpr int kDenseMaxN = 6;

struct PermTables {
    std::vector<std::uint64_t> codes;  // sorted packed codes of Sym_n
    std::vector<std::uint16_t> comp;   // rank of perm_i ∘ perm_j at i*size+j
};

std::uint32_t code_rank(const std::vector<std::uint64_t>& codes, std::uint64_t code) {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) throw InternalError("permutation code missing from rank table");
    return static_cast<std::uint32_t>(it - codes.begin());
}

const PermTables& perm_tables(int n) {
    static std::mutex mu;
    static std::map<int, PermTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    PermTables t;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        t.codes.push_back(Permutation(img).packed());
    } while (std::next_permutation(img.begin(), img.end()));
    // next_permutation enumerates lexicographically, which matches packed order.
    const std::size_t sz = t.codes.size();
    std::vector<std::vector<int>> lines(sz);
    for (std::size_t i = 0; i < sz; ++i) lines[i] = Permutation::unpacked(n, t.codes[i]).one_line();
    t.comp.resize(sz * sz);
    std::vector<int> prod(n);
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            for (int k = 0; k < n; ++k) prod[k] = lines[i][lines[j][k] - 1];
            t.comp[i * sz + j] = static_cast<std::uint16_t>(code_rank(t.codes, Permutation(prod).packed()));
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// bitmap[p] is the single-bit image of bit p under the relabeling.
void fill_bitmaps(const Permutation& w, std::uint32_t* bitmap) {
    for (int j = 1; j <= w.n(); ++j) bitmap[j - 1] = 1u << (w(j) - 1);
}

// Relabeled masks plus the re-sorting parity, built by peeling the highest
// letter: appending its image to the shorter word adds one inversion per
// already-placed letter with a larger image.
void fill_pullback(const std::uint32_t* bitmap, int n, std::uint32_t* table, std::uint8_t* sign_odd) {
    table[0] = 0;
    sign_odd[0] = 0;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        int top = std::bit_width(m) - 1;
        std::uint32_t rest = m ^ (1u << top);
        std::uint32_t img = bitmap[top];
        table[m] = table[rest] | img;
        sign_odd[m] = static_cast<std::uint8_t>(
            sign_odd[rest] ^ (std::popcount(table[rest] & ~(img | (img - 1))) & 1));
    }
}

} // namespace

std::pair<int, std::uint32_t> mask_image(const Permutation& w, std::uint32_t mask) {
    std::uint32_t out = 0;
    int flips = 0;
    while (mask) {
        // ascending letters; each image flips once per larger image already placed
        std::uint32_t lsb = mask & (~mask + 1);
        std::uint32_t img = 1u << (w(std::countr_zero(lsb) + 1) - 1);
        flips += std::popcount(out & ~(img | (img - 1)));
        out |= img;
        mask ^= lsb;
    }
    return {(flips & 1) ? -1 : 1, out};
}

std::pair<int, std::uint32_t> clifford_merge(std::uint32_t a, std::uint32_t b) {
    // Each letter c_j of b walks left past the letters of a greater than j
    // (one sign per pass), then equal pairs collapse by c_j^2 = -1.
    int flips = std::popcount(a & b);
    std::uint32_t bb = b;
    while (bb) {
        std::uint32_t lsb = bb & (~bb + 1);
        flips += std::popcount(a >> (std::countr_zero(lsb) + 1));
        bb ^= lsb;
    }
    return {(flips & 1) ? -1 : 1, a ^ b};
}

int width64(long long v) {
    const std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    return u ? 64 - std::countl_zero(u) : 0;
}

int width128(__int128 v) {
    unsigned __int128 u = v < 0 ? ~static_cast<unsigned __int128>(v) + 1
                                : static_cast<unsigned __int128>(v);
    const std::uint64_t hi = static_cast<std::uint64_t>(u >> 64);
    if (hi) return 128 - std::countl_zero(hi);
    const std::uint64_t lo = static_cast<std::uint64_t>(u);
    return lo ? 64 - std::countl_zero(lo) : 0;
}

unsigned __int128 gcd128(unsigned __int128 x, unsigned __int128 y) {
    while (y) {
        const unsigned __int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

unsigned __int128 mag128(__int128 v) {
    return v < 0 ? ~static_cast<unsigned __int128>(v) + 1 : static_cast<unsigned __int128>(v);
}

// Exact fraction accumulator for the product kernel: an unreduced int128
// fraction (den > 0) with width guards, promoted to GMP once the guards
// trip. Promotion folds the fast-path value into `big`, which then holds
// the whole accumulated value.
struct LazyQ {
    __int128 num = 0;
    __int128 den = 1;
    std::unique_ptr<mpq_class> big;

    bool touched() const { return big != nullptr || num != 0; }

    void reduce_inplace() {
        if (num == 0) {
            den = 1;
            return;
        }
        const unsigned __int128 g = gcd128(mag128(num), static_cast<unsigned __int128>(den));
        if (g > 1) {
            num /= static_cast<__int128>(g);
            den /= static_cast<__int128>(g);
        }
    }

    void promote() {
        if (big) return;
        big = std::make_unique<mpq_class>(Rational::from_fraction128(num, den).to_mpq());
        num = 0;
        den = 1;
    }

    bool fits(__int128 pn, __int128 pd) const {
        const int wn = width128(num), wd = width128(den);
        const int wpn = width128(pn), wpd = width128(pd);
        return wn + wpd <= 125 && wpn + wd <= 125 && wd + wpd <= 126;
    }

    void add_fraction(__int128 pn, __int128 pd) {
        if (!big) {
            if (!fits(pn, pd)) {
                reduce_inplace();
                const unsigned __int128 g = gcd128(mag128(pn), static_cast<unsigned __int128>(pd));
                if (g > 1) {
                    pn /= static_cast<__int128>(g);
                    pd /= static_cast<__int128>(g);
                }
            }
            if (fits(pn, pd)) {
                num = num * pd + pn * den;
                den = den * pd;
                if (width128(num) > 96 || width128(den) > 96) reduce_inplace();
                return;
            }
            promote();
        }
        *big += Rational::from_fraction128(pn, pd).to_mpq();
    }

    void add_prod(const Rational& x, const Rational& y, long long f) {
        if (x.is_small() && y.is_small()) {
            const long long xn = x.small_num(), yn = y.small_num();
            if (xn == 0 || yn == 0) return;
            if (width64(xn) + width64(yn) + width64(f) <= 125) {
                add_fraction(static_cast<__int128>(xn) * yn * f,
                             static_cast<__int128>(x.small_den()) * y.small_den());
                return;
            }
        }
        if (x.is_zero() || y.is_zero()) return;
        promote();
        mpq_class p = x.to_mpq();
        p *= y.to_mpq();
        p *= static_cast<long>(f);
        *big += p;
    }

    Rational value() const {
        if (big) return Rational::from_mpq(*big);
        return Rational::from_fraction128(num, den);
    }
};

struct CellAcc {
    LazyQ re;
    LazyQ im;
};

// The kernel keeps one CellAcc per (word, radicand) pair; cap the table so
// degenerate coefficient fields fall back to the generic route.
constexpr std::size_t kMaxRadicalSlots = 16;
constexpr std::size_t kMaxCellAccs = 1u << 20;

AlgebraElement::AlgebraElement(int n) : n_(n) {
    if (n < 1 || n > 12) throw SizeMismatch("algebra rank must be between 1 and 12");
}

AlgebraElement AlgebraElement::one(int n) {
    return monomial(Permutation(n), 0, Scalar(Rational(1)));
}

AlgebraElement AlgebraElement::monomial(const Permutation& w, std::uint32_t mask, Scalar coeff) {
    AlgebraElement e(w.n());
    if (mask >= (1u << w.n())) throw IndexOutOfRange("Clifford mask wider than the rank");
    if (!coeff.is_zero()) e.terms_.emplace_back(BasisWord{w.packed(), mask}, std::move(coeff));
    return e;
}

Scalar AlgebraElement::coefficient(const Permutation& w, std::uint32_t mask) const {
    BasisWord key{w.packed(), mask};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& t, const BasisWord& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Scalar();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (n_ != o.n_) throw SizeMismatch("adding elements of different ranks");
    std::vector<std::pair<BasisWord, Scalar>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Scalar s = std::move(a->second);
            s.acc(b->second, 1);
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += -o;
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [bw, s] : r.terms_) s = -s;
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r(n_);
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [bw, c] : terms_) {
        Scalar prod = c * s;
        if (!prod.is_zero()) r.terms_.emplace_back(bw, std::move(prod));
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const { return multiply(*this, o); }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_) throw SizeMismatch("multiplying elements of different ranks");
    const int n = a.n_;
    if (n > kDenseMaxN) return multiply_reference(a, b);
    AlgebraElement out(n);
    if (a.terms_.empty() || b.terms_.empty()) return out;

    const PermTables& tables = perm_tables(n);
    const std::size_t nf = tables.codes.size();
    const std::uint32_t slots_per_perm = 1u << n;
    const std::size_t cells = nf * slots_per_perm;

    std::vector<std::uint32_t> arank(a.terms_.size());
    for (std::size_t i = 0; i < a.terms_.size(); ++i) arank[i] = code_rank(tables.codes, a.terms_[i].first.perm);

    std::vector<std::uint32_t> pulled(slots_per_perm);
    std::vector<std::uint8_t> pulled_odd(slots_per_perm);
    std::uint32_t bitmap[12];

    // Radicand closure of both coefficient sets under d*d' with the square
    // part removed; tiny in practice since only sqrt(sigma(sigma+1)) values
    // arise, so the flat (word, radicand) accumulation below applies.
    std::set<std::uint64_t> closure{1};
    for (const AlgebraElement* e : {&a, &b})
        for (const auto& [w, c] : e->terms_)
            for (const auto& t : c.terms()) closure.insert(t.d);
    for (bool grew = true; grew && closure.size() <= kMaxRadicalSlots;) {
        grew = false;
        const std::vector<std::uint64_t> cur(closure.begin(), closure.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                const std::uint64_t g = std::gcd(cur[i], cur[j]);
                if (closure.insert((cur[i] / g) * (cur[j] / g)).second) grew = true;
            }
    }

    if (closure.size() <= kMaxRadicalSlots && cells * closure.size() <= kMaxCellAccs) {
        const std::vector<std::uint64_t> slots(closure.begin(), closure.end());
        const std::size_t k = slots.size();
        auto slot_of = [&](std::uint64_t d) {
            return static_cast<std::uint8_t>(
                std::lower_bound(slots.begin(), slots.end(), d) - slots.begin());
        };
        struct SlotMul {
            std::uint8_t slot;
            long long g;
        };
        std::vector<SlotMul> mul(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const std::uint64_t g = std::gcd(slots[i], slots[j]);
                mul[i * k + j] = {slot_of((slots[i] / g) * (slots[j] / g)),
                                  static_cast<long long>(g)};
            }

        // slot ids of every coefficient term of a, flattened
        std::vector<std::uint32_t> aoff(a.terms_.size() + 1, 0);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            aoff[i + 1] = aoff[i] + static_cast<std::uint32_t>(a.terms_[i].second.terms().size());
        std::vector<std::uint8_t> aslot(aoff.back());
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& at = a.terms_[i].second.terms();
            for (std::size_t p = 0; p < at.size(); ++p) aslot[aoff[i] + p] = slot_of(at[p].d);
        }

        std::vector<CellAcc> scratch(cells * k);
        std::uint8_t bslot[kMaxRadicalSlots];

        for (const auto& [bw2, c2] : b.terms_) {
            const std::uint32_t r2 = code_rank(tables.codes, bw2.perm);
            const Permutation w2inv = Permutation::unpacked(n, bw2.perm).inverse();
            fill_bitmaps(w2inv, bitmap);
            fill_pullback(bitmap, n, pulled.data(), pulled_odd.data());
            const auto& bt = c2.terms();
            for (std::size_t q = 0; q < bt.size(); ++q) bslot[q] = slot_of(bt[q].d);
            for (std::size_t i = 0; i < a.terms_.size(); ++i) {
                const auto& [bw1, c1] = a.terms_[i];
                const std::uint32_t r = tables.comp[arank[i] * nf + r2];
                auto [sign, m] = clifford_merge(pulled[bw1.mask], bw2.mask);
                if (pulled_odd[bw1.mask]) sign = -sign;
                CellAcc* cell = scratch.data() + std::size_t(r * slots_per_perm + m) * k;
                const auto& at = c1.terms();
                const std::uint8_t* as = aslot.data() + aoff[i];
                for (std::size_t p = 0; p < at.size(); ++p) {
                    const ScalarTerm& ta = at[p];
                    const SlotMul* row = mul.data() + std::size_t(as[p]) * k;
                    for (std::size_t q = 0; q < bt.size(); ++q) {
                        const ScalarTerm& tb = bt[q];
                        const SlotMul& sm = row[bslot[q]];
                        const long long f = sign < 0 ? -sm.g : sm.g;
                        CellAcc& acc = cell[sm.slot];
                        acc.re.add_prod(ta.re, tb.re, f);
                        acc.re.add_prod(ta.im, tb.im, -f);
                        acc.im.add_prod(ta.re, tb.im, f);
                        acc.im.add_prod(ta.im, tb.re, f);
                    }
                }
            }
        }

        std::vector<ScalarTerm> ct;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            const CellAcc* base = scratch.data() + cell * k;
            ct.clear();
            for (std::size_t s = 0; s < k; ++s) {
                if (!base[s].re.touched() && !base[s].im.touched()) continue;
                Rational re = base[s].re.value();
                Rational im = base[s].im.value();
                if (re.is_zero() && im.is_zero()) continue;
                ct.push_back({slots[s], std::move(re), std::move(im)});
            }
            if (ct.empty()) continue;
            out.terms_.emplace_back(BasisWord{tables.codes[cell / slots_per_perm],
                                              static_cast<std::uint32_t>(cell % slots_per_perm)},
                                    Scalar::from_sorted_terms(ct));
        }
        return out;
    }

    std::vector<Scalar> scratch(cells);

    for (const auto& [bw2, c2] : b.terms_) {
        const std::uint32_t r2 = code_rank(tables.codes, bw2.perm);
        const Permutation w2inv = Permutation::unpacked(n, bw2.perm).inverse();
        fill_bitmaps(w2inv, bitmap);
        fill_pullback(bitmap, n, pulled.data(), pulled_odd.data());
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& [bw1, c1] = a.terms_[i];
            const std::uint32_t r = tables.comp[arank[i] * nf + r2];
            auto [sign, m] = clifford_merge(pulled[bw1.mask], bw2.mask);
            if (pulled_odd[bw1.mask]) sign = -sign;
            scratch[r * slots_per_perm + m].acc_mul(c1, c2, sign);
        }
    }

    for (std::size_t slot = 0; slot < scratch.size(); ++slot) {
        if (scratch[slot].is_zero()) continue;
        out.terms_.emplace_back(
            BasisWord{tables.codes[slot / slots_per_perm], static_cast<std::uint32_t>(slot % slots_per_perm)},
            std::move(scratch[slot]));
    }
    return out;
}

AlgebraElement multiply_reference(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_) throw SizeMismatch("multiplying elements of different ranks");
    const int n = a.n_;
    AlgebraElement out(n);
    std::map<BasisWord, Scalar> acc;
    std::vector<std::uint32_t> pulled(1u << n);
    std::vector<std::uint8_t> pulled_odd(1u << n);
    std::uint32_t bitmap[12];
    for (const auto& [bw2, c2] : b.terms_) {
        const Permutation w2 = Permutation::unpacked(n, bw2.perm);
        const Permutation w2inv = w2.inverse();
        fill_bitmaps(w2inv, bitmap);
        fill_pullback(bitmap, n, pulled.data(), pulled_odd.data());
        for (const auto& [bw1, c1] : a.terms_) {
            const Permutation w = Permutation::unpacked(n, bw1.perm).compose(w2);
            auto [sign, m] = clifford_merge(pulled[bw1.mask], bw2.mask);
            if (pulled_odd[bw1.mask]) sign = -sign;
            acc[BasisWord{w.packed(), m}].acc_mul(c1, c2, sign);
        }
    }
    for (auto& [bw, s] : acc)
        if (!s.is_zero()) out.terms_.emplace_back(bw, std::move(s));
    return out;
}

AlgebraElement gen_s(int n, int a) {
    if (a < 1 || a >= n) throw IndexOutOfRange("s index " + std::to_string(a) + " for rank " + std::to_string(n));
    return AlgebraElement::monomial(Permutation::adjacent(n, a), 0, Scalar(Rational(1)));
}

AlgebraElement gen_c(int n, int a) {
    if (a < 1 || a > n) throw IndexOutOfRange("c index " + std::to_string(a) + " for rank " + std::to_string(n));
    return AlgebraElement::monomial(Permutation(n), 1u << (a - 1), Scalar(Rational(1)));
}

AlgebraElement gen_y(int n, int a) {
    if (a < 1 || a >= n) throw IndexOutOfRange("y index " + std::to_string(a) + " for rank " + std::to_string(n));
    Scalar half_rt2 = Scalar::radical(Rational(1, 2), 2); // 1/sqrt(2)
    return (gen_c(n, a + 1) - gen_c(n, a)).scaled(half_rt2);
}

AlgebraElement gen_t(int n, int a) { return gen_y(n, a) * gen_s(n, a); }

AlgebraElement gen_t_ab(int n, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > n || b > n)
        throw IndexOutOfRange("t_{ab} indices (" + std::to_string(a) + "," + std::to_string(b) + ")");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, AlgebraElement> cache;
    const auto key = std::make_tuple(n, a, b);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AlgebraElement result = AlgebraElement::zero(n);
    if (a > b) {
        result = -gen_t_ab(n, b, a);
    } else {
        // t_{ab} = (-1)^{b-a-1} t_{b-1}...t_{a+1} t_a t_{a+1}...t_{b-1},
        // built by conjugating one letter at a time.
        result = gen_t(n, a);
        for (int k = a + 1; k <= b - 1; ++k) result = -(gen_t(n, k) * result * gen_t(n, k));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(result)).first->second;
}

std::vector<std::uint64_t> all_perm_codes(int n) {
    std::vector<std::uint64_t> codes;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        codes.push_back(Permutation(img).packed());
    } while (std::next_permutation(img.begin(), img.end()));
    return codes;
}

AlgebraElement embed(const AlgebraElement& a, int m) {
    if (m < a.n()) throw SizeMismatch("embedding into a smaller rank");
    if (m == a.n()) return a;
    // Appending fixed points only adds nibbles at fresh positions, so packed
    // codes all shift by the same constant and the term order is preserved.
    std::uint64_t tail = 0;
    for (int j = a.n() + 1; j <= m; ++j) tail |= static_cast<std::uint64_t>(j) << (4 * (12 - j));
    AlgebraElement out(m);
    out.terms_.reserve(a.terms_.size());
    for (const auto& [bw, s] : a.terms_) out.terms_.emplace_back(BasisWord{bw.perm | tail, bw.mask}, s);
    return out;
}

Parity parity(const AlgebraElement& a) {
    bool any_even = false, any_odd = false;
    for (const auto& [bw, s] : a.terms()) {
        if (std::popcount(bw.mask) & 1)
            any_odd = true;
        else
            any_even = true;
    }
    if (any_even && any_odd) return Parity::Mixed;
    return any_odd ? Parity::Odd : Parity::Even;
}

AlgebraElement anti_involution_star(const AlgebraElement& a) {
    AlgebraElement out(a.n_);
    out.terms_.reserve(a.terms_.size());
    for (const auto& [bw, s] : a.terms_) {
        const Permutation w = Permutation::unpacked(a.n_, bw.perm);
        const int k = std::popcount(bw.mask);
        auto [relabel_sign, m] = mask_image(w, bw.mask);
        const bool flip = ((((k * (k - 1)) / 2) & 1) != 0) != (relabel_sign < 0);
        out.terms_.emplace_back(BasisWord{w.inverse().packed(), m}, flip ? -s : s);
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

AlgebraElement jm_m(int n, int a) {
    if (a < 1 || a > n) throw IndexOutOfRange("m index " + std::to_string(a));
    AlgebraElement m = AlgebraElement::zero(n);
    for (int k = 1; k < a; ++k) m += gen_t_ab(n, k, a);
    return m;
}

AlgebraElement jm_x(int n, int a) {
    if (a < 1 || a > n) throw IndexOutOfRange("x index " + std::to_string(a));
    static std::mutex mu;
    static std::map<std::pair<int, int>, AlgebraElement> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, a});
        if (it != cache.end()) return it->second;
    }
    AlgebraElement x = (jm_m(n, a) * gen_c(n, a)).scaled(Scalar::sqrt_int(2));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(n, a), std::move(x)).first->second;
}

AlgebraElement gen_jm_x(int r, int n) {
    if (r < 1 || r >= n) throw IndexOutOfRange("x_{rn} needs 1 <= r < n");
    AlgebraElement sum = AlgebraElement::zero(n);
    for (int k = 1; k <= r; ++k) sum += gen_t_ab(n, k, n);
    return (sum * gen_c(n, n)).scaled(Scalar::sqrt_int(2));
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [bw, s] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + s.to_string() + ")*" + Permutation::unpacked(n_, bw.perm).to_string();
        std::uint32_t m = bw.mask;
        while (m) {
            std::uint32_t lsb = m & (~m + 1);
            out += "*c" + std::to_string(std::countr_zero(lsb) + 1);
            m ^= lsb;
        }
    }
    return out;
}

} // namespace sergeev
