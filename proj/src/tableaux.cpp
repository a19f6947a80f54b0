#include "sergeev/tableaux.hpp"

#include <algorithm>
#include <cctype>

namespace sergeev {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ShapeMismatch("partition part must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw ShapeMismatch("partition parts must strictly decrease");
    }
}

int StrictPartition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int StrictPartition::part(int i) const {
    if (i < 1) throw IndexOutOfRange("partition part index " + std::to_string(i));
    return i <= length() ? parts_[i - 1] : 0;
}

bool StrictPartition::contains(Box b) const {
    if (b.row < 1 || b.row > length()) return false;
    return b.col >= b.row && b.col <= b.row + parts_[b.row - 1] - 1;
}

std::string StrictPartition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

ShiftedTableau::ShiftedTableau(const StrictPartition& shape,
                               const std::vector<std::vector<int>>& rows,
                               const std::vector<std::vector<bool>>& bars)
    : shape_(shape) {
    int n = shape.size();
    if (static_cast<int>(rows.size()) != shape.length())
        throw ShapeMismatch("row count does not match shape");
    if (bars.size() != rows.size()) throw ShapeMismatch("bar rows do not match shape");
    row_of_.assign(n + 1, 0);
    col_of_.assign(n + 1, 0);
    bar_.assign(n + 1, false);
    for (int i = 1; i <= shape.length(); ++i) {
        if (static_cast<int>(rows[i - 1].size()) != shape.part(i))
            throw ShapeMismatch("row " + std::to_string(i) + " length does not match shape");
        if (bars[i - 1].size() != rows[i - 1].size())
            throw ShapeMismatch("bar row " + std::to_string(i) + " length does not match shape");
        for (int k = 0; k < shape.part(i); ++k) {
            int a = rows[i - 1][k];
            if (a < 1 || a > n) throw ShapeMismatch("entry " + std::to_string(a) + " out of range");
            if (row_of_[a] != 0) throw ShapeMismatch("entry " + std::to_string(a) + " repeated");
            row_of_[a] = i;
            col_of_[a] = i + k;
            bar_[a] = bars[i - 1][k];
        }
    }
    validate();
}

ShiftedTableau::ShiftedTableau(const StrictPartition& shape, const std::vector<std::vector<int>>& rows)
    : ShiftedTableau(shape, rows, [&] {
          std::vector<std::vector<bool>> none;
          for (const auto& r : rows) none.emplace_back(r.size(), false);
          return none;
      }()) {}

void ShiftedTableau::validate() const {
    int n = shape_.size();
    std::vector<std::vector<int>> grid(shape_.length() + 1);
    for (int i = 1; i <= shape_.length(); ++i) grid[i].assign(shape_.part(i) + i, 0);
    for (int a = 1; a <= n; ++a) {
        if (row_of_[a] == 0) throw ShapeMismatch("entry " + std::to_string(a) + " missing");
        grid[row_of_[a]][col_of_[a] - 1] = a;
        if (bar_[a] && row_of_[a] == col_of_[a])
            throw BarOnDiagonal("entry " + std::to_string(a) + " barred on the diagonal");
    }
    for (int i = 1; i <= shape_.length(); ++i) {
        for (int j = i; j < i + shape_.part(i); ++j) {
            int a = grid[i][j - 1];
            if (j > i && grid[i][j - 2] >= a)
                throw NotStandard("row " + std::to_string(i) + " not increasing");
            Box below{i + 1, j};
            if (shape_.contains(below) && grid[i + 1][j - 1] <= a)
                throw NotStandard("column " + std::to_string(j) + " not increasing");
        }
    }
}

Box ShiftedTableau::box_of(int a) const {
    if (a < 1 || a > n()) throw IndexOutOfRange("entry " + std::to_string(a));
    return {row_of_[a], col_of_[a]};
}

int ShiftedTableau::entry_at(Box b) const {
    if (!shape_.contains(b)) throw IndexOutOfRange("box outside shape");
    for (int a = 1; a <= n(); ++a)
        if (row_of_[a] == b.row && col_of_[a] == b.col) return a;
    throw InternalError("box without entry");
}

bool ShiftedTableau::barred(int a) const {
    if (a < 1 || a > n()) throw IndexOutOfRange("entry " + std::to_string(a));
    return bar_[a];
}

Rational ShiftedTableau::content_square(int a) const {
    long long sigma = content_of(a);
    return Rational(sigma * (sigma + 1));
}

Scalar ShiftedTableau::signed_content(int a) const {
    long long sigma = content_of(a);
    Scalar k = Scalar::sqrt_int(static_cast<std::uint64_t>(sigma * (sigma + 1)));
    return bar_[a] ? -k : k;
}

std::vector<int> ShiftedTableau::diagonal_entries() const {
    std::vector<int> out;
    for (int a = 1; a <= n(); ++a)
        if (row_of_[a] == col_of_[a]) out.push_back(a);
    return out;
}

std::vector<Box> ShiftedTableau::nondiagonal_boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= shape_.length(); ++i)
        for (int j = i + 1; j < i + shape_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::vector<int> ShiftedTableau::row_word() const {
    std::vector<int> word;
    for (int i = 1; i <= shape_.length(); ++i) {
        std::vector<int> row(shape_.part(i));
        for (int a = 1; a <= n(); ++a)
            if (row_of_[a] == i) row[col_of_[a] - i] = a;
        word.insert(word.end(), row.begin(), row.end());
    }
    return word;
}

ShiftedTableau ShiftedTableau::prefix(int k) const {
    if (k < 1 || k > n()) throw IndexOutOfRange("prefix size " + std::to_string(k));
    std::vector<int> parts;
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<bool>> bars;
    for (int i = 1; i <= shape_.length(); ++i) {
        std::vector<int> row;
        std::vector<bool> bar;
        for (int j = i; j < i + shape_.part(i); ++j) {
            int a = entry_at({i, j});
            if (a <= k) {
                row.push_back(a);
                bar.push_back(bar_[a]);
            }
        }
        if (!row.empty()) {
            parts.push_back(static_cast<int>(row.size()));
            rows.push_back(std::move(row));
            bars.push_back(std::move(bar));
        }
    }
    return ShiftedTableau(StrictPartition(parts), rows, bars);
}

ShiftedTableau ShiftedTableau::without_bars() const {
    ShiftedTableau t = *this;
    std::fill(t.bar_.begin(), t.bar_.end(), false);
    return t;
}

ShiftedTableau ShiftedTableau::with_bar(int a, bool bar) const {
    if (a < 1 || a > n()) throw IndexOutOfRange("entry " + std::to_string(a));
    if (row_of_[a] == col_of_[a] && bar) throw BarOnDiagonal("entry " + std::to_string(a));
    ShiftedTableau t = *this;
    t.bar_[a] = bar;
    return t;
}

std::optional<ShiftedTableau> ShiftedTableau::swap_adjacent(int a) const {
    if (a < 1 || a + 1 > n()) throw IndexOutOfRange("swap at " + std::to_string(a));
    // Entries exchange boxes; bar flags stay attached to the boxes.
    ShiftedTableau t = *this;
    std::swap(t.row_of_[a], t.row_of_[a + 1]);
    std::swap(t.col_of_[a], t.col_of_[a + 1]);
    std::swap(t.bar_[a], t.bar_[a + 1]);
    try {
        t.validate();
    } catch (const NotStandard&) {
        return std::nullopt;
    }
    return t;
}

bool ShiftedTableau::operator==(const ShiftedTableau& o) const {
    return shape_ == o.shape_ && row_of_ == o.row_of_ && col_of_ == o.col_of_ && bar_ == o.bar_;
}

std::string ShiftedTableau::to_text() const {
    std::string out;
    for (int i = 1; i <= shape_.length(); ++i) {
        if (i > 1) out += "/";
        for (int j = i; j < i + shape_.part(i); ++j) {
            if (j > i) out += ",";
            int a = entry_at({i, j});
            out += std::to_string(a);
            if (bar_[a]) out += "b";
        }
    }
    return out;
}

ShiftedTableau ShiftedTableau::from_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<bool>> bars;
    std::vector<int> parts;
    size_t i = 0;
    if (text.empty()) throw ParseError("empty tableau literal");
    while (true) {
        std::vector<int> row;
        std::vector<bool> bar;
        while (true) {
            while (i < text.size() && text[i] == ' ') ++i;
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected entry in tableau literal '" + text + "'");
            row.push_back(std::stoi(text.substr(start, i - start)));
            bool b = false;
            if (i < text.size() && text[i] == 'b') {
                b = true;
                ++i;
            }
            bar.push_back(b);
            while (i < text.size() && text[i] == ' ') ++i;
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        rows.push_back(std::move(row));
        bars.push_back(std::move(bar));
        parts.push_back(static_cast<int>(rows.back().size()));
        if (i == text.size()) break;
        if (text[i] != '/') throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in tableau literal");
        ++i;
    }
    return ShiftedTableau(StrictPartition(parts), rows, bars);
}

std::vector<StrictPartition> enumerate_strict_partitions(int n) {
    if (n < 0) throw SizeMismatch("negative partition size");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    // Parts chosen in decreasing order; lex-decreasing output follows from
    // trying the largest first part first.
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            // Remaining boxes must fit under parts < p: at most p-1 + p-2 + ...
            if (rest - p > (p - 1) * p / 2) continue;
            acc.push_back(p);
            self(self, rest - p, p - 1);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Box> addable_boxes(const StrictPartition& shape) {
    std::vector<Box> out;
    int l = shape.length();
    for (int i = 1; i <= l; ++i) {
        if (i == 1 || shape.part(i - 1) > shape.part(i) + 1)
            out.push_back({i, i + shape.part(i)});
    }
    if (l == 0)
        out.push_back({1, 1});
    else if (shape.part(l) >= 2)
        out.push_back({l + 1, l + 1});
    return out;
}

std::vector<AddableBox> addable_signed_contents(const StrictPartition& shape) {
    std::vector<AddableBox> out;
    for (Box b : addable_boxes(shape)) {
        long long sigma = b.content();
        Scalar k = Scalar::sqrt_int(static_cast<std::uint64_t>(sigma * (sigma + 1)));
        out.push_back({b, false, k});
        if (!b.diagonal()) out.push_back({b, true, -k});
    }
    return out;
}

namespace {

std::vector<ShiftedTableau> enumerate_unbarred(const StrictPartition& shape) {
    // Grow by chains of strict partitions; each chain is a standard tableau.
    struct Partial {
        std::vector<int> parts;
        std::vector<std::vector<int>> rows;
    };
    std::vector<Partial> frontier{{{}, {}}};
    int n = shape.size();
    for (int a = 1; a <= n; ++a) {
        std::vector<Partial> next;
        for (const auto& p : frontier) {
            StrictPartition cur(p.parts);
            for (Box b : addable_boxes(cur)) {
                // Stay inside the target shape.
                if (!shape.contains(b)) continue;
                Partial q = p;
                if (b.row > static_cast<int>(q.parts.size())) {
                    q.parts.push_back(1);
                    q.rows.push_back({a});
                } else {
                    q.parts[b.row - 1] += 1;
                    q.rows[b.row - 1].push_back(a);
                }
                next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    std::vector<ShiftedTableau> out;
    for (const auto& p : frontier)
        if (StrictPartition(p.parts) == shape) out.emplace_back(shape, p.rows);
    std::sort(out.begin(), out.end(), [](const ShiftedTableau& a, const ShiftedTableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

} // namespace

std::vector<ShiftedTableau> enumerate_standard_tableaux(const StrictPartition& shape, bool barred) {
    std::vector<ShiftedTableau> base = enumerate_unbarred(shape);
    if (!barred) return base;
    std::vector<ShiftedTableau> out;
    for (const auto& t : base) {
        std::vector<Box> boxes = t.nondiagonal_boxes();
        int m = static_cast<int>(boxes.size());
        for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
            ShiftedTableau u = t;
            for (int k = 0; k < m; ++k)
                if (mask & (1ULL << (m - 1 - k))) u = u.with_bar(u.entry_at(boxes[k]), true);
            out.push_back(std::move(u));
        }
    }
    return out;
}

long long g_lambda_formula(const StrictPartition& shape) {
    mpq_class g = 1;
    int n = shape.size();
    for (int k = 2; k <= n; ++k) g *= k;
    for (int i = 1; i <= shape.length(); ++i)
        for (int k = 2; k <= shape.part(i); ++k) g /= k;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = i + 1; j <= shape.length(); ++j) {
            g *= shape.part(i) - shape.part(j);
            g /= shape.part(i) + shape.part(j);
        }
    g.canonicalize();
    if (g.get_den() != 1) throw InternalError("tableau count formula returned non-integer");
    if (!g.get_num().fits_slong_p()) throw InternalError("tableau count overflow");
    return g.get_num().get_si();
}

ShiftedTableau row_tableau(const StrictPartition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int i = 1; i <= shape.length(); ++i) {
        std::vector<int> row(shape.part(i));
        for (int& v : row) v = next++;
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(shape, rows);
}

Permutation permutation_d(const ShiftedTableau& t) {
    ShiftedTableau r = row_tableau(t.shape());
    std::vector<int> images(t.n());
    for (int a = 1; a <= t.n(); ++a) {
        Box b = r.box_of(a);
        images[a - 1] = t.entry_at(b);
    }
    return Permutation(std::move(images));
}

std::vector<int> inversion_counts(const ShiftedTableau& t) {
    std::vector<int> word = t.row_word();
    std::vector<int> pos(t.n() + 1);
    for (int k = 0; k < t.n(); ++k) pos[word[k]] = k;
    std::vector<int> inv(t.n() + 1, 0);
    for (int b = 2; b <= t.n(); ++b)
        for (int bp = 1; bp < b; ++bp)
            if (pos[bp] > pos[b]) ++inv[b];
    return inv;
}

std::vector<int> reduced_word(const ShiftedTableau& t) {
    std::vector<int> inv = inversion_counts(t);
    std::vector<int> word;
    for (int b = 2; b <= t.n(); ++b)
        for (int k = 1; k <= inv[b]; ++k) word.push_back(b - k);
    return word;
}

std::vector<ShiftedTableau> branch_up(const ShiftedTableau& v) {
    std::vector<ShiftedTableau> out;
    int n = v.n();
    for (const AddableBox& ab : addable_signed_contents(v.shape())) {
        std::vector<int> parts = v.shape().parts();
        if (ab.box.row > static_cast<int>(parts.size()))
            parts.push_back(1);
        else
            parts[ab.box.row - 1] += 1;
        StrictPartition bigger(parts);
        std::vector<std::vector<int>> rows(bigger.length());
        std::vector<std::vector<bool>> bars(bigger.length());
        for (int i = 1; i <= bigger.length(); ++i) {
            rows[i - 1].assign(bigger.part(i), 0);
            bars[i - 1].assign(bigger.part(i), false);
        }
        for (int a = 1; a <= n; ++a) {
            Box b = v.box_of(a);
            rows[b.row - 1][b.col - b.row] = a;
            bars[b.row - 1][b.col - b.row] = v.barred(a);
        }
        rows[ab.box.row - 1][ab.box.col - ab.box.row] = n + 1;
        bars[ab.box.row - 1][ab.box.col - ab.box.row] = ab.barred;
        out.emplace_back(bigger, rows, bars);
    }
    return out;
}

} // namespace sergeev
