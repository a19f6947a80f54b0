#ifndef SERGEEV_TABLEAUX_HPP
#define SERGEEV_TABLEAUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "sergeev/perm.hpp"
#include "sergeev/scalar.hpp"

namespace sergeev {

/// Box of a shifted diagram, 1-based; row i occupies columns i .. i+len-1.
struct Box {
    int row;
    int col;

    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
    /// Content of the box: col - row (0 on the diagonal).
    int content() const { return col - row; }
    bool diagonal() const { return col == row; }
};

/// Partition with strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    /// Number of boxes.
    int size() const;
    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based part accessor; 0 beyond the last part.
    int part(int i) const;

    bool contains(Box b) const;

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    bool operator!=(const StrictPartition& o) const { return parts_ != o.parts_; }

    /// e.g. "3,1".
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Standard shifted tableau with optional bars on non-diagonal entries.
///
/// Entries are 1..n, each exactly once, strictly increasing along rows and
/// columns.  Construction validates all invariants.
class ShiftedTableau {
public:
    ShiftedTableau(const StrictPartition& shape,
                   const std::vector<std::vector<int>>& rows,
                   const std::vector<std::vector<bool>>& bars);
    /// Unbarred tableau from rows of entries.
    ShiftedTableau(const StrictPartition& shape, const std::vector<std::vector<int>>& rows);

    /// Parses the row format "1,2,4b/3": rows split by '/', entries by ',',
    /// a 'b' suffix marking a bar.
    static ShiftedTableau from_text(const std::string& text);
    std::string to_text() const;

    int n() const { return shape_.size(); }
    const StrictPartition& shape() const { return shape_; }

    Box box_of(int a) const;
    int entry_at(Box b) const;
    bool barred(int a) const;
    bool is_diagonal(int a) const { return box_of(a).diagonal(); }
    int content_of(int a) const { return box_of(a).content(); }
    /// sigma(sigma+1) for sigma = content of the box of a.
    Rational content_square(int a) const;
    /// kappa_a: +sqrt(sigma(sigma+1)) unbarred, -sqrt(...) barred, 0 diagonal.
    Scalar signed_content(int a) const;

    /// Entries on diagonal boxes, ascending.
    std::vector<int> diagonal_entries() const;
    /// Non-diagonal boxes in row-reading order.
    std::vector<Box> nondiagonal_boxes() const;
    /// Entries in row-reading order.
    std::vector<int> row_word() const;

    /// Subtableau of the entries 1..k (always standard).
    ShiftedTableau prefix(int k) const;
    /// Copy with every bar removed.
    ShiftedTableau without_bars() const;
    /// Copy with the bar flag of entry a set to `bar`; entry must be off-diagonal.
    ShiftedTableau with_bar(int a, bool bar) const;
    /// Tableau with entries a and a+1 exchanged, bars staying on their boxes;
    /// nullopt when the exchange is not standard.
    std::optional<ShiftedTableau> swap_adjacent(int a) const;

    bool operator==(const ShiftedTableau& o) const;
    bool operator!=(const ShiftedTableau& o) const { return !(*this == o); }

private:
    StrictPartition shape_;
    std::vector<int> row_of_, col_of_; // indexed by entry, 1-based
    std::vector<bool> bar_;

    ShiftedTableau() = default;
    void validate() const;
};

/// Candidate box for the next entry, with the signed content it would carry.
struct AddableBox {
    Box box;
    bool barred;
    Scalar kappa;
};

/// Strict partitions of n in lexicographically decreasing order.
std::vector<StrictPartition> enumerate_strict_partitions(int n);

/// Boxes that can be added to the diagram keeping it a strict partition,
/// ascending by row.
std::vector<Box> addable_boxes(const StrictPartition& shape);

/// All (box, sign) candidates: one unbarred candidate for a diagonal box,
/// unbarred + barred for every other addable box.  Order: by row, unbarred first.
std::vector<AddableBox> addable_signed_contents(const StrictPartition& shape);

/// Standard tableaux of the given shape in row-word order; with `barred`,
/// each tableau is expanded over all bar patterns, the pattern acting as a
/// binary counter whose least significant bit sits on the last non-diagonal
/// box in reading order.
std::vector<ShiftedTableau> enumerate_standard_tableaux(const StrictPartition& shape, bool barred);

/// Closed-form count of standard (unbarred) tableaux of the shape:
/// n!/(prod parts!) * prod_{i<j} (p_i - p_j)/(p_i + p_j).
long long g_lambda_formula(const StrictPartition& shape);

/// Row tableau of the shape: entries 1..n filled along rows.
ShiftedTableau row_tableau(const StrictPartition& shape);

/// The permutation d(T) with T = d(T) * row_tableau(shape) under entry relabeling.
Permutation permutation_d(const ShiftedTableau& t);

/// i_b = number of entries smaller than b that appear after b in the row word;
/// returned vector is indexed by entry (index 0 unused, i_1 = 0).
std::vector<int> inversion_counts(const ShiftedTableau& t);

/// Canonical reduced word of d(T): for b = 2..n the run (b-1, b-2, ..., b-i_b).
std::vector<int> reduced_word(const ShiftedTableau& t);

/// Extensions of V by entry n+1 over all addable candidates, diagonal boxes
/// unbarred, other boxes unbarred then barred, ascending by row.
std::vector<ShiftedTableau> branch_up(const ShiftedTableau& v);

} // namespace sergeev

#endif
