#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hlkit/combinatorics.hpp"
#include "hlkit/sympoly.hpp"

namespace hlkit {

/// Filling of a Young diagram in Japanese style. Columns are indexed from the
/// right: column 1 is the rightmost, column lambda_1 the leftmost. Column j
/// has lambda'_j cells, rows numbered 1.. from the top.
class Filling {
public:
    Filling(Partition shape, std::vector<IntSequence> columns);
    /// Builds from per-row entries, each listed leftmost..rightmost.
    static Filling from_rows(const Partition& shape,
                             const std::vector<IntSequence>& rows);

    const Partition& shape() const { return shape_; }
    int num_columns() const { return static_cast<int>(cols_.size()); }
    /// Entry at row i, column j (j counted from the right), 1-based.
    int entry(int i, int j) const { return cols_[j - 1][i - 1]; }
    const IntSequence& column(int j) const { return cols_[j - 1]; }
    /// Row i listed leftmost..rightmost.
    IntSequence row(int i) const;

    /// Membership in F(lambda,n): non-attacking and weakly decreasing rows.
    bool is_valid(int n) const;
    /// Membership in Fhat(lambda,n): rightmost column strictly increasing on
    /// each maximal block of equal parts. Assumes is_valid.
    bool is_fhat() const;

    int inv() const;
    int des() const;
    int cinv() const { return shape_.weighted_size() - inv(); }
    /// Independent count of cinv: same-column pairs u below v with
    /// sigma(u) < sigma(v), and sigma(v) < sigma(left-of-u) when that cell
    /// exists.
    int cinv_direct() const;
    ExponentVector content(int n) const;

    auto operator<=>(const Filling&) const = default;
    bool operator==(const Filling&) const = default;

    std::string to_string() const;
    std::string to_json_string() const;

private:
    Partition shape_;
    std::vector<IntSequence> cols_;  // cols_[j-1] = column j (from the right)
};

enum class FillingClass { all_valid, fhat };

/// Enumerates F(lambda,n) or Fhat(lambda,n), each filling exactly once, in a
/// deterministic order (DFS from the rightmost column leftward, entries tried
/// in increasing order within each column, top to bottom).
void for_each_filling(const Partition& lambda, int n, FillingClass cls,
                      const std::function<void(const Filling&)>& fn);

std::vector<Filling> enumerate_fillings(const Partition& lambda, int n,
                                        FillingClass cls);

}  // namespace hlkit
