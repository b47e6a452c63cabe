#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eyd {

struct NotWeaklyDecreasing : std::invalid_argument {
    explicit NotWeaklyDecreasing(const std::string& what) : std::invalid_argument(what) {}
};

struct CellOutsideShape : std::domain_error {
    explicit CellOutsideShape(const std::string& what) : std::domain_error(what) {}
};

/* A cell (r, c) of a Young diagram in English convention, 1-based:
 * row r counts top-down, column c counts left-right. */
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/* content(r, c) = c - r, the index of the diagonal through the cell. */
inline int content(Cell d) { return d.col - d.row; }

/*
 * An integer partition \lambda = (\lambda_1 >= \lambda_2 >= ... >= \lambda_k > 0),
 * identified with its Young diagram. Trailing zeros in the input are stripped;
 * parts that are negative or increase raise NotWeaklyDecreasing.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }  // number of cells |lambda|
    bool empty() const { return parts_.empty(); }

    // 1-based part access; part(i) = 0 for i > length().
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    bool has_cell(Cell d) const;
    std::vector<Cell> cells() const;  // row-major

    // b(lambda) = sum_i (i-1) lambda_i = sum over cells of (row - 1)
    long long b_stat() const;

    // Text form "3,3,2,1"; the empty partition reads/prints as "0".
    static Partition parse(std::string_view text);
    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* hook(r, c) = lambda_r - c + lambda'_c - r + 1: arm plus leg plus one.
 * The cell must lie inside the diagram. */
int hook(const Partition& la, Cell d);

/* All partitions of n, largest-first lexicographic: (3), (2,1), (1,1,1). */
std::vector<Partition> partitions_of(int n);

/* All partitions of size 0..max_size, ordered by size then lexicographically
 * decreasing within a size. Every partition appears exactly once. */
std::vector<Partition> partitions_up_to(int max_size);

/* All mu with mu subseteq la (componentwise), ordered by size then
 * lexicographically decreasing within a size. */
std::vector<Partition> subpartitions(const Partition& la);

/*
 * A skew shape lambda/mu with mu subseteq lambda. mu may be empty (straight
 * shape) or equal to lambda (empty shape). Text form "3,3,2,1/2,1"; a missing
 * "/mu" part means mu is empty.
 */
class SkewShape {
public:
    explicit SkewShape(Partition outer, Partition inner = Partition());

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }  // |lambda/mu|

    std::vector<Cell> cells() const;  // row-major

    static SkewShape parse(std::string_view text);
    std::string str() const;

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

private:
    Partition outer_, inner_;
};

std::ostream& operator<<(std::ostream& os, const Partition& la);
std::ostream& operator<<(std::ostream& os, const SkewShape& s);

}  // namespace eyd
