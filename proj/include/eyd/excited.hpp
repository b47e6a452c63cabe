#pragma once

#include "eyd/partition.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace eyd {

struct CellNotInDiagram : std::domain_error {
    explicit CellNotInDiagram(const std::string& what) : std::domain_error(what) {}
};

struct ExcitationNotApplicable : std::domain_error {
    explicit ExcitationNotApplicable(const std::string& what) : std::domain_error(what) {}
};

/* A finite set of cells in canonical row-major order. */
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);
    static Diagram of(const Partition& mu);

    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(Cell d) const;

    bool operator==(const Diagram& o) const { return cells_ == o.cells_; }
    bool operator<(const Diagram& o) const { return cells_ < o.cells_; }

    std::string str() const;  // "(1,1) (1,2) (2,1)"

private:
    std::vector<Cell> cells_;
};

/*
 * Elementary excitation: a cell d = (r, c) of D may move to (r+1, c+1) when
 * (r+1, c), (r, c+1), (r+1, c+1) are all outside D and (r+1, c+1) lies in
 * lambda. can_excite demands d in D; excite additionally demands the move be
 * applicable.
 */
bool can_excite(const Diagram& D, Cell d, const Partition& la);
Diagram excite(const Diagram& D, Cell d, const Partition& la);

enum class ClosureOrder { Bfs, Dfs };

/*
 * All excited diagrams of lambda/mu: the closure of the diagram of mu under
 * elementary excitations inside lambda. The result is sorted canonically, so
 * it does not depend on the exploration strategy; the strategy knob exists
 * for exactly that test.
 */
std::vector<Diagram> enumerate_eyd(const SkewShape& s, ClosureOrder order = ClosureOrder::Bfs);

std::ostream& operator<<(std::ostream& os, const Diagram& D);

}  // namespace eyd
