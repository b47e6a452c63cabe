#include "eyd/excited.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>

namespace eyd {

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw std::invalid_argument("diagram with repeated cell");
}

Diagram Diagram::of(const Partition& mu) {
    return Diagram(mu.cells());  // already row-major
}

bool Diagram::contains(Cell d) const {
    return std::binary_search(cells_.begin(), cells_.end(), d);
}

std::string Diagram::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < cells_.size(); ++i) {
        if (i) os << ' ';
        os << '(' << cells_[i].row << ',' << cells_[i].col << ')';
    }
    return os.str();
}

bool can_excite(const Diagram& D, Cell d, const Partition& la) {
    if (!D.contains(d))
        throw CellNotInDiagram("cell (" + std::to_string(d.row) + "," + std::to_string(d.col) +
                               ") not in diagram");
    Cell below{d.row + 1, d.col};
    Cell right{d.row, d.col + 1};
    Cell target{d.row + 1, d.col + 1};
    return !D.contains(below) && !D.contains(right) && !D.contains(target) &&
           la.has_cell(target);
}

Diagram excite(const Diagram& D, Cell d, const Partition& la) {
    if (!can_excite(D, d, la))
        throw ExcitationNotApplicable("cell (" + std::to_string(d.row) + "," +
                                      std::to_string(d.col) + ") cannot be excited");
    std::vector<Cell> cells = D.cells();
    cells.erase(std::find(cells.begin(), cells.end(), d));
    cells.push_back({d.row + 1, d.col + 1});
    return Diagram(std::move(cells));
}

std::vector<Diagram> enumerate_eyd(const SkewShape& s, ClosureOrder order) {
    std::set<Diagram> seen;
    std::deque<Diagram> frontier;
    frontier.push_back(Diagram::of(s.inner()));
    seen.insert(frontier.back());
    while (!frontier.empty()) {
        Diagram D;
        if (order == ClosureOrder::Bfs) {
            D = std::move(frontier.front());
            frontier.pop_front();
        } else {
            D = std::move(frontier.back());
            frontier.pop_back();
        }
        for (Cell d : D.cells()) {
            if (!can_excite(D, d, s.outer())) continue;
            Diagram next = excite(D, d, s.outer());
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::ostream& operator<<(std::ostream& os, const Diagram& D) { return os << D.str(); }

}  // namespace eyd
