#include "eyd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace eyd {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw NotWeaklyDecreasing("partition part must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw NotWeaklyDecreasing("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition parts are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0]);
        for (int c = 1; c <= parts_[0]; ++c) {
            int count = 0;
            for (int p : parts_)
                if (p >= c) ++count;
            conj[c - 1] = count;
        }
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::has_cell(Cell d) const {
    return d.row >= 1 && d.row <= length() && d.col >= 1 && d.col <= part(d.row);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

long long Partition::b_stat() const {
    long long b = 0;
    for (int i = 1; i <= length(); ++i) b += static_cast<long long>(i - 1) * part(i);
    return b;
}

Partition Partition::parse(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw NotWeaklyDecreasing("bad partition text: empty");
    if (compact == "0") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= compact.size()) {
        size_t comma = compact.find(',', pos);
        std::string tok = compact.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw NotWeaklyDecreasing("bad partition text: '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

int hook(const Partition& la, Cell d) {
    if (!la.has_cell(d))
        throw CellOutsideShape("cell (" + std::to_string(d.row) + "," + std::to_string(d.col) +
                               ") outside " + la.str());
    int conj_col = 0;  // lambda'_c
    for (int p : la.parts())
        if (p >= d.col) ++conj_col;
    return la.part(d.row) - d.col + conj_col - d.row + 1;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

void gen_subpartitions(const Partition& la, int row, int cap, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
    out.emplace_back(prefix);
    if (row > la.length()) return;
    int bound = std::min(cap, la.part(row));
    for (int p = bound; p >= 1; --p) {
        prefix.push_back(p);
        gen_subpartitions(la, row + 1, p, prefix, out);
        prefix.pop_back();
    }
}

bool size_lex_desc(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b.parts() < a.parts();
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    if (max_size < 0) throw std::invalid_argument("partitions_up_to: negative size");
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto block = partitions_of(n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& la) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_subpartitions(la, 1, la.part(1), prefix, out);
    std::sort(out.begin(), out.end(), size_lex_desc);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape " + outer_.str() + "/" + inner_.str() +
                                    ": inner partition not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(size());
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
    return out;
}

SkewShape SkewShape::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const {
    if (inner_.empty()) return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& la) { return os << la.str(); }
std::ostream& operator<<(std::ostream& os, const SkewShape& s) { return os << s.str(); }

}  // namespace eyd
