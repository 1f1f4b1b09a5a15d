#include "slnstate/symkit.hpp"

#include <algorithm>

namespace slnstate {

RootSet::RootSet(std::vector<Rational> roots) : roots_(std::move(roots)) {
    if (static_cast<int>(roots_.size()) > kMaxRoots)
        throw DomainError("at most " + std::to_string(kMaxRoots) + " roots are supported");
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (roots_[i] == roots_[j])
                throw DomainError("roots must be pairwise distinct (repeated " +
                                  to_string(roots_[i]) + ")");
}

RootSet RootSet::standard(int N) {
    if (N < 1) throw DomainError("N must be positive");
    std::vector<Rational> r;
    for (int i = 0; i < N; ++i) r.emplace_back(i);
    return RootSet(std::move(r));
}

Subset Subset::of(const std::vector<int>& indices) {
    std::uint32_t b = 0;
    for (int i : indices) {
        if (i < 0 || i >= kMaxRoots) throw DomainError("root index out of range");
        if ((b >> i) & 1u) throw DomainError("repeated root index in subset");
        b |= 1u << i;
    }
    return Subset(b);
}

std::vector<int> Subset::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::vector<Rational> Subset::values(const RootSet& sigma) const {
    std::vector<Rational> out;
    for (int i : indices()) {
        if (i >= sigma.size()) throw DomainError("subset index outside the root set");
        out.push_back(sigma[i]);
    }
    return out;
}

std::vector<Subset> subsets_of_size(int N, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > N) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(Subset::of(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::string to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw DomainError("partition parts must be non-negative");
        if (p > 0) parts_.push_back(p);
    }
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>()))
        throw DomainError("partition parts must be non-increasing");
}

Partition Partition::box(int rows, int cols) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(rows, 0)), cols));
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < part(0); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p > j) ++count;
        c.push_back(count);
    }
    return Partition(c);
}

Partition Partition::complement(int rows, int cols) const {
    if (!fits(rows, cols)) throw DomainError("partition does not fit the box");
    std::vector<int> c;
    for (int i = rows - 1; i >= 0; --i) c.push_back(cols - part(i));
    return Partition(c);
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxp) -> void {
        if (row == rows) {
            all.push_back(cur);
            return;
        }
        for (int p = 0; p <= maxp; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    if (rows >= 0 && cols >= 0) rec(rec, 0, cols);
    std::vector<Partition> out;
    for (auto& v : all) out.emplace_back(v);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    });
    return out;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.part(i));
    }
    return out + ")";
}

}  // namespace slnstate
