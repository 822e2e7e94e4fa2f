#include "higgs/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace higgs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::fromMultiplicities(const std::vector<int>& r) {
    std::vector<int> parts;
    for (int i = static_cast<int>(r.size()); i >= 1; --i) {
        if (r[i - 1] < 0) throw std::invalid_argument("negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(r[i - 1]), i);
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> r(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_) ++r[p - 1];
    return r;
}

std::vector<int> Partition::prefixMultiplicities() const {
    const auto r = multiplicities();
    std::vector<int> pre(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) pre[i + 1] = pre[i] + r[i];
    return pre;
}

bool Partition::containsCell(int row, int col) const {
    return row >= 1 && row <= length() && col >= 1 && col <= parts_[row - 1];
}

std::pair<int, int> Partition::armLeg(int row, int col) const {
    if (!containsCell(row, col))
        throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside " + toString());
    const int arm = parts_[row - 1] - col;
    int leg = 0;
    for (int i = row; i < length() && parts_[i] >= col; ++i) ++leg;
    return {arm, leg};
}

long Partition::pairing() const {
    long s = 0;
    const Partition c = conjugate();
    for (int x : c.parts()) s += static_cast<long>(x) * x;
    return s;
}

std::string Partition::toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void generate(int remaining, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        generate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitionsOf(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(n, n, cur, out);
    return out;
}

long chi(const ChernClass& a, const ChernClass& b, int genus) {
    return a.r * b.d - b.r * a.d + a.r * b.r * (1 - genus);
}

long rho(long l, const std::vector<ChernClass>& alpha, int genus) {
    const long s = static_cast<long>(alpha.size());
    long sum = 0;
    for (long i = 1; i <= s; ++i) {
        const ChernClass& ai = alpha[i - 1];
        for (long j = i + 1; j <= s; ++j) {
            const ChernClass& aj = alpha[j - 1];
            sum += i * chi(ai, aj, genus) + (i - 1) * chi(aj, ai, genus) - i * (j - 1) * ai.r * aj.r * l;
        }
        sum += (i - 1) * chi(ai, ai, genus) - (i * (i - 1) / 2) * ai.r * ai.r * l;
    }
    return -sum;
}

Partition lambdaOf(const std::vector<ChernClass>& alpha) {
    std::vector<int> r;
    for (const auto& a : alpha) {
        if (a.r < 0) throw std::invalid_argument("negative rank in tuple");
        r.push_back(static_cast<int>(a.r));
    }
    return Partition::fromMultiplicities(r);
}

}  // namespace higgs
