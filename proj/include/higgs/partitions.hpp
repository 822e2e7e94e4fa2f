#pragma once

#include <string>
#include <utility>
#include <vector>

namespace higgs {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    /// The partition (1^{r_1}, 2^{r_2}, ...): r[i-1] parts equal to i.
    static Partition fromMultiplicities(const std::vector<int>& r);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const;
    /// r_i = number of parts equal to i, for i = 1..largest(); index i-1.
    std::vector<int> multiplicities() const;
    /// r_{<i} = r_1 + ... + r_{i-1}, for i = 1..largest()+1; index i-1.
    std::vector<int> prefixMultiplicities() const;

    /// Arm and leg of the cell (row, col), both 1-based.
    std::pair<int, int> armLeg(int row, int col) const;
    bool containsCell(int row, int col) const;
    /// <lambda, lambda> = sum of squares of the conjugate parts.
    long pairing() const;

    std::string toString() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitionsOf(int n);

/// A class (rank, degree) in K-theory.
struct ChernClass {
    long r = 0;
    long d = 0;
    /// alpha(n) = (r, d + n r).
    ChernClass twist(long n) const { return {r, d + n * r}; }
    friend bool operator==(const ChernClass& a, const ChernClass& b) { return a.r == b.r && a.d == b.d; }
};

/// Euler form chi(a, b) = r_a d_b - r_b d_a + r_a r_b (1 - g).
long chi(const ChernClass& a, const ChernClass& b, int genus);

/// The exponent rho_l of a tuple alpha_1..alpha_s, from the closed O(s^2)
/// formula. The defining sum is -rho_l, hence the overall sign.
long rho(long l, const std::vector<ChernClass>& alpha, int genus);
inline long rho0(const std::vector<ChernClass>& alpha, int genus) { return rho(0, alpha, genus); }

/// lambda(alpha) = (1^{r_1}, 2^{r_2}, ...) with r_i = rank of alpha_i.
Partition lambdaOf(const std::vector<ChernClass>& alpha);

}  // namespace higgs
