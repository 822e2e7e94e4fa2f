#include "higgs/oracle_p1.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "higgs/curve.hpp"

namespace higgs::p1 {

int SplittingType::degree() const {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

std::string SplittingType::toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::vector<SplittingType> splittingTypes(int r, int d) {
    if (r < 1 || d < 0) throw std::invalid_argument("splitting types need r >= 1 and d >= 0");
    std::vector<SplittingType> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int maxPart) {
        if (slots == 0) {
            if (left == 0) out.push_back({cur});
            return;
        }
        for (int x = std::min(left, maxPart); x >= 0; --x) {
            if (static_cast<long>(x) * slots < left) break;
            cur.push_back(x);
            rec(left - x, slots - 1, x);
            cur.pop_back();
        }
    };
    rec(d, r, d);
    return out;
}

long homDim(const SplittingType& a, const SplittingType& b, long l) {
    long n = 0;
    for (int ai : a.a)
        for (int bj : b.a) n += std::max(0L, bj - ai + l + 1);
    return n;
}

mpz_class glOrder(int m, long q0) {
    mpz_class qm, out = 1, qi;
    mpz_ui_pow_ui(qm.get_mpz_t(), static_cast<unsigned long>(q0), static_cast<unsigned long>(m));
    for (int i = 0; i < m; ++i) {
        mpz_ui_pow_ui(qi.get_mpz_t(), static_cast<unsigned long>(q0), static_cast<unsigned long>(i));
        out *= qm - qi;
    }
    return out;
}

mpz_class autCount(const SplittingType& a, long q0) {
    long n = homDim(a, a, 0);
    mpz_class out = 1;
    for (std::size_t i = 0; i < a.a.size();) {
        std::size_t j = i;
        while (j < a.a.size() && a.a[j] == a.a[i]) ++j;
        const int m = static_cast<int>(j - i);
        n -= static_cast<long>(m) * m;
        out *= glOrder(m, q0);
        i = j;
    }
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q0), static_cast<unsigned long>(n));
    return out * pw;
}

mpz_class allCount(const SplittingType& a, long l, long q0) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q0), static_cast<unsigned long>(homDim(a, a, l)));
    return pw;
}

namespace {

// Polynomial matrices over F_p with every entry stored densely up to a
// common length.
struct PolyMatrix {
    int r = 0, len = 0;
    std::vector<int> c;  // (i * r + j) * len + k
    PolyMatrix(int r_, int len_) : r(r_), len(len_), c(static_cast<std::size_t>(r_ * r_ * len_), 0) {}
    int* entry(int i, int j) { return &c[static_cast<std::size_t>((i * r + j) * len)]; }
    const int* entry(int i, int j) const { return &c[static_cast<std::size_t>((i * r + j) * len)]; }
    bool isZero() const {
        return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    }
};

void multiply(const PolyMatrix& A, const PolyMatrix& B, PolyMatrix& out, int p, int degA, int degB) {
    std::fill(out.c.begin(), out.c.end(), 0);
    const int r = A.r;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int* o = out.entry(i, j);
            for (int k = 0; k < r; ++k) {
                const int* x = A.entry(i, k);
                const int* y = B.entry(k, j);
                for (int s = 0; s <= degA; ++s) {
                    if (x[s] == 0) continue;
                    for (int t = 0; t <= degB && s + t < out.len; ++t) o[s + t] = (o[s + t] + x[s] * y[t]) % p;
                }
            }
        }
}

struct Slot {
    int i, j, k;  // entry (i, j), coefficient of x^k
};

}  // namespace

mpz_class nilCount(const SplittingType& a, long l, long q0, const OracleOptions& opts) {
    if (!isPrime(q0)) throw std::invalid_argument("the P1 oracle supports prime q0 only");
    const int r = a.rank();
    std::vector<Slot> slots;
    int maxDeg = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const long deg = a.a[i] - a.a[j] + l;
            for (long k = 0; k <= deg; ++k) slots.push_back({i, j, static_cast<int>(k)});
            maxDeg = std::max<int>(maxDeg, static_cast<int>(deg));
        }
    const double size = std::pow(static_cast<double>(q0), static_cast<double>(slots.size()));
    if (size > opts.cap)
        throw std::runtime_error("enumeration cap exceeded for type " + a.toString() + ": need cap >= " +
                                 std::to_string(static_cast<long long>(size)));
    if (slots.empty()) return 1;  // only theta = 0
    // theta^r has entries of degree <= r * maxDeg in the chart.
    const int len = std::max(1, r * std::max(maxDeg, 0) + 1);
    const int p = static_cast<int>(q0);
    const auto total = static_cast<unsigned long long>(std::llround(size));

    // Chunks of the enumeration index; the low digits vary fastest.
    const unsigned long long chunk = std::max<unsigned long long>(1, total / 64);
    std::atomic<unsigned long long> next{0};
    std::atomic<unsigned long long> found{0};
    auto work = [&] {
        PolyMatrix theta(r, len), acc(r, len), tmp(r, len);
        std::vector<int> digits(slots.size());
        for (;;) {
            const unsigned long long start = next.fetch_add(chunk);
            if (start >= total) break;
            const unsigned long long stop = std::min(total, start + chunk);
            unsigned long long x = start;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                digits[s] = static_cast<int>(x % static_cast<unsigned long long>(p));
                x /= static_cast<unsigned long long>(p);
            }
            unsigned long long local = 0;
            for (unsigned long long idx = start; idx < stop; ++idx) {
                std::fill(theta.c.begin(), theta.c.end(), 0);
                for (std::size_t s = 0; s < slots.size(); ++s) theta.entry(slots[s].i, slots[s].j)[slots[s].k] = digits[s];
                acc = theta;
                int degAcc = std::max(maxDeg, 0);
                for (int pw = 1; pw < r && !acc.isZero(); ++pw) {
                    multiply(acc, theta, tmp, p, degAcc, std::max(maxDeg, 0));
                    std::swap(acc, tmp);
                    degAcc = std::min(len - 1, degAcc + std::max(maxDeg, 0));
                }
                if (acc.isZero()) ++local;
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    if (++digits[s] < p) break;
                    digits[s] = 0;
                }
            }
            found += local;
        }
    };
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp<int>(threads, 1, 64);
    if (threads == 1 || total < 4096) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return mpz_class(std::to_string(found.load()));
}

std::vector<OracleTerm> oracleBreakdown(int r, int d, long l, long q0, bool nilOnly, const OracleOptions& opts) {
    std::vector<OracleTerm> out;
    for (const auto& t : splittingTypes(r, d))
        out.push_back({t, nilOnly ? nilCount(t, l, q0, opts) : allCount(t, l, q0), autCount(t, q0)});
    return out;
}

GradedSeries oracleSeries(long l, long q0, int rmax, int dmax, bool nilOnly, const OracleOptions& opts) {
    if (!isPrime(q0)) throw std::invalid_argument("the P1 oracle supports prime q0 only");
    GradedSeries s = GradedSeries::one(rmax, dmax, 0);
    for (int r = 1; r <= rmax; ++r)
        for (int d = 0; d <= dmax; ++d) {
            mpq_class sum = 0;
            for (const auto& term : oracleBreakdown(r, d, l, q0, nilOnly, opts)) sum += mpq_class(term.count, term.aut);
            sum.canonicalize();
            s.set(r, d, RatFun::rational(sum) * scalar::minusVPow(-l * r * r));
        }
    return s;
}

}  // namespace higgs::p1
