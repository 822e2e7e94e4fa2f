#include "higgs/residue_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "factored.hpp"

namespace higgs {

using detail::Exps;
using detail::Factored;

namespace {

// Target variable of H_lambda and J_lambda inside the engine; z1..z5 are
// taken by the residue variables.
const Var kT = Var::z(kMaxZ);

Poly zv(int j) { return Poly::variable(Var::z(j)); }
Poly qPoly() { return Poly::variable(Var::v(), 2); }

/// P^h(z_x, z_y) = z_x^{2g} P(z_y / z_x).
Poly homogenizedP(int x, int y, int genus) {
    Poly p;
    for (int k = 0; k <= 2 * genus; ++k) {
        Poly t = Poly::variable(Var::z(y), static_cast<unsigned>(k)) *
                 Poly::variable(Var::z(x), static_cast<unsigned>(2 * genus - k));
        if (k > 0) t = t * Poly::variable(Var::e(k));
        if (k % 2 == 0) p += t;
        else p -= t;
    }
    return p;
}

// The sigma-term of L over the common denominator
//   D = prod_{a<b} P^h(z_b, z_a) (z_a - q z_b) * prod_a (1 - z_a).
// Writing Zt(z_i/z_j) = (z_i z_j)^{1-g} P^h(z_j, z_i) / ((z_j - z_i)(z_j - q z_i)),
// a pair a<b that sigma puts in the order b, a contributes
//   -P^h(z_a, z_b)(z_b - q z_a) / (P^h(z_b, z_a)(z_a - q z_b)),
// and each adjacent step contributes z_s / (z_s - q z_t). When b directly
// precedes a the factor (z_b - q z_a) cancels. Every term's denominator is a
// subset of D's factors, so the numerator is an exact sum of products.
Factored computeL(int n, int genus) {
    struct Slot {
        Poly p;
        bool used = false;
    };
    std::vector<Slot> factors;
    std::map<std::pair<int, int>, std::size_t> phIdx, linIdx;
    std::vector<std::size_t> oneIdx(n + 1);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            phIdx[{a, b}] = factors.size();
            factors.push_back({homogenizedP(b, a, genus)});
            linIdx[{a, b}] = factors.size();
            factors.push_back({zv(a) - qPoly() * zv(b)});
        }
    for (int a = 1; a <= n; ++a) {
        oneIdx[a] = factors.size();
        factors.push_back({Poly(1) - zv(a)});
    }

    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    Poly N;
    do {
        for (auto& f : factors) f.used = false;
        std::vector<int> pos(n + 1);
        for (int i = 0; i < n; ++i) pos[seq[i]] = i;
        Poly term(1);
        int inversions = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                if (pos[b] > pos[a]) continue;
                ++inversions;
                term *= homogenizedP(a, b, genus);
                if (pos[b] + 1 != pos[a]) term *= zv(b) - qPoly() * zv(a);
                factors[phIdx[{a, b}]].used = true;
                factors[linIdx[{a, b}]].used = true;
            }
        for (int i = 0; i + 1 < n; ++i) {
            term *= zv(seq[i]);
            if (seq[i] < seq[i + 1]) factors[linIdx[{seq[i], seq[i + 1]}]].used = true;
        }
        factors[oneIdx[seq[0]]].used = true;
        for (const auto& f : factors)
            if (!f.used) term *= f.p;
        if (inversions % 2 == 0) N += term;
        else N -= term;
    } while (std::next_permutation(seq.begin(), seq.end()));

    Factored L(N);
    for (auto& f : factors) L.divideBy(f.p);
    L.tidy();
    return L;
}

const Factored& cachedL(int n, int genus) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_future<Factored>> cache;
    std::shared_future<Factored> fut;
    std::promise<Factored> prom;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, genus});
        if (it == cache.end()) {
            fut = prom.get_future().share();
            cache.emplace(std::make_pair(n, genus), fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            prom.set_value(computeL(n, genus));
        } catch (...) {
            prom.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

void checkRank(int n) {
    if (n < 1 || n > kMaxEngineRank)
        throw std::invalid_argument("the engine supports 1 <= |lambda| <= " + std::to_string(kMaxEngineRank));
}

Factored resFactored(const Partition& lambda, int genus) {
    if (lambda.empty()) throw std::invalid_argument("resLambda needs a nonempty partition");
    checkRank(lambda.length());
    const auto r = lambda.multiplicities();
    const auto prefix = lambda.prefixMultiplicities();
    Factored f = cachedL(lambda.length(), genus);
    for (int i = lambda.largest(); i >= 1; --i) {
        const int s = prefix[i - 1];
        for (int k = s + r[i - 1]; k >= s + 2; --k) f = f.residueAtQLocus(k);
    }
    return f;
}

Factored hFactored(const Partition& lambda, int genus) {
    Factored f = resFactored(lambda, genus);
    const auto r = lambda.multiplicities();
    const auto prefix = lambda.prefixMultiplicities();
    for (int i = 1; i <= lambda.largest(); ++i) {
        if (r[i - 1] == 0) continue;
        Exps image{};
        image[kT.lane()] = i;
        image[kVLane] = -2 * prefix[i - 1];
        f.mapVariable(Var::z(prefix[i - 1] + 1).lane(), image);
    }
    return f;
}

Factored jFactored(const Partition& lambda, const CurveModel& curve) {
    const int g = curve.genus();
    Factored J;
    for (int row = 1; row <= lambda.length(); ++row)
        for (int col = 1; col <= lambda.parts()[row - 1]; ++col) {
            const auto [a, l] = lambda.armLeg(row, col);
            if (a == 0 && l == 0) {
                // q^{1-g} P(1) / (q - 1)
                Poly p1;
                for (const auto& c : curve.zetaNumerator(kT).coefficientsIn(kT)) p1 += c;
                J.num *= p1;
                J.shift[kVLane] += 2 - 2 * g;
                J.divideBy(qPoly() - Poly(1));
                continue;
            }
            Factored z(curve.zetaNumerator(kT));
            z.divideBy(Poly(1) - Poly::variable(kT));
            z.divideBy(Poly(1) - qPoly() * Poly::variable(kT));
            Exps image{};
            image[kT.lane()] = a;
            image[kVLane] = -2 - 2 * l;
            z.mapVariable(kT.lane(), image);
            J *= z;
        }
    J.tidy();
    return J;
}

MvRatFun inZ1(Factored f) {
    Exps image{};
    image[Var::z(1).lane()] = 1;
    f.mapVariable(kT.lane(), image);
    return MvRatFun(f.toRatFun(), 1);
}

std::string cacheKey(const Partition& lambda, int genus) {
    std::string k = "g" + std::to_string(genus) + "_l";
    for (int p : lambda.parts()) k += "_" + std::to_string(p);
    return k;
}

std::vector<ScalarExpr> computeExpansion(const Partition& lambda, const CurveModel& curve, int dmax) {
    if (lambda.empty()) {
        std::vector<ScalarExpr> out(static_cast<std::size_t>(dmax) + 1);
        out[0] = 1;
        return out;
    }
    Factored f = jFactored(lambda, curve);
    f *= hFactored(lambda, curve.genus());
    f.tidy();
    return f.expandAtZero(kT.lane(), dmax);
}

std::optional<std::vector<ScalarExpr>> loadDisk(const std::string& key, int dmax) {
    const char* dir = std::getenv("HIGGS_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir) / (key + ".txt"));
    if (!in) return std::nullopt;
    std::vector<ScalarExpr> out;
    std::string line;
    try {
        while (std::getline(in, line) && static_cast<int>(out.size()) <= dmax) out.push_back(ScalarExpr::parse(line));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (static_cast<int>(out.size()) <= dmax) return std::nullopt;
    return out;
}

void storeDisk(const std::string& key, const std::vector<ScalarExpr>& xs) {
    const char* dir = std::getenv("HIGGS_CACHE_DIR");
    if (!dir || !*dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = std::filesystem::path(dir) / (key + ".txt");
    const auto tmp = path.string() + ".tmp" + std::to_string(std::hash<std::thread::id>()(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        if (!out) return;
        for (const auto& x : xs) out << x.toString() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace

MvRatFun buildL(int n, const CurveModel& curve) {
    checkRank(n);
    return MvRatFun(cachedL(n, curve.genus()).toRatFun(), n);
}

MvRatFun resLambda(const Partition& lambda, const CurveModel& curve) {
    return MvRatFun(resFactored(lambda, curve.genus()).toRatFun(), lambda.length());
}

MvRatFun Hlambda(const Partition& lambda, const CurveModel& curve) {
    if (lambda.empty()) return MvRatFun(RatFun(1), 1);
    return inZ1(hFactored(lambda, curve.genus()));
}

MvRatFun Jlambda(const Partition& lambda, const CurveModel& curve) { return inZ1(jFactored(lambda, curve)); }

ScalarExpr lambdaPrefactor(const Partition& lambda, long l, int genus) {
    return scalar::minusVPow((2L * genus - 2 - l) * lambda.pairing());
}

long lambdaDegreeShift(const Partition& lambda, long l) {
    long n = 0;
    for (int p : lambda.parts()) n += static_cast<long>(p) * (p - 1) / 2;
    return -l * n;
}

LambdaTerm lambdaTerm(const Partition& lambda, const CurveModel& curve, long l) {
    return {lambda, Jlambda(lambda, curve), Hlambda(lambda, curve), lambdaPrefactor(lambda, l, curve.genus())};
}

std::vector<ScalarExpr> lambdaExpansion(const Partition& lambda, const CurveModel& curve, int dmax) {
    if (dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
    static std::mutex mu;
    static std::map<std::string, std::vector<ScalarExpr>> cache;
    const std::string key = cacheKey(lambda, curve.genus());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && static_cast<int>(it->second.size()) > dmax)
            return {it->second.begin(), it->second.begin() + dmax + 1};
    }
    std::vector<ScalarExpr> xs;
    if (auto disk = loadDisk(key, dmax)) {
        xs = std::move(*disk);
    } else {
        xs = computeExpansion(lambda, curve, dmax);
        storeDisk(key, xs);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (slot.size() < xs.size()) slot = xs;
    return {xs.begin(), xs.begin() + dmax + 1};
}

GradedSeries nilBundleSeries(long l, const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts) {
    if (l > 0) throw std::invalid_argument("the closed formula needs deg D = l <= 0");
    if (rmax < 0 || rmax > kMaxEngineRank) throw std::invalid_argument("rmax must be in [0, " + std::to_string(kMaxEngineRank) + "]");
    if (dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
    std::vector<Partition> lambdas;
    for (int n = 1; n <= rmax; ++n)
        for (const auto& p : partitionsOf(n)) lambdas.push_back(p);

    std::vector<std::vector<ScalarExpr>> results(lambdas.size());
    std::vector<std::exception_ptr> errors(lambdas.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lambdas.size();) {
            try {
                const long room = dmax - lambdaDegreeShift(lambdas[i], l);
                if (room >= 0) results[i] = lambdaExpansion(lambdas[i], curve, static_cast<int>(room));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, std::max<int>(1, static_cast<int>(lambdas.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    GradedSeries out = GradedSeries::one(rmax, dmax, curve.numE());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const ScalarExpr pre = lambdaPrefactor(lambdas[i], l, curve.genus());
        const int r = lambdas[i].size();
        const long shift = lambdaDegreeShift(lambdas[i], l);
        for (std::size_t k = 0; k < results[i].size(); ++k) {
            const int d = static_cast<int>(k + shift);
            if (!results[i][k].isZero()) out.set(r, d, out.at(r, d) + pre * results[i][k]);
        }
    }
    return out;
}

GradedSeries torsionFactor(const CurveModel& curve, int rmax, int dmax) {
    GradedSeries t(rmax, dmax, curve.numE());
    const ScalarExpr c = curve.pointCount() / (scalar::q() - 1);
    for (int d = 1; d <= dmax; ++d) t.set(0, d, c);
    return plethExp(t);
}

GradedSeries cohNilSeries(long l, const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts) {
    return nilBundleSeries(l, curve, rmax, dmax, opts) * torsionFactor(curve, rmax, dmax);
}

}  // namespace higgs
