#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "higgs/residue_engine.hpp"

namespace higgs {

/// A request outside the regime covered by the formulas (as opposed to a
/// malformed request).
class UnsupportedRegime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Kind { INil, IPlus, OmegaPlus, HPlus, Omega, H, APlus, ModuliVolume, StackVolume };
enum class Provenance { Direct, StableRegion, ExtendedByPeriodicity };

std::string kindName(Kind k);
Kind parseKind(const std::string& s);
std::string provenanceName(Provenance p);
Provenance parseProvenance(const std::string& s);

struct TableEntry {
    ScalarExpr value;
    Provenance provenance = Provenance::Direct;
    friend bool operator==(const TableEntry& a, const TableEntry& b) {
        return a.value == b.value && a.provenance == b.provenance;
    }
};

struct InvariantTable {
    long l = 0;
    int genus = 0;
    bool canonical = false;
    Kind kind = Kind::INil;
    std::map<std::pair<int, int>, TableEntry> entries;  // keyed by (r, d)
    /// Numeric tables: q0 > 0, zeta = (c_0, ..., c_2g), values a + b v with
    /// v = sqrt(q0). Symbolic tables keep q0 = 0.
    long q0 = 0;
    std::vector<long> zeta;

    /// Rank >= 1 part of a series, all marked Direct.
    static InvariantTable fromSeries(const GradedSeries& s, long l, int genus, bool canonical, Kind kind);
    const ScalarExpr& at(int r, int d) const;

    std::string toJson() const;
    static InvariantTable fromJson(const std::string& text);
    /// Header "l,r,d,kind,value,provenance"; values quoted.
    std::string toCsv() const;

    friend bool operator==(const InvariantTable& a, const InvariantTable& b) {
        return a.l == b.l && a.genus == b.genus && a.canonical == b.canonical && a.kind == b.kind &&
               a.entries == b.entries && a.q0 == b.q0 && a.zeta == b.zeta;
    }
};

/// Omega+ = (q - 1) Log(I).
GradedSeries omegaFromI(const GradedSeries& I);
/// Slope-wise Exp(Omega+ / (q - 1)).
GradedSeries hPlusFromOmega(const GradedSeries& omegaPlus);

/// Checks the divisor data: canonical forces l = 2g - 2; l < 2g - 2 and
/// non-canonical l = 2g - 2 throw UnsupportedRegime.
void checkDivisor(long l, bool canonical, int genus);

/// Omega+_D for deg D = l > 2g - 2 (via D -> K - D, nilpotent side) or D = K
/// (q times Omega+_{0,nil}).
GradedSeries omegaPlusForDivisor(long l, bool canonical, const CurveModel& curve, int rmax, int dmax,
                                 const EngineOptions& opts = {});

/// A+ = (q - 1) Log(I+_{0,nil}).
GradedSeries aPlusSeries(const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts = {});
InvariantTable aPlusFromNil(const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts = {});
/// Solves Exp(A / (q - 1)) = nil for A degree by degree, using only Exp.
GradedSeries aPlusByPeeling(const GradedSeries& nil);

/// Smallest d' = d (mod r) with d' > C(r,2) l.
int stableRepresentative(int r, int d, long l);
/// Fills H (or Omega) from H+ (or Omega+) using the stable region and
/// periodicity in d. Throws std::invalid_argument naming the needed d_max.
InvariantTable stabilizeAndExtend(const GradedSeries& plus, long l, int genus, bool canonical, Kind kind);

/// [M_D(r,d)] = (q - 1)(-v)^{l r^2} H_D(r,d): the volume of the moduli space
/// with the scalar automorphisms removed.
InvariantTable moduliVolume(const InvariantTable& h);
/// (-v)^{l r^2} H_D(r,d), the stacky volume.
InvariantTable stackVolume(const InvariantTable& h);

/// Evaluates every entry on a numeric curve: e_k from its zeta numerator and
/// v = sqrt(q0), kept as a + b v.
InvariantTable specializeTable(const InvariantTable& t, const CurveModel& numericCurve);

/// One entry point for every kind.
InvariantTable computeTable(Kind kind, long l, bool canonical, const CurveModel& curve, int rmax, int dmax,
                            const EngineOptions& opts = {});

}  // namespace higgs
