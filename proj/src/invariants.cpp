#include "higgs/invariants.hpp"

#include <json.hpp>
#include <sstream>

namespace higgs {

namespace {

const std::pair<Kind, const char*> kKindNames[] = {
    {Kind::INil, "inil"},   {Kind::IPlus, "iplus"}, {Kind::OmegaPlus, "omegaplus"},
    {Kind::HPlus, "hplus"}, {Kind::Omega, "omega"}, {Kind::H, "h"},
    {Kind::APlus, "aplus"}, {Kind::ModuliVolume, "moduli-volume"}, {Kind::StackVolume, "stack-volume"},
};

const std::pair<Provenance, const char*> kProvenanceNames[] = {
    {Provenance::Direct, "direct"},
    {Provenance::StableRegion, "stable-region"},
    {Provenance::ExtendedByPeriodicity, "extended-by-periodicity"},
};

ScalarExpr qMinusOne() { return scalar::q() - 1; }

}  // namespace

std::string kindName(Kind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    throw std::logic_error("unknown kind");
}

Kind parseKind(const std::string& s) {
    for (const auto& [kind, name] : kKindNames)
        if (s == name) return kind;
    throw std::invalid_argument("unknown kind '" + s + "'");
}

std::string provenanceName(Provenance p) {
    for (const auto& [prov, name] : kProvenanceNames)
        if (prov == p) return name;
    throw std::logic_error("unknown provenance");
}

Provenance parseProvenance(const std::string& s) {
    for (const auto& [prov, name] : kProvenanceNames)
        if (s == name) return prov;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

InvariantTable InvariantTable::fromSeries(const GradedSeries& s, long l, int genus, bool canonical, Kind kind) {
    InvariantTable t{l, genus, canonical, kind, {}, 0, {}};
    for (int r = 1; r <= s.rmax(); ++r)
        for (int d = 0; d <= s.dmax(); ++d) t.entries[{r, d}] = {s.at(r, d), Provenance::Direct};
    return t;
}

const ScalarExpr& InvariantTable::at(int r, int d) const {
    auto it = entries.find({r, d});
    if (it == entries.end()) throw std::out_of_range("no table entry (" + std::to_string(r) + "," + std::to_string(d) + ")");
    return it->second.value;
}

std::string InvariantTable::toJson() const {
    nlohmann::ordered_json j;
    j["l"] = l;
    j["genus"] = genus;
    j["canonical"] = canonical;
    j["kind"] = kindName(kind);
    if (q0 > 0) {
        j["q0"] = q0;
        j["zeta"] = zeta;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, e] : entries) {
        nlohmann::ordered_json row;
        row["l"] = l;
        row["r"] = key.first;
        row["d"] = key.second;
        row["kind"] = kindName(kind);
        row["value"] = e.value.toString();
        row["provenance"] = provenanceName(e.provenance);
        arr.push_back(std::move(row));
    }
    j["entries"] = std::move(arr);
    return j.dump(2) + "\n";
}

InvariantTable InvariantTable::fromJson(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    InvariantTable t;
    t.l = j.at("l").get<long>();
    t.genus = j.at("genus").get<int>();
    t.canonical = j.at("canonical").get<bool>();
    t.kind = parseKind(j.at("kind").get<std::string>());
    if (j.contains("q0")) {
        t.q0 = j.at("q0").get<long>();
        t.zeta = j.at("zeta").get<std::vector<long>>();
    }
    for (const auto& row : j.at("entries"))
        t.entries[{row.at("r").get<int>(), row.at("d").get<int>()}] = {
            ScalarExpr::parse(row.at("value").get<std::string>()), parseProvenance(row.at("provenance").get<std::string>())};
    return t;
}

std::string InvariantTable::toCsv() const {
    std::ostringstream os;
    os << "l,r,d,kind,value,provenance\n";
    for (const auto& [key, e] : entries)
        os << l << ',' << key.first << ',' << key.second << ',' << kindName(kind) << ",\"" << e.value.toString() << "\","
           << provenanceName(e.provenance) << '\n';
    return os.str();
}

GradedSeries omegaFromI(const GradedSeries& I) { return plethLog(I).scaled(qMinusOne()); }

GradedSeries hPlusFromOmega(const GradedSeries& omegaPlus) {
    if (!omegaPlus.at(0, 0).isZero()) throw std::invalid_argument("Omega+ must have zero constant term");
    return slopeExpAll(omegaPlus);
}

void checkDivisor(long l, bool canonical, int genus) {
    const long k = 2L * genus - 2;
    if (canonical && l != k)
        throw std::invalid_argument("the canonical divisor has degree 2g-2 = " + std::to_string(k));
    if (l < k) throw UnsupportedRegime("unsupported degree: l = " + std::to_string(l) + " < 2g-2 = " + std::to_string(k));
    if (l == k && !canonical) throw UnsupportedRegime("unsupported degree: pipeline has no route for non-canonical divisors of degree 2g-2");
}

GradedSeries omegaPlusForDivisor(long l, bool canonical, const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts) {
    const int g = curve.genus();
    checkDivisor(l, canonical, g);
    if (canonical) return omegaFromI(nilBundleSeries(0, curve, rmax, dmax, opts)).scaled(scalar::q());
    return omegaFromI(nilBundleSeries(2L * g - 2 - l, curve, rmax, dmax, opts));
}

GradedSeries aPlusSeries(const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts) {
    return omegaFromI(nilBundleSeries(0, curve, rmax, dmax, opts));
}

InvariantTable aPlusFromNil(const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts) {
    return InvariantTable::fromSeries(aPlusSeries(curve, rmax, dmax, opts), 0, curve.genus(), false, Kind::APlus);
}

GradedSeries aPlusByPeeling(const GradedSeries& nil) {
    if (!nil.at(0, 0).isOne()) throw std::invalid_argument("series must start with 1");
    const ScalarExpr inv = qMinusOne().inverse();
    GradedSeries A(nil.rmax(), nil.dmax(), nil.numE());
    // The (r,d) coefficient of Exp(A/(q-1)) is A(r,d)/(q-1) plus terms built
    // from keys of smaller weight r + d, so each weight is solved in one go.
    for (int w = 1; w <= nil.rmax() + nil.dmax(); ++w) {
        const GradedSeries e = plethExp(A.scaled(inv));
        for (int r = 0; r <= std::min(w, nil.rmax()); ++r) {
            const int d = w - r;
            if (d > nil.dmax()) continue;
            A.set(r, d, (nil.at(r, d) - e.at(r, d)) * qMinusOne());
        }
    }
    return A;
}

int stableRepresentative(int r, int d, long l) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    const long bound = static_cast<long>(r) * (r - 1) / 2 * l;
    if (d > bound) {
        long dd = d;
        while (dd - r > bound && dd - r >= 0) dd -= r;
        return static_cast<int>(dd);
    }
    long dd = d;
    while (dd <= bound) dd += r;
    return static_cast<int>(dd);
}

InvariantTable stabilizeAndExtend(const GradedSeries& plus, long l, int genus, bool canonical, Kind kind) {
    if (kind != Kind::H && kind != Kind::Omega) throw std::invalid_argument("stabilization produces H or Omega tables");
    InvariantTable t{l, genus, canonical, kind, {}, 0, {}};
    int needed = 0;
    int neededRank = 0;
    for (int r = 1; r <= plus.rmax(); ++r)
        for (int d = 0; d <= plus.dmax(); ++d) {
            const long bound = static_cast<long>(r) * (r - 1) / 2 * l;
            if (d > bound) {
                t.entries[{r, d}] = {plus.at(r, d), Provenance::StableRegion};
                continue;
            }
            const int dd = stableRepresentative(r, d, l);
            if (dd > plus.dmax()) {
                if (dd > needed) {
                    needed = dd;
                    neededRank = r;
                }
                continue;
            }
            t.entries[{r, d}] = {plus.at(r, dd), Provenance::ExtendedByPeriodicity};
        }
    if (needed > 0)
        throw std::invalid_argument("window too small: rank " + std::to_string(neededRank) + " needs d_max >= " +
                                    std::to_string(needed));
    return t;
}

namespace {

InvariantTable volumeTable(const InvariantTable& h, Kind kind, bool rigidify) {
    if (h.kind != Kind::H) throw std::invalid_argument("volumes are computed from an H table");
    InvariantTable t = h;
    t.kind = kind;
    for (auto& [key, e] : t.entries) {
        const long r = key.first;
        e.value *= scalar::minusVPow(h.l * r * r);
        if (rigidify) e.value *= qMinusOne();
    }
    return t;
}

}  // namespace

InvariantTable moduliVolume(const InvariantTable& h) { return volumeTable(h, Kind::ModuliVolume, true); }
InvariantTable stackVolume(const InvariantTable& h) { return volumeTable(h, Kind::StackVolume, false); }

InvariantTable specializeTable(const InvariantTable& t, const CurveModel& numericCurve) {
    if (!numericCurve.isNumeric()) throw std::invalid_argument("specializeTable needs a numeric curve");
    if (numericCurve.genus() != t.genus) throw std::invalid_argument("curve genus does not match the table");
    InvariantTable out = t;
    out.q0 = numericCurve.q0();
    out.zeta = numericCurve.numeratorCoefficients();
    for (auto& [key, e] : out.entries) {
        const QuadraticValue x = numericCurve.specialize(e.value);
        e.value = ScalarExpr::rational(x.a) + ScalarExpr::rational(x.b) * scalar::v();
    }
    return out;
}

InvariantTable computeTable(Kind kind, long l, bool canonical, const CurveModel& curve, int rmax, int dmax,
                            const EngineOptions& opts) {
    const int g = curve.genus();
    switch (kind) {
    case Kind::INil:
        if (canonical && l != 2L * g - 2) throw std::invalid_argument("the canonical divisor has degree 2g-2");
        if (l > 0) throw UnsupportedRegime("unsupported degree: nilpotent counts need l <= 0");
        return InvariantTable::fromSeries(nilBundleSeries(l, curve, rmax, dmax, opts), l, g, canonical, kind);
    case Kind::IPlus: {
        // I+_D = I+_{K-D,nil} for l > 2g-2; I+_K = I+_0 = Exp(q A+ / (q - 1)).
        if (canonical || l == 0) {
            if (canonical) checkDivisor(l, canonical, g);
            const GradedSeries a = aPlusSeries(curve, rmax, dmax, opts);
            return InvariantTable::fromSeries(plethExp(a.scaled(scalar::q() / qMinusOne())), l, g, canonical, kind);
        }
        checkDivisor(l, canonical, g);
        return InvariantTable::fromSeries(nilBundleSeries(2L * g - 2 - l, curve, rmax, dmax, opts), l, g, canonical, kind);
    }
    case Kind::OmegaPlus:
        return InvariantTable::fromSeries(omegaPlusForDivisor(l, canonical, curve, rmax, dmax, opts), l, g, canonical, kind);
    case Kind::HPlus:
        return InvariantTable::fromSeries(hPlusFromOmega(omegaPlusForDivisor(l, canonical, curve, rmax, dmax, opts)), l, g,
                                          canonical, kind);
    case Kind::Omega:
        return stabilizeAndExtend(omegaPlusForDivisor(l, canonical, curve, rmax, dmax, opts), l, g, canonical, kind);
    case Kind::H:
        return stabilizeAndExtend(hPlusFromOmega(omegaPlusForDivisor(l, canonical, curve, rmax, dmax, opts)), l, g,
                                  canonical, kind);
    case Kind::APlus: {
        InvariantTable t = aPlusFromNil(curve, rmax, dmax, opts);
        t.l = l;
        t.canonical = canonical;
        return t;
    }
    case Kind::ModuliVolume:
    case Kind::StackVolume: {
        checkDivisor(l, canonical, g);
        const InvariantTable h = computeTable(Kind::H, l, canonical, curve, rmax, dmax, opts);
        return kind == Kind::ModuliVolume ? moduliVolume(h) : stackVolume(h);
    }
    }
    throw std::logic_error("unhandled kind");
}

}  // namespace higgs
