#include "qdeform/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdeform/analysis.hpp"
#include "qdeform/version.hpp"

namespace qdeform {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Error: return "error";
    }
    return "?";
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skip") return CheckStatus::Skip;
    if (s == "error") return CheckStatus::Error;
    throw std::invalid_argument("unknown check status '" + s + "'");
}

struct State {
    DeformationParams params;
    VerifyOptions opts;
    GroupTable table = GroupTable::quaternion();

    std::optional<ValidationReport> validation;
    std::shared_ptr<const DeformationContext> ctx;
    std::optional<StructureConstants> sc;
    std::optional<PsiTable> psi;
    std::optional<BlockDecomposition> blocks;
    std::optional<SeparabilityOutcome> cert;
    std::optional<CrossedProductData> crossed;
    std::optional<SplitReport> split;
    std::optional<EtaleReport> etale;

    const ValidationReport& ensure_validation() {
        if (!validation) validation = validate(params);
        return *validation;
    }
    const std::shared_ptr<const DeformationContext>& ensure_ctx() {
        if (!ctx) ctx = DeformationContext::make(params);
        return ctx;
    }
    const StructureConstants& ensure_sc() {
        if (!sc) sc = StructureConstants::compute(ensure_ctx(), opts.policy);
        return *sc;
    }
    const PsiTable& ensure_psi() {
        if (!psi) psi = PsiTable::extract(ensure_sc(), opts.psi_order, opts.policy);
        return *psi;
    }
    const BlockDecomposition& ensure_blocks() {
        if (!blocks) blocks = decompose_blocks(ensure_ctx());
        return *blocks;
    }
    const SeparabilityOutcome& ensure_certificate() {
        if (!cert) cert = separability_certificate(to_algebra_table(ensure_sc()));
        return *cert;
    }
};

using CheckFn = std::function<std::pair<bool, std::string>(State&)>;

struct CheckDef {
    std::string id;
    std::string claim;
    std::vector<std::string> deps;
    CheckFn fn;
};

std::string mask_str(const std::array<Gf2, 8>& bits) {
    std::string s;
    for (std::size_t i = 0; i < 8; ++i)
        if (bits[i] == Gf2::one()) {
            if (!s.empty()) s += "+";
            s += GroupTable::slot_name(i);
        }
    return s.empty() ? "0" : s;
}

std::pair<bool, std::string> specializes_to(const QuotientElement& v, std::size_t slot) {
    std::array<Gf2, 8> bits{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (v.coords()[i].valuation() < 0)
            return {false, "coordinate " + std::to_string(i) + " has negative valuation"};
        bits[i] = v.coords()[i].at_zero();
    }
    std::array<Gf2, 8> expected{};
    expected[slot] = Gf2::one();
    return {bits == expected, "t=0 value " + mask_str(bits)};
}

std::vector<CheckDef> build_checks() {
    std::vector<CheckDef> defs;

    defs.push_back({"params-valid",
                    "a and z are nonzero non-units; b, c, d are 1-units with c != d; "
                    "(x+w)(x+c)(x+d) = x*pi(x)+a; pi irreducible",
                    {},
                    [](State& st) {
                        const ValidationReport& v = st.ensure_validation();
                        return std::make_pair(v.ok(), v.ok() ? "all hypotheses hold"
                                                             : "\n" + v.str());
                    }});

    defs.push_back({"modulus-separable",
                    "gcd(p_t, p_t') = 1, while p_0 = x^4+1 is inseparable",
                    {"params-valid"},
                    [](State& st) {
                        const XPoly& pt = st.ensure_ctx()->ring()->modulus();
                        bool sep = is_separable(pt);
                        // t = 0 specialization of the modulus
                        bool spec_ok = true;
                        for (std::size_t i = 0; i <= 4; ++i) {
                            if (pt.coeff(i).valuation() < 0) spec_ok = false;
                        }
                        XPoly x4_1 = XPoly::monomial(Rational::one(), 4) + XPoly::one();
                        if (spec_ok)
                            for (std::size_t i = 0; i <= 4; ++i) {
                                Gf2 got = pt.coeff(i).at_zero();
                                Gf2 want = x4_1.coeff(i).is_zero() ? Gf2::zero() : Gf2::one();
                                if (!(got == want)) spec_ok = false;
                            }
                        bool undeformed_insep = !is_separable(x4_1);
                        bool ok = sep && spec_ok && undeformed_insep;
                        return std::make_pair(
                            ok, std::string("p_t separable: ") + (sep ? "yes" : "no") +
                                    "; specializes to x^4+1: " + (spec_ok ? "yes" : "no") +
                                    "; x^4+1 inseparable: " + (undeformed_insep ? "yes" : "no"));
                    }});

    defs.push_back({"pi-irreducible",
                    "pi = x^2+a*x+b has no 1-unit root modulo t^2, escalating to t^8 "
                    "when the shallow search is inconclusive",
                    {"params-valid"},
                    [](State& st) {
                        XPoly pi = build_pi(st.params);
                        RootSearch r = irreducibility_check(pi, 2);
                        std::string detail = "t^2: " + r.detail;
                        unsigned cap = std::min(8u, std::max(2u, st.params.series_precision));
                        if (r.status == RootSearchStatus::Unknown && cap > 2) {
                            r = irreducibility_check(pi, cap);
                            detail += "; t^" + std::to_string(cap) + ": " + r.detail;
                        }
                        return std::make_pair(r.status == RootSearchStatus::Irreducible,
                                              detail);
                    }});

    defs.push_back({"idempotents",
                    "e_i^2 = e_i, e_i e_j = 0 for i != j, e1+e2+e3 = 1, "
                    "multiplication ranks (2,1,1)",
                    {"params-valid"},
                    [](State& st) {
                        const auto& ctx = st.ensure_ctx();
                        IdempotentChecks c = check_idempotents(ctx->ring(), ctx->idempotents());
                        std::ostringstream os;
                        os << "ranks (" << c.rank[0] << "," << c.rank[1] << "," << c.rank[2]
                           << ")";
                        return std::make_pair(c.ok(), os.str());
                    }});

    defs.push_back({"eta-well-defined",
                    "eta(p_t(x)) = 0 in the quotient; eta maps each of pi, x+c, x+d "
                    "into the ideal it generates",
                    {"params-valid"},
                    [](State& st) {
                        const auto& ctx = st.ensure_ctx();
                        EtaMembershipReport r = eta_well_defined(*ctx->eta(), st.params);
                        std::string d = std::string("quotient: ") +
                                        (r.modulus_maps_to_zero ? "0" : "nonzero") +
                                        "; factors pi/c/d: " + (r.pi_factor ? "y" : "n") +
                                        (r.c_factor ? "y" : "n") + (r.d_factor ? "y" : "n");
                        return std::make_pair(r.ok(), d);
                    }});

    defs.push_back({"eta-involution",
                    "eta o eta is the identity on the whole 4-dimensional algebra",
                    {"params-valid"},
                    [](State& st) {
                        return std::make_pair(st.ensure_ctx()->eta()->is_involution(),
                                              std::string("checked on the basis"));
                    }});

    defs.push_back({"eta-fixes-idempotents",
                    "eta(e_i) = e_i for i = 1,2,3 and eta(x e1) = (x+a) e1",
                    {"params-valid", "idempotents"},
                    [](State& st) {
                        const auto& ctx = st.ensure_ctx();
                        const auto& eta = *ctx->eta();
                        const IdempotentTriple& e = ctx->idempotents();
                        bool fixes = eta.apply(e.e1) == e.e1 && eta.apply(e.e2) == e.e2 &&
                                     eta.apply(e.e3) == e.e3;
                        QuotientElement xe1 = ctx->ring()->x() * e.e1;
                        QuotientElement expected =
                            (ctx->ring()->x() + ctx->ring()->one().scaled(st.params.a)) * e.e1;
                        bool shift = eta.apply(xe1) == expected;
                        bool nontrivial = !(eta.apply(xe1) == xe1);
                        return std::make_pair(fixes && shift && nontrivial,
                                              std::string("fixed points and the shift on the "
                                                          "e1 component both verified"));
                    }});

    defs.push_back({"eta-specializes-t0",
                    "eta(x) has coordinates in k[[t]] and specializes at t=0 to x^3",
                    {"params-valid"},
                    [](State& st) {
                        return specializes_to(st.ensure_ctx()->eta()->generator_image(), 3);
                    }});

    defs.push_back({"qt-central",
                    "q_t commutes with the generators x and y",
                    {"params-valid"},
                    [](State& st) {
                        return std::make_pair(is_central(st.ensure_ctx()->qt()),
                                              std::string("both commutators vanish"));
                    }});

    defs.push_back({"qt-decomposition",
                    "q_t = (y^2+b)e1 + (y^2+zay+c(c+a))e2 + (y^2+zay+d(d+a))e3, "
                    "and the identity survives multiplication by each e_i",
                    {"params-valid", "idempotents"},
                    [](State& st) {
                        const auto& ctx = st.ensure_ctx();
                        const auto& p = st.params;
                        const auto& eta = ctx->eta();
                        const IdempotentTriple& e = ctx->idempotents();
                        Rational za = p.z * p.a;
                        auto bracket = [&](const QuotientElement& ei, const Rational& lin,
                                           const Rational& konst) {
                            return SkewPoly(eta, {ei.scaled(konst), ei.scaled(lin), ei});
                        };
                        SkewPoly b1 = bracket(e.e1, Rational::zero(), p.b);
                        SkewPoly b2 = bracket(e.e2, za, p.c * (p.c + p.a));
                        SkewPoly b3 = bracket(e.e3, za, p.d * (p.d + p.a));
                        bool sum_ok = (b1 + b2 + b3) == ctx->qt();
                        bool parts_ok = true;
                        const std::array<const QuotientElement*, 3> es{&e.e1, &e.e2, &e.e3};
                        const std::array<const SkewPoly*, 3> bs{&b1, &b2, &b3};
                        for (std::size_t i = 0; i < 3; ++i) {
                            SkewPoly ei = SkewPoly::constant(eta, *es[i]);
                            if (!((ctx->qt() * ei) == (*bs[i] * ei))) parts_ok = false;
                        }
                        return std::make_pair(sum_ok && parts_ok,
                                              std::string("sum identity and all three "
                                                          "projections hold"));
                    }});

    defs.push_back({"qt-specializes-t0",
                    "q_t at t=0 equals y^2 + x^2",
                    {"params-valid"},
                    [](State& st) {
                        const SkewPoly& qt = st.ensure_ctx()->qt();
                        if (qt.degree() != 2)
                            return std::make_pair(false, std::string("degree != 2"));
                        auto [ok0, d0] = specializes_to(qt.coeff(0), 2);  // x^2
                        // linear coefficient must vanish at t=0
                        bool ok1 = true;
                        QuotientElement lin = qt.coeff(1);
                        for (const Rational& r : lin.coords()) {
                            if (r.valuation() < 0) ok1 = false;
                            else if (!(r.at_zero() == Gf2::zero())) ok1 = false;
                        }
                        bool ok2 = qt.coeff(2) == st.ensure_ctx()->ring()->one();
                        return std::make_pair(ok0 && ok1 && ok2,
                                              "constant term at t=0: " + d0);
                    }});

    defs.push_back({"flatness",
                    "all 512 structure-constant coordinates have t-adic valuation >= 0",
                    {"params-valid"},
                    [](State& st) {
                        auto viol = st.ensure_sc().flatness_violations();
                        if (viol.empty())
                            return std::make_pair(true, std::string("64 products scanned"));
                        std::ostringstream os;
                        os << viol.size() << " violating coordinates, first at product ("
                           << GroupTable::slot_name(viol[0].i) << ", "
                           << GroupTable::slot_name(viol[0].j) << ") coordinate "
                           << viol[0].coord << " = " << viol[0].value.str();
                        return std::make_pair(false, os.str());
                    }});

    defs.push_back({"group-table-t0",
                    "all 64 basis products specialize at t=0 to the quaternion group table",
                    {"flatness"},
                    [](State& st) {
                        TableComparison cmp = specialize_at_zero(st.ensure_sc(), st.table);
                        if (cmp.match)
                            return std::make_pair(true, std::string("64/64 products match"));
                        std::ostringstream os;
                        os << cmp.mismatches.size() << " mismatches, first at ("
                           << GroupTable::slot_name(cmp.mismatches[0].i) << ", "
                           << GroupTable::slot_name(cmp.mismatches[0].j) << ")";
                        return std::make_pair(false, os.str());
                    }});

    defs.push_back({"associativity",
                    "(u v) w = u (v w) exactly on all 512 basis triples",
                    {"params-valid"},
                    [](State& st) {
                        AssociativityReport r = associativity_check(st.ensure_ctx(),
                                                                    st.opts.policy);
                        return std::make_pair(r.ok, r.ok ? "512/512 triples"
                                                         : "first failure " + r.first_failure);
                    }});

    defs.push_back({"psi-cocycle",
                    "psi_1 satisfies the first-order cocycle identity on all 512 triples; "
                    "psi_i(x^a, x^b) = 0 whenever a+b < 4",
                    {"flatness"},
                    [](State& st) {
                        const PsiTable& psi = st.ensure_psi();
                        CocycleReport r = cocycle_check(psi, st.table, st.opts.policy);
                        bool degrees_ok = true;
                        for (std::size_t a = 0; a < 4; ++a)
                            for (std::size_t b = 0; b < 4; ++b) {
                                if (a + b >= 4) continue;
                                for (unsigned o = 1; o <= psi.max_order(); ++o)
                                    if (psi.psi(a, b, o) != 0) degrees_ok = false;
                            }
                        std::string d = r.ok ? "512/512 triples" : "first failure " +
                                                                       r.first_failure;
                        d += degrees_ok ? "; low sigma-powers undeformed"
                                        : "; unexpected psi on low sigma-powers";
                        return std::make_pair(r.ok && degrees_ok, d);
                    }});

    defs.push_back({"blocks",
                    "e_i are central in the 8-dim algebra; block dimensions (4,2,2); "
                    "cross-block products vanish",
                    {"params-valid", "idempotents", "qt-central"},
                    [](State& st) {
                        const BlockDecomposition& b = st.ensure_blocks();
                        std::ostringstream os;
                        os << "dims (" << b.dims()[0] << "," << b.dims()[1] << ","
                           << b.dims()[2] << ")";
                        return std::make_pair(b.ok(), os.str());
                    }});

    defs.push_back({"block-center",
                    "the e1 block has a 1-dimensional center; the e2 and e3 blocks are "
                    "their own centers",
                    {"blocks"},
                    [](State& st) {
                        const BlockDecomposition& b = st.ensure_blocks();
                        CenterReport c1 = center_of_block(b.blocks[0]);
                        CenterReport c2 = center_of_block(b.blocks[1]);
                        CenterReport c3 = center_of_block(b.blocks[2]);
                        std::ostringstream os;
                        os << "center dims (" << c1.dim << "," << c2.dim << "," << c3.dim
                           << ")";
                        return std::make_pair(c1.dim == 1 && c2.dim == 2 && c3.dim == 2,
                                              os.str());
                    }});

    defs.push_back({"separability-certificate",
                    "the 64-unknown linear system for a separability idempotent is "
                    "solvable, and the solution verifies on substitution",
                    {"flatness"},
                    [](State& st) {
                        const SeparabilityOutcome& cert = st.ensure_certificate();
                        if (!cert.feasible)
                            return std::make_pair(false,
                                                  std::string("system proved infeasible"));
                        bool verified = verify_separability(to_algebra_table(st.ensure_sc()),
                                                            cert.tensor, st.opts.policy);
                        std::size_t nonzero = 0;
                        for (const Rational& r : cert.tensor)
                            if (!r.is_zero()) ++nonzero;
                        std::ostringstream os;
                        os << "rank " << cert.rank << ", " << nonzero
                           << " nonzero tensor entries, substitution "
                           << (verified ? "verifies" : "FAILS");
                        return std::make_pair(verified, os.str());
                    }});

    defs.push_back({"separability-negative-control",
                    "the same solver proves the undeformed group algebra of Q8 over GF(2) "
                    "admits no separability idempotent",
                    {},
                    [](State& st) {
                        SeparabilityOutcome out =
                            separability_certificate(group_algebra_table(st.table));
                        return std::make_pair(!out.feasible,
                                              out.feasible
                                                  ? std::string("unexpected certificate found")
                                                  : std::string("system infeasible, as it "
                                                                "must be"));
                    }});

    defs.push_back({"crossed-product",
                    "u^2 + a u + b e1 = 0, v^2 = b e1, v u = (u + a e1) v, with "
                    "cocycle values f(1,.) = e1 and f(tau,tau) = b e1",
                    {"blocks"},
                    [](State& st) {
                        if (!st.crossed) st.crossed = crossed_product_relations(st.ensure_ctx());
                        const CrossedProductData& c = *st.crossed;
                        return std::make_pair(c.ok(), c.ok() ? "all relations hold"
                                                             : c.failed());
                    }});

    defs.push_back({"split-over-k",
                    "left multiplication embeds the e1 block multiplicatively into "
                    "M_2(K), K = F[s]/<pi(s)>, with 4 K-independent images",
                    {"crossed-product", "pi-irreducible"},
                    [](State& st) {
                        if (!st.split) st.split = split_block_over_k(st.ensure_ctx());
                        const SplitReport& r = *st.split;
                        std::ostringstream os;
                        os << "multiplicative " << (r.multiplicative_ok ? "yes" : "no")
                           << ", K-independent " << (r.k_independent ? "yes" : "no")
                           << ", F-rank " << r.f_rank << ", image of u satisfies pi "
                           << (r.u_satisfies_pi ? "yes" : "no");
                        return std::make_pair(r.ok(), os.str());
                    }});

    defs.push_back({"etale",
                    "y has minimal polynomials y^2+zay+c(c+a) and y^2+zay+d(d+a) on the "
                    "e2/e3 blocks, both separable",
                    {"blocks"},
                    [](State& st) {
                        if (!st.etale) st.etale = etale_check(st.ensure_ctx());
                        const EtaleReport& r = *st.etale;
                        return std::make_pair(r.ok(),
                                              "minimal polynomials " + r.block2.min_poly.str("y") +
                                                  " and " + r.block3.min_poly.str("y"));
                    }});

    defs.push_back({"dimension-vector",
                    "simple-component dimensions over the closure are [1,1,1,1,2], "
                    "matching the complex group algebra of Q8",
                    {"split-over-k", "etale", "separability-certificate"},
                    [](State& st) {
                        if (!st.split) st.split = split_block_over_k(st.ensure_ctx());
                        if (!st.etale) st.etale = etale_check(st.ensure_ctx());
                        st.ensure_certificate();
                        DimensionVector dv =
                            dimension_vector(*st.split, *st.etale, *st.cert);
                        std::ostringstream os;
                        os << "[";
                        for (std::size_t i = 0; i < dv.dims.size(); ++i)
                            os << (i ? "," : "") << dv.dims[i];
                        os << "], sum of squares " << dv.sum_of_squares;
                        return std::make_pair(dv.matches_complex_q8 && dv.sum_of_squares == 8,
                                              os.str());
                    }});

    return defs;
}

}  // namespace

std::vector<std::string> verification_check_ids() {
    std::vector<std::string> ids;
    for (const CheckDef& d : build_checks()) ids.push_back(d.id);
    return ids;
}

bool VerificationReport::all_pass() const {
    if (checks.empty()) return false;
    for (const CheckResult& c : checks)
        if (c.status != CheckStatus::Pass) return false;
    return true;
}

VerificationReport run_verification(const DeformationParams& params,
                                    const VerifyOptions& options) {
    std::vector<CheckDef> defs = build_checks();

    for (const std::string& id : options.only) {
        bool known = false;
        for (const CheckDef& d : defs) known = known || d.id == id;
        if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
    }

    State st;
    st.params = params;
    st.opts = options;
    // repeated filter names must not duplicate report entries
    std::vector<std::string> filter;
    for (const std::string& id : options.only)
        if (std::find(filter.begin(), filter.end(), id) == filter.end())
            filter.push_back(id);
    st.opts.only = filter;

    VerificationReport rep;
    rep.tool = kToolName;
    rep.version = kToolVersion;
    rep.precision = params.series_precision;
    rep.params_text = params.str();

    std::vector<std::string> passed;
    bool filtered = !st.opts.only.empty();
    for (CheckDef& def : defs) {
        if (filtered) {
            bool wanted = false;
            for (const std::string& id : st.opts.only) wanted = wanted || id == def.id;
            if (!wanted) continue;
        }

        CheckResult res;
        res.id = def.id;
        res.claim = def.claim;

        std::string missing;
        if (!filtered)
            for (const std::string& dep : def.deps) {
                bool ok = false;
                for (const std::string& p : passed) ok = ok || p == dep;
                if (!ok) missing = dep;
            }

        auto start = std::chrono::steady_clock::now();
        if (!missing.empty()) {
            res.status = CheckStatus::Skip;
            res.detail = "prerequisite '" + missing + "' did not pass";
        } else {
            try {
                auto [ok, detail] = def.fn(st);
                res.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
                res.detail = detail;
            } catch (const std::exception& e) {
                res.status = CheckStatus::Error;
                res.detail = e.what();
            }
        }
        auto stop = std::chrono::steady_clock::now();
        res.elapsed_us =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        if (res.status == CheckStatus::Pass) passed.push_back(def.id);
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["tool"] = tool;
    j["version"] = version;
    j["precision"] = precision;
    j["params"] = params_text;
    j["verdict"] = all_pass() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["claim"] = c.claim;
        jc["status"] = to_string(c.status);
        jc["detail"] = c.detail;
        if (include_timing) jc["elapsed_us"] = c.elapsed_us;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VerificationReport rep;
    rep.tool = j.at("tool").get<std::string>();
    rep.version = j.at("version").get<std::string>();
    rep.precision = j.at("precision").get<unsigned>();
    rep.params_text = j.at("params").get<std::string>();
    for (const nlohmann::json& jc : j.at("checks")) {
        CheckResult c;
        c.id = jc.at("id").get<std::string>();
        c.claim = jc.at("claim").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        c.detail = jc.value("detail", "");
        c.elapsed_us = jc.value("elapsed_us", std::int64_t{0});
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << tool << " " << version << " verification report\n";
    os << "precision " << precision << "\n";
    os << "parameters:\n";
    std::istringstream ps(params_text);
    std::string line;
    while (std::getline(ps, line)) os << "  " << line << "\n";
    os << "\n";
    for (const CheckResult& c : checks) {
        os << "  [" << to_string(c.status) << "]";
        for (std::size_t i = to_string(c.status).size(); i < 5; ++i) os << " ";
        os << " " << c.id;
        for (std::size_t i = c.id.size(); i < 32; ++i) os << " ";
        os << " " << (c.elapsed_us / 1000) << "." << (c.elapsed_us / 100) % 10 << " ms\n";
        os << "         claim: " << c.claim << "\n";
        if (!c.detail.empty()) os << "         " << c.detail << "\n";
    }
    os << "\nverdict: " << (all_pass() ? "PASS" : "FAIL") << " (" << checks.size()
       << " checks)\n";
    return os.str();
}

}  // namespace qdeform
