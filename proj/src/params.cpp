#include "qdeform/params.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qdeform/quotient.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdeform {

std::string DeformationParams::str() const {
    std::ostringstream os;
    os << "a = " << a.str() << "\n"
       << "b = " << b.str() << "\n"
       << "c = " << c.str() << "\n"
       << "d = " << d.str() << "\n"
       << "w = " << w.str() << "\n"
       << "z = " << z.str() << "\n"
       << "precision = " << series_precision << "\n";
    return os.str();
}

DeformationParams example_params() {
    DeformationParams p;
    p.a = Rational::parse("(t+t^2+t^3)/(1+t)");
    p.b = Rational::parse("1+t^2+t^3");
    p.c = Rational::parse("1/(1+t)");
    p.d = Rational::parse("1+t+t^2");
    p.w = Rational::parse("t");
    p.z = Rational::parse("t");
    p.series_precision = 16;
    return p;
}

bool ValidationReport::ok() const {
    for (const ValidationEntry& e : entries)
        if (!e.pass) return false;
    return true;
}

const ValidationEntry* ValidationReport::find(const std::string& name) const {
    for (const ValidationEntry& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const ValidationEntry& e : entries) {
        os << (e.pass ? "  ok    " : "  FAIL  ") << e.name;
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << "\n";
    }
    return os.str();
}

ValidationReport validate(const DeformationParams& p) {
    ValidationReport rep;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        rep.entries.push_back({std::move(name), pass, std::move(detail)});
    };

    add("a-nonzero", !p.a.is_zero());
    add("a-valuation", p.a.valuation() >= 1, "val(a) = " + p.a.valuation().str());
    add("b-one-unit", p.b.is_one_unit());
    add("c-one-unit", p.c.is_one_unit());
    add("d-one-unit", p.d.is_one_unit());
    add("c-neq-d", !(p.c == p.d));
    add("z-nonzero", !p.z.is_zero());
    add("z-valuation", p.z.valuation() >= 1, "val(z) = " + p.z.valuation().str());
    add("precision-positive", p.series_precision >= 1);

    // (x+w)(x+c)(x+d) = x*pi(x) + a, checked directly...
    XPoly xw({p.w, Rational::one()});
    XPoly xc({p.c, Rational::one()});
    XPoly xd({p.d, Rational::one()});
    XPoly lhs = xw * xc * xd;
    XPoly rhs = XPoly::x() * build_pi(p) + XPoly(p.a);
    add("cubic-identity", lhs == rhs,
        "(x+w)(x+c)(x+d) = " + lhs.str() + " vs x*pi(x)+a = " + rhs.str());

    // ...and through the coefficient system it is equivalent to.
    bool sys = (p.a == p.w + p.c + p.d) && (p.b == p.w * p.c + p.w * p.d + p.c * p.d) &&
               (p.w + p.c + p.d == p.w * p.c * p.d);
    add("coefficient-system", sys, "a = w+c+d, b = wc+wd+cd, w+c+d = wcd");

    // pi irreducible: residue search at N=2, escalating to N=8 if inconclusive.
    bool pre_ok = p.a.valuation() >= 1 && p.b.is_one_unit();
    if (!pre_ok) {
        add("pi-irreducible", false, "hypotheses on a, b not met; root search skipped");
    } else {
        unsigned cap = std::min<unsigned>(8, std::max<unsigned>(2, p.series_precision));
        RootSearch rs = irreducibility_check(build_pi(p), 2);
        if (rs.status == RootSearchStatus::Unknown && cap > 2)
            rs = irreducibility_check(build_pi(p), cap);
        add("pi-irreducible", rs.status == RootSearchStatus::Irreducible, rs.detail);
    }
    return rep;
}

namespace {

Gf2Poly poly_from_index(std::uint64_t bits) { return Gf2Poly::from_bits(bits); }

}  // namespace

SearchResult search_params(unsigned degree_bound, std::size_t limit, ExecPolicy policy) {
    if (degree_bound > 8)
        throw std::invalid_argument("search_params: degree bound capped at 8");
    SearchResult out;
    out.example_reaccepted = validate(example_params()).ok();
    if (!out.example_reaccepted)
        throw std::logic_error("search_params: the example tuple stopped validating");

    // w free constant term; c, d forced to constant term 1.
    std::uint64_t w_count = std::uint64_t{1} << (degree_bound + 1);
    std::uint64_t cd_count = std::uint64_t{1} << degree_bound;
    std::uint64_t total = w_count * cd_count * cd_count;
    out.candidates_tested = total;

    auto candidate = [&](std::uint64_t i) {
        DeformationParams cand;
        std::uint64_t wi = i / (cd_count * cd_count);
        std::uint64_t ci = (i / cd_count) % cd_count;
        std::uint64_t di = i % cd_count;
        cand.w = Rational(poly_from_index(wi));
        cand.c = Rational(poly_from_index((ci << 1) | 1));
        cand.d = Rational(poly_from_index((di << 1) | 1));
        cand.a = cand.w + cand.c + cand.d;
        cand.b = cand.w * cand.c + cand.w * cand.d + cand.c * cand.d;
        cand.z = Rational::t();
        return cand;
    };

    // a and b are derived, so the only nontrivial coefficient condition is
    // w+c+d = wcd; rejecting on it first keeps large bounds tractable.
    auto accepted = [](const DeformationParams& cand) {
        if (!(cand.w + cand.c + cand.d == cand.w * cand.c * cand.d)) return false;
        return validate(cand).ok();
    };

    std::vector<DeformationParams> found;
    if (policy == ExecPolicy::Serial) {
        for (std::uint64_t i = 0; i < total; ++i) {
            DeformationParams cand = candidate(i);
            if (accepted(cand)) found.push_back(std::move(cand));
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<DeformationParams> local;
#pragma omp for schedule(static)
            for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
                DeformationParams cand = candidate(static_cast<std::uint64_t>(idx));
                if (accepted(cand)) local.push_back(std::move(cand));
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
#else
        for (std::uint64_t i = 0; i < total; ++i) {
            DeformationParams cand = candidate(i);
            if (accepted(cand)) found.push_back(std::move(cand));
        }
#endif
    }
    // deterministic order regardless of thread interleaving
    std::sort(found.begin(), found.end(),
              [](const DeformationParams& l, const DeformationParams& r) {
                  return l.str() < r.str();
              });
    if (found.size() > limit) found.resize(limit);
    out.found = std::move(found);
    return out;
}

DeformationParams parse_params_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto is_blank = [](const std::string& s) {
            for (char ch : s)
                if (!std::isspace(static_cast<unsigned char>(ch))) return false;
            return true;
        };
        if (is_blank(line)) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("params line " + std::to_string(lineno) +
                                        ": expected key = value");
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("params line " + std::to_string(lineno) +
                                        ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument("params: duplicate key '" + key + "'");
    }

    for (const auto& [k, v] : kv)
        if (k != "a" && k != "b" && k != "c" && k != "d" && k != "w" && k != "z" &&
            k != "precision")
            throw std::invalid_argument("params: unknown key '" + k + "'");
    for (const char* req : {"c", "d", "w"})
        if (!kv.count(req))
            throw std::invalid_argument(std::string("params: missing key '") + req + "'");

    DeformationParams p;
    p.c = Rational::parse(kv.at("c"));
    p.d = Rational::parse(kv.at("d"));
    p.w = Rational::parse(kv.at("w"));
    p.a = kv.count("a") ? Rational::parse(kv.at("a")) : p.w + p.c + p.d;
    p.b = kv.count("b") ? Rational::parse(kv.at("b")) : p.w * p.c + p.w * p.d + p.c * p.d;
    p.z = kv.count("z") ? Rational::parse(kv.at("z")) : Rational::t();
    if (kv.count("precision")) {
        int n = std::stoi(kv.at("precision"));
        if (n < 1 || n > 1024) throw std::invalid_argument("params: precision out of range");
        p.series_precision = static_cast<unsigned>(n);
    }
    return p;
}

DeformationParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("params: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params_text(buf.str());
}

}  // namespace qdeform
