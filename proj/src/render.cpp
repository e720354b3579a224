#include "gftk/render.hpp"

#include <vector>

namespace gftk {

namespace {

// Joins pre-rendered terms, folding "+ -x" into "- x".
std::string join_terms(const std::vector<std::string>& terms) {
    std::string out;
    for (const std::string& t : terms) {
        if (out.empty()) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

std::string power_text(std::string_view var, const Rational& e) {
    if (e == 1) return std::string(var);
    std::string es = to_string(e);
    if (is_integer(e) && e >= 0) return std::string(var) + "^" + es;
    return std::string(var) + "^(" + es + ")";
}

// c * var^e with the usual shortcuts; `compound` forces parentheses around c.
std::string term_text(const std::string& c, bool compound, std::string_view var, const Rational& e) {
    if (e == 0) return compound ? "(" + c + ")" : c;
    std::string pw = power_text(var, e);
    if (!compound) {
        if (c == "1") return pw;
        if (c == "-1") return "-" + pw;
        return c + "*" + pw;
    }
    return "(" + c + ")*" + pw;
}

std::string sqrt_term(const Rational& b, long d) {
    std::string root = "sqrt(" + std::to_string(d) + ")";
    if (b == 1) return root;
    if (b == -1) return "-" + root;
    return to_string(b) + "*" + root;
}

std::string ipoly_text(const std::vector<Integer>& asc, std::string_view var) {
    std::vector<std::string> terms;
    for (long d = static_cast<long>(asc.size()) - 1; d >= 0; --d) {
        const Integer& c = asc[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        terms.push_back(term_text(to_string(c), false, var, Rational(d)));
    }
    return terms.empty() ? "0" : join_terms(terms);
}

// A polynomial factor: parenthesized unless it is a single term.
std::string factor_text(const std::vector<Integer>& asc, std::string_view var) {
    long nonzero = 0;
    for (const Integer& c : asc) nonzero += (c != 0);
    std::string p = ipoly_text(asc, var);
    return nonzero > 1 ? "(" + p + ")" : p;
}

} // namespace

std::string to_text(const QuadExt& q) {
    if (q.is_rational()) return to_string(q.rat_part());
    if (q.rat_part() == 0) return sqrt_term(q.sqrt_part(), q.d());
    std::string tail = sqrt_term(q.sqrt_part(), q.d());
    if (tail[0] == '-') return to_string(q.rat_part()) + " - " + tail.substr(1);
    return to_string(q.rat_part()) + " + " + tail;
}

std::string to_text(const RSeries& s, std::string_view var) {
    std::vector<std::string> terms;
    for (long e = s.valuation(); e < s.precision(); ++e) {
        Rational c = s.coeff(e);
        if (c == 0) continue;
        terms.push_back(term_text(to_string(c), false, var, Rational(e)));
    }
    terms.push_back("O(" + power_text(var, Rational(s.precision())) + ")");
    return join_terms(terms);
}

std::string to_text(const Puiseux& p, std::string_view var) {
    const QSeries& b = p.body();
    long r = p.ramification();
    std::vector<std::string> terms;
    for (long k = b.valuation(); k < b.precision(); ++k) {
        QuadExt c = b.coeff(k);
        if (c == QuadExt(0)) continue;
        bool compound = !c.is_rational() && c.rat_part() != 0;
        terms.push_back(term_text(to_text(c), compound, var, reduced(k, r)));
    }
    terms.push_back("O(" + power_text(var, reduced(b.precision(), r)) + ")");
    return join_terms(terms);
}

std::string to_text(const Branch& b) {
    std::string out = "t = " + to_text(b.expansion);
    out += "   [valuation " + to_string(b.valuation) + ", ramification " + std::to_string(b.ramification);
    if (b.sqrt_d != 0) out += ", over Q(sqrt(" + std::to_string(b.sqrt_d) + "))";
    out += "]";
    return out;
}

std::string to_text(const AlgebraicEquation& eq) {
    std::vector<std::string> terms;
    for (long i = eq.deg_g; i >= 0; --i) {
        const auto& row = eq.grid[static_cast<std::size_t>(i)];
        bool zero = true;
        for (const Integer& c : row) zero = zero && c == 0;
        if (zero) continue;
        std::string f = factor_text(row, "z");
        if (i == 0) {
            terms.push_back(f);
            continue;
        }
        std::string gp = i == 1 ? "g" : "g^" + std::to_string(i);
        if (f == "1")
            terms.push_back(gp);
        else if (f == "-1")
            terms.push_back("-" + gp);
        else
            terms.push_back(f + "*" + gp);
    }
    return (terms.empty() ? "0" : join_terms(terms)) + " = 0";
}

std::string to_text(const Recurrence& r) {
    std::vector<std::string> terms;
    for (long i = 0; i <= r.order; ++i) {
        const auto& p = r.polys[static_cast<std::size_t>(i)];
        bool zero = true;
        for (const Integer& c : p) zero = zero && c == 0;
        if (zero) continue;
        std::string shift = i == 0 ? "a(m)" : "a(m+" + std::to_string(i) + ")";
        std::string f = factor_text(p, "m");
        if (f == "1")
            terms.push_back(shift);
        else if (f == "-1")
            terms.push_back("-" + shift);
        else
            terms.push_back(f + "*" + shift);
    }
    return (terms.empty() ? "0" : join_terms(terms)) + " = 0";
}

std::string coeff_list(const RSeries& s, long upto) {
    std::string out;
    for (long e = std::min(0L, s.valuation()); e < upto; ++e) {
        if (!out.empty()) out += ", ";
        out += to_string(s.coeff(e));
    }
    return out;
}

Json json_of(const Rational& q) { return to_string(q); }

Json json_of(const QuadExt& q) {
    if (q.is_rational()) return to_string(q.rat_part());
    return Json{{"rat", to_string(q.rat_part())}, {"sqrt", to_string(q.sqrt_part())}, {"d", q.d()}};
}

Json json_of(const RSeries& s) {
    Json coeffs = Json::array();
    for (long e = s.valuation(); e < s.precision(); ++e) coeffs.push_back(to_string(s.coeff(e)));
    return Json{{"valuation", s.valuation()}, {"precision", s.precision()}, {"coefficients", coeffs}};
}

Json json_of(const Puiseux& p) {
    const QSeries& b = p.body();
    Json terms = Json::array();
    for (long k = b.valuation(); k < b.precision(); ++k) {
        QuadExt c = b.coeff(k);
        if (c == QuadExt(0)) continue;
        terms.push_back(Json{{"exponent", to_string(reduced(k, p.ramification()))}, {"coefficient", json_of(c)}});
    }
    return Json{{"ramification", p.ramification()},
                {"valuation", to_string(p.valuation())},
                {"precision", to_string(p.precision())},
                {"terms", terms}};
}

Json json_of(const Branch& b) {
    Json j{{"valuation", to_string(b.valuation)},
           {"ramification", b.ramification},
           {"bounded", b.bounded}};
    if (b.sqrt_d != 0) j["sqrt_d"] = b.sqrt_d;
    j["expansion"] = json_of(b.expansion);
    return j;
}

Json json_of(const BranchSummary& s) {
    Json bounded = Json::array();
    for (const Branch& b : s.bounded) bounded.push_back(json_of(b));
    Json unbounded = Json::array();
    for (const auto& [q, n] : s.unbounded)
        unbounded.push_back(Json{{"valuation", to_string(q)}, {"count", n}});
    return Json{{"bounded", bounded}, {"unbounded", unbounded}};
}

Json json_of(const AlgebraicEquation& eq) {
    Json grid = Json::array();
    for (const auto& row : eq.grid) {
        Json r = Json::array();
        for (const Integer& c : row) r.push_back(to_string(c));
        grid.push_back(r);
    }
    return Json{{"deg_g", eq.deg_g}, {"deg_z", eq.deg_z}, {"grid", grid}};
}

Json json_of(const Recurrence& r) {
    Json polys = Json::array();
    for (const auto& p : r.polys) {
        Json q = Json::array();
        for (const Integer& c : p) q.push_back(to_string(c));
        polys.push_back(q);
    }
    return Json{{"order", r.order}, {"deg", r.deg}, {"polys", polys}};
}

Json json_of(const ClosedFormReport& r) {
    return Json{{"residue_series", json_of(r.residue_series)},
                {"s4_closed_form", json_of(r.s4_closed_form)},
                {"rational_rewrite", json_of(r.rational_rewrite)},
                {"all_equal", r.all_equal},
                {"checked_order", r.checked_order},
                {"derivative_identity", r.derivative_identity}};
}

Json json_of(const SeriesIdentityReport& r) {
    return Json{{"lhs", json_of(r.lhs)},
                {"rhs", json_of(r.rhs)},
                {"equal", r.equal},
                {"params", Json{{"m", r.m}, {"prec", r.prec}}}};
}

Json json_of(const LogIdentityReport& r) {
    return Json{{"log_form", json_of(r.log_form)},
                {"derivative_form", json_of(r.derivative_form)},
                {"sum_form", json_of(r.sum_form)},
                {"equal", r.equal},
                {"params", Json{{"m", r.m}, {"prec", r.prec}}}};
}

Json json_of(const HarmonicIdentityReport& r) {
    return Json{{"lhs", to_string(r.lhs)},
                {"rhs", to_string(r.rhs)},
                {"equal", r.equal},
                {"params", Json{{"m", r.m}, {"n", r.n}}}};
}

Json json_of(const HarmonicGFReport& r) {
    Json hv = Json::array();
    for (const Rational& h : r.harmonic_values) hv.push_back(to_string(h));
    return Json{{"double_sum", json_of(r.double_sum)},
                {"closed_form", json_of(r.closed_form)},
                {"harmonic_values", hv},
                {"equal", r.equal},
                {"params", Json{{"m", r.m}, {"prec", r.prec}}}};
}

} // namespace gftk
