#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gftk/branch.hpp"
#include "gftk/diagonal.hpp"
#include "gftk/gbs.hpp"
#include "gftk/guess.hpp"

namespace gftk {

using Json = nlohmann::ordered_json;

// Plain-text forms. Series end with the knowledge marker "+ O(z^prec)";
// fractional and negative exponents are parenthesized: z^(-1/2).
std::string to_text(const QuadExt& q);
std::string to_text(const RSeries& s, std::string_view var = "z");
std::string to_text(const Puiseux& p, std::string_view var = "z");
std::string to_text(const Branch& b);
std::string to_text(const AlgebraicEquation& eq);
std::string to_text(const Recurrence& r);

// "c0, c1, ..., c_{upto-1}" — exponents 0 (or the valuation, if negative)
// through upto-1.
std::string coeff_list(const RSeries& s, long upto);

// JSON forms. Every number that can outgrow a machine word — coefficients,
// grid entries — is a decimal string; structural sizes stay numbers.
// Rationals render as "p" or "p/q"; a Q(√d) value as {"rat","sqrt","d"}.
Json json_of(const Rational& q);
Json json_of(const QuadExt& q);
Json json_of(const RSeries& s);
Json json_of(const Puiseux& p);
Json json_of(const Branch& b);
Json json_of(const BranchSummary& s);
Json json_of(const AlgebraicEquation& eq);
Json json_of(const Recurrence& r);
Json json_of(const ClosedFormReport& r);
Json json_of(const SeriesIdentityReport& r);
Json json_of(const LogIdentityReport& r);
Json json_of(const HarmonicIdentityReport& r);
Json json_of(const HarmonicGFReport& r);

} // namespace gftk
