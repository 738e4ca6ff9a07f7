#pragma once

#include <string>

#include "json.hpp"

#include "cmpoly/classify.hpp"
#include "cmpoly/covers.hpp"
#include "cmpoly/enumerate.hpp"
#include "cmpoly/exchange.hpp"
#include "cmpoly/quotients.hpp"

// Text and structured renderings of the toolkit's reports. Variables are
// printed 1-based everywhere.
namespace cmpoly {

std::string format_varset(const VarSet& vars);  // "{1,2}"

nlohmann::json to_json(const ExchangeWitness& witness);
nlohmann::json to_json(const ExchangePath& path);
nlohmann::json to_json(const CoverReport& report);
nlohmann::json to_json(const QuotientReport& report);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const CensusRow& row);
nlohmann::json to_json(const VerificationReport& report);

std::string witness_text(const ExchangeWitness& witness);
std::string path_text(const ExchangePath& path);
// "n=6 h=4 unmixed=yes q=4 dim=2 depth=1 CM=no"
std::string invariants_text(std::size_t n, const CoverReport& covers,
                            const QuotientReport& quotients);
nlohmann::json invariants_json(std::size_t n, const CoverReport& covers,
                               const QuotientReport& quotients);
// "verdict=Veronese vars={1,2} d=2 h=2 q=1 ..."
std::string classification_text(const Classification& c);
std::string verification_text(const VerificationReport& report);

// Tab-separated census, one row per ideal. Columns:
// index n gens polymatroidal matroidal linear h q dim depth unmixed cm verdict
// gens are comma-separated monomials; unknown values are "-".
std::string census_header();
std::string census_line(const CensusRow& row);

}  // namespace cmpoly
