#pragma once

#include <string>

#include "json.hpp"
#include "symdist/catalog.hpp"
#include "symdist/verify.hpp"

namespace symdist::cli {

nlohmann::ordered_json to_json(const ClassificationReport& r);
nlohmann::ordered_json to_json(const VerifyReport& r);

std::string to_text(const ClassificationReport& r);
std::string to_text(const VerifyReport& r);

std::string format_alias(const FamilyAlias& a);

}  // namespace symdist::cli
