#pragma once

#include <string>

#include "json.hpp"
#include "spex/certify.hpp"

namespace spex {

nlohmann::json to_json(const CertificationReport& r);
CertificationReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BooksizeReport& r);
BooksizeReport booksize_from_json(const nlohmann::json& j);

// Aligned "key : value" block; precision applies to real-valued fields.
std::string to_text(const CertificationReport& r, int precision = 10);
std::string to_text(const BooksizeReport& r, int precision = 10);

}  // namespace spex
