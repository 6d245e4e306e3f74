#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "brownlab/checker.hpp"
#include "brownlab/core.hpp"

namespace brownlab {

inline constexpr const char* kVersion = "0.1.0";

// Coloring files:
//
//   palette <r> length <n> encoding <plain|rle>
//   <body>
//
// plain bodies are whitespace-separated color indices; rle bodies are "<value>x<count>"
// tokens. The canonical form (what encode produces) has a single line of body tokens
// separated by single spaces, maximal runs for rle, and a trailing newline.
enum class Encoding { Plain, Rle };

inline constexpr std::size_t kPlainEncodingLimit = 10'000;

// Plain below kPlainEncodingLimit positions, rle otherwise.
Encoding preferred_encoding(std::size_t length);

std::string encode_coloring(const Coloring& c, Encoding enc);
// Body tokens only (no header, no newline).
std::string encode_body(const Coloring& c, Encoding enc);

// Throws ParseError carrying the offending line and column.
Coloring decode_coloring(std::string_view text);
Coloring decode_rle_body(std::string_view body, Color palette, std::size_t length);

// Canonical certificate document; keys are emitted in sorted order, so dump() is
// byte-stable for identical inputs.
nlohmann::json certificate_to_json(const WitnessCertificate& cert);
// Throws ParseError or InvalidArgument on malformed documents.
WitnessCertificate certificate_from_json(const nlohmann::json& doc);

nlohmann::json violation_to_json(const Violation& v, const FiniteSet& color_class);

}  // namespace brownlab
