#pragma once

/**
 * @file certificate_io.hpp
 * @brief JSON form of certificates (schema "heartproof.certificate/1").
 *
 * Keys are emitted in sorted order with two-space indentation, so equal
 * certificates serialize to identical bytes.
 */

#include <string>

#include "heartproof/verdict.hpp"

namespace heartproof {

inline constexpr const char* kCertificateSchema = "heartproof.certificate/1";

std::string certificate_to_json(const Certificate& c);
/// Throws ParseError on malformed input or an unknown schema.
Certificate certificate_from_json(const std::string& text);

}  // namespace heartproof
