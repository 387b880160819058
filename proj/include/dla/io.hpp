#pragma once

#include "dla/exhaustions.hpp"
#include "dla/numeric.hpp"
#include "dla/steinitz.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dla {

/// Steinitz literal: TERM ("*" TERM)* ["default" EXP]
///   TERM := PRIME "^" EXP | PRIME,  EXP := NAT | "inf"
/// e.g. "2^inf*3^2 default 0".  "1" is accepted for the empty product.
/// Non-prime bases are rejected.
SteinitzNumber parse_steinitz(const std::string& text);

/// Positive rational literal: "p/q", "p", or "2^-40".
Rational parse_rational(const std::string& text);

/// Weight literal: "[2,1,0]".
std::vector<int> parse_weight(const std::string& text);
std::string weight_to_string(const std::vector<int>& w);

/// Descriptor file (line oriented, '#' comments):
///   type: A
///   n0: 2
///   prefix: (2,1,3) (4,0,0)        # optional
///   tail: periodic (3,0,2) | primes offset 1 | proportional (2,0,1)
ExhaustionDescriptor parse_descriptor(const std::string& text);
std::string descriptor_to_string(const ExhaustionDescriptor& d);
/// One-line rendering used inside diagram files.
std::string descriptor_to_line(const ExhaustionDescriptor& d);
ExhaustionDescriptor parse_descriptor_line(const std::string& line, int lineno = 1);

/// Profile file mirroring the AlgebraProfile fields.
AlgebraProfile parse_profile(const std::string& text);
std::string profile_to_string(const AlgebraProfile& p);

ExhaustionDescriptor load_descriptor_file(const std::string& path);
AlgebraProfile load_profile_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dla
