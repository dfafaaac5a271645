#pragma once

#include <json.hpp>

#include <complex>
#include <string>

namespace dq::cli {

using Json = nlohmann::ordered_json;

/// {"re": x, "im": y}
Json complex_json(std::complex<double> z);

/// Two-space indented JSON with keys in insertion order and floats printed
/// with 17 significant digits, so identical inputs give identical bytes.
/// Non-finite floats are written as null.
std::string dump(const Json& value);

/// %.17g
std::string format_double(double x);

}  // namespace dq::cli
