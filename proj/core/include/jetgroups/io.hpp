#pragma once

#include <string>

#include "jetgroups/cocycles.hpp"
#include "jetgroups/jet.hpp"
#include "jetgroups/tangent.hpp"

namespace jetgroups {

// JSON text formats. Rationals are "p/q" strings ("p" when q = 1),
// matrices row-major nested lists. Malformed input throws InputError.

AlgebraPtr parse_algebra_json(const std::string& text);
std::string algebra_to_json(const AlgebraSpec& a);

// Reads the file when `path_or_name` exists on disk, otherwise treats it
// as a builtin algebra name.
AlgebraPtr load_algebra(const std::string& path_or_name);

AlgebraElement parse_element_json(const std::string& text, const AlgebraPtr& algebra);
std::string element_to_json(const AlgebraElement& e);

JetElement parse_jet_json(const std::string& text, const AlgebraPtr& algebra);
std::string jet_to_json(const JetElement& j);

TangentElement parse_tangent_json(const std::string& text, const AlgebraPtr& algebra);
std::string tangent_to_json(const TangentElement& a);

JetAlgebraElement parse_jet_algebra_json(const std::string& text, const AlgebraPtr& algebra);
std::string jet_algebra_to_json(const JetAlgebraElement& e);

std::string read_file(const std::string& path);

} // namespace jetgroups
