#pragma once

#include <string>

#include "fermibasis/fock.hpp"

namespace fermibasis::fock {

/// Canonical text form, one term per PBW monomial:
///   (re)+(im)i * T1^a * H1^m1 H2^m2 * b*[j1,j2] * c*[k1] |vac>
/// joined by " + "; the zero vector renders as "0". render and parse are
/// exact inverses of each other.
std::string render(const FockVector& v);

/// Parses the render grammar; throws std::invalid_argument on anything else.
FockVector parse(const std::string& text);

}  // namespace fermibasis::fock
