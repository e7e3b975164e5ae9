#pragma once

#include <iosfwd>
#include <string>

#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/temperley_lieb.hpp"

namespace chromalg {

/// Chromatic element file:
///   n N
///   term {1,4}{2,3} : <poly in Q>
///   term @relative/path.graph : <poly in Q>
/// Graph terms are reduced into the basis. '#' starts a comment.
ChromaticElement read_chromatic_element(std::istream& in, const std::string& base_dir = ".");
ChromaticElement read_chromatic_element_file(const std::string& path);

/// TL element file:
///   m M
///   term (1,2)(3,4) : <poly in d>
TLElement read_tl_element(std::istream& in);
TLElement read_tl_element_file(const std::string& path);

}  // namespace chromalg
