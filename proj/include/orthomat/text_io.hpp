#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orthomat/ground_set.hpp"
#include "orthomat/matrix.hpp"
#include "orthomat/orientation.hpp"
#include "orthomat/representations.hpp"

// Plain-text formats. Blank lines and lines starting with '#' are ignored
// everywhere. Every parser throws ParseError with a 1-based line/column.
//
//   matrix      `rows cols`, then one line per row of integers or p/q
//   bases       `n <n> k <k>`, then one basis per line (`2 3* 1`; `{}` = ∅)
//   isotropic   `isotropic n <n> k <k> form <symplectic|orthogonal>`, then
//               k rows of 2n entries, columns 1..n, 1*..n*
//   signmap     `signmap n <n>`, then `<elements> +|-` per support set
namespace orthomat::text {

RationalMatrix parse_matrix(std::string_view text);
std::string format_matrix(const RationalMatrix& m);

BasisCollection parse_bases(std::string_view text);
std::string format_bases(const BasisCollection& c);

// Also validates isotropy; an IsotropyError surfaces unchanged.
IsotropicRepresentation parse_isotropic(std::string_view text);
std::string format_isotropic(const IsotropicRepresentation& r);

LagrangianSignMap parse_signmap(std::string_view text);
// Writes the canonical representative of the class.
std::string format_signmap(const LagrangianSignMap& p);

// Parses a whitespace-separated element list such as "1* 2 3".
ElementSet parse_element_list(int n, std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace orthomat::text
