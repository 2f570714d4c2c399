#pragma once
// Text grammar for parameter records:
//   pi(LAM, PSI, TUP, TUP, SGN, TUP)
//   pi_{S}(OLAM, S, PSI, TUP, TUP, SGN, TUP) @ O(p,q)
// "0" marks an absent block, "(0)" a block with one zero entry.

#include "thetalift/langlands.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace tl {

using AnyParams = std::variant<SpParams, OParams>;

std::string render(const SpParams& x);
std::string render(const OParams& x);
std::string render(const AnyParams& x);

SpParams parse_sp(std::string_view text);
OParams parse_o(std::string_view text);
AnyParams parse_params(std::string_view text);

}  // namespace tl
