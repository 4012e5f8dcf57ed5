#pragma once

#include <string>
#include <string_view>

#include "pviheat/ratfunc.hpp"

namespace pviheat {

/// Plain-text expression grammar: variables from the fixed set, integer
/// literals, rationals as p/q, operators + - * / ^ and parentheses.
/// parse(print(f)) == f.
RatFunc parse_expr(std::string_view text);

std::string print_expr(const RatFunc& f);

}  // namespace pviheat
