#pragma once

#include <string>

#include "spc/parser.hpp"
#include "spc/syntax.hpp"

inline spc::F fm(const std::string& text) { return spc::parse_formula(text).formula; }
