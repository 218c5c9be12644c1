/*
   Copyright 2026 The gsinterp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GSINTERP_TEXT_HPP
#define GSINTERP_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gsinterp/module.hpp"

// Plain-text forms used by the CLI and the golden tests.
//
//   symbols   "1d,0,7"           comma-separated lowercase hex
//   UniPoly   "1,0,1"            coefficients, degree ascending; zero is "0"
//   BiPoly    "0: 1,1\n1: 1\n"   one line per y-degree
//   PolyBasis "order: 1,14\n" then BiPoly blocks separated by blank lines

namespace gsi {

std::string symbols_to_text(const std::vector<Element>& v);
std::vector<Element> symbols_from_text(const Field& f, std::string_view text);

std::string to_text(const UniPoly& p);
UniPoly uni_from_text(const Field& f, std::string_view text);

std::string to_text(const BiPoly& q);
BiPoly bi_from_text(const Field& f, std::string_view text);

std::string to_text(const PolyBasis& b);
PolyBasis basis_from_text(const Field& f, std::string_view text);

} // namespace gsi

#endif
