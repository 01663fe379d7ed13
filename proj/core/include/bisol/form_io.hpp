// Copyright 2026 The bisol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BISOL_FORM_IO_HPP
#define BISOL_FORM_IO_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

#include "bisol/form.hpp"

namespace bisol {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nine whitespace-separated integers a00 a01 a02 a10 ... a22.
BiForm22<mpz_class> parse_form(std::string_view text);

/// True for lines that are empty or start with '#'.
bool is_blank_line(std::string_view line);

std::string format_form(const BiForm22<mpz_class>& F);

/// Parses a prime; throws ParseError otherwise.
mpz_class parse_prime(std::string_view text);

}  // namespace bisol

#endif  // BISOL_FORM_IO_HPP
