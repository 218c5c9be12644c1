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

#ifndef GSINTERP_FIELD_HPP
#define GSINTERP_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsinterp/error.hpp"

namespace gsi {

/// Element of GF(2^m) in polynomial basis: bit i is the coefficient of alpha^i.
using Element = std::uint16_t;

/// GF(2^m), 2 <= m <= 16, backed by discrete log / antilog tables.
///
/// Immutable after construction. Zero is kept out of the log table and
/// handled by explicit branches.
class Field {
public:
    /// `primitive_poly` is bit-encoded and includes the x^m term,
    /// e.g. 0x25 for x^5 + x^2 + 1.
    Field(unsigned m, std::uint32_t primitive_poly);

    unsigned m() const noexcept { return m_; }
    std::uint32_t primitive_poly() const noexcept { return poly_; }
    /// Number of elements, 2^m.
    std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
    /// Order of the multiplicative group, 2^m - 1.
    std::uint32_t order() const noexcept { return size() - 1; }

    bool contains(std::uint32_t v) const noexcept { return v < size(); }

    static Element add(Element a, Element b) noexcept { return a ^ b; }
    static Element sub(Element a, Element b) noexcept { return a ^ b; }

    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }

    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    /// a^e for any integer e; negative exponents require a != 0.
    Element pow(Element a, long long e) const;

    /// alpha^i, i reduced modulo the group order.
    Element alpha_pow(long long i) const noexcept;
    /// Discrete log of a nonzero element, in [0, 2^m - 1).
    std::uint32_t log(Element a) const;

    /// Raw log for hot loops; a must be nonzero.
    std::uint32_t log_unchecked(Element a) const noexcept { return log_[a]; }
    /// c * a where c is given by its log; handles a == 0.
    Element mul_by_log(Element a, std::uint32_t log_c) const noexcept {
        return a == 0 ? Element{0} : exp_[log_[a] + log_c];
    }

    /// "m:poly_hex", e.g. "5:25".
    std::string to_string() const;
    static Field parse(std::string_view text);

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.m_ == b.m_ && a.poly_ == b.poly_;
    }

private:
    unsigned m_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> log_;
    // Doubled so that log a + log b never needs a reduction.
    std::vector<Element> exp_;
};

/// Default primitive polynomials used by the CLI (x^m + ... bit-encoded).
std::uint32_t default_primitive_poly(unsigned m);

/// Lowercase hex without prefix, e.g. "1d".
std::string element_to_hex(Element e);
Element element_from_hex(const Field& f, std::string_view text);

} // namespace gsi

#endif
