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

#include "gsinterp/field.hpp"

#include <bit>
#include <charconv>
#include <cstdio>

namespace gsi {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotGroebnerShape: return "NotGroebnerShape";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::FallbackExhausted: return "FallbackExhausted";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

Field::Field(unsigned m, std::uint32_t primitive_poly) : m_(m), poly_(primitive_poly) {
    if (m < 2 || m > 16)
        throw Error(Errc::DegreeOutOfRange, "extension degree must be in [2, 16], got " + std::to_string(m));
    if (std::bit_width(primitive_poly) != m + 1)
        throw Error(Errc::DegreeOutOfRange, "primitive polynomial must have degree " + std::to_string(m));

    const std::uint32_t q = size();
    const std::uint32_t ord = order();
    log_.assign(q, 0);
    exp_.assign(2 * static_cast<std::size_t>(ord), 0);

    // Walk alpha^i by shift-and-reduce; a primitive polynomial visits every
    // nonzero element before returning to 1.
    std::vector<bool> seen(q, false);
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
        if (seen[b])
            throw Error(Errc::NotPrimitive, "cycle of alpha has length " + std::to_string(i) +
                                                " < " + std::to_string(ord));
        seen[b] = true;
        exp_[i] = static_cast<Element>(b);
        log_[b] = i;
        b <<= 1;
        if (b & q)
            b ^= primitive_poly;
        if (b == 0)
            throw Error(Errc::NotPrimitive, "polynomial is divisible by x");
    }
    if (b != 1)
        throw Error(Errc::NotPrimitive, "alpha^(2^m-1) != 1");
    for (std::uint32_t i = 0; i < ord; ++i)
        exp_[ord + i] = exp_[i];
}

Element Field::inv(Element a) const {
    if (a == 0)
        throw Error(Errc::DivisionByZero, "inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

Element Field::div(Element a, Element b) const {
    if (b == 0)
        throw Error(Errc::DivisionByZero, "division by zero");
    if (a == 0)
        return 0;
    return exp_[log_[a] + order() - log_[b]];
}

Element Field::pow(Element a, long long e) const {
    if (a == 0) {
        if (e < 0)
            throw Error(Errc::DivisionByZero, "negative power of zero");
        return e == 0 ? Element{1} : Element{0};
    }
    const long long ord = order();
    long long l = (static_cast<long long>(log_[a]) * (e % ord)) % ord;
    if (l < 0)
        l += ord;
    return exp_[static_cast<std::size_t>(l)];
}

Element Field::alpha_pow(long long i) const noexcept {
    const long long ord = order();
    long long l = i % ord;
    if (l < 0)
        l += ord;
    return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t Field::log(Element a) const {
    if (a == 0 || a >= size())
        throw Error(Errc::InvalidArgument, "log of zero or out-of-range element");
    return log_[a];
}

std::string Field::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%u:%x", m_, poly_);
    return buf;
}

Field Field::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::Parse, "field spec must look like m:poly_hex");
    unsigned m = 0;
    std::uint32_t poly = 0;
    auto r1 = std::from_chars(text.data(), text.data() + colon, m);
    auto r2 = std::from_chars(text.data() + colon + 1, text.data() + text.size(), poly, 16);
    if (r1.ec != std::errc{} || r1.ptr != text.data() + colon || r2.ec != std::errc{} ||
        r2.ptr != text.data() + text.size() || colon + 1 == text.size())
        throw Error(Errc::Parse, "malformed field spec '" + std::string(text) + "'");
    return Field(m, poly);
}

std::uint32_t default_primitive_poly(unsigned m) {
    // Conway-style low-weight primitive polynomials.
    static constexpr std::uint32_t table[17] = {
        0,       0,       0x7,    0xb,    0x13,   0x25,   0x43,    0x89,   0x11d,
        0x211,   0x409,   0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
    };
    if (m < 2 || m > 16)
        throw Error(Errc::DegreeOutOfRange, "no default primitive polynomial for m=" + std::to_string(m));
    return table[m];
}

std::string element_to_hex(Element e) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(e));
    return buf;
}

Element element_from_hex(const Field& f, std::string_view text) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    std::uint32_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v, 16);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw Error(Errc::Parse, "malformed hex symbol '" + std::string(text) + "'");
    if (!f.contains(v))
        throw Error(Errc::Parse, "symbol " + std::string(text) + " outside GF(2^" + std::to_string(f.m()) + ")");
    return static_cast<Element>(v);
}

} // namespace gsi
