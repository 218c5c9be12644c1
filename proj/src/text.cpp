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

#include "gsinterp/text.hpp"

#include <charconv>

namespace gsi {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw Error(Errc::Parse, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

} // namespace

std::string symbols_to_text(const std::vector<Element>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += element_to_hex(v[i]);
    }
    return out;
}

std::vector<Element> symbols_from_text(const Field& f, std::string_view text) {
    text = trim(text);
    std::vector<Element> out;
    if (text.empty())
        return out;
    for (auto tok : split(text, ','))
        out.push_back(element_from_hex(f, trim(tok)));
    return out;
}

std::string to_text(const UniPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ',';
        out += element_to_hex(p[i]);
    }
    return out;
}

UniPoly uni_from_text(const Field& f, std::string_view text) {
    return UniPoly(symbols_from_text(f, text));
}

std::string to_text(const BiPoly& q) {
    std::string out;
    for (std::size_t j = 0; j < q.rows().size(); ++j)
        out += std::to_string(j) + ": " + to_text(q.row(j)) + "\n";
    return out;
}

BiPoly bi_from_text(const Field& f, std::string_view text) {
    std::vector<UniPoly> rows;
    for (auto line : split(text, '\n')) {
        line = trim(line);
        if (line.empty())
            continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw Error(Errc::Parse, "bivariate row must look like 'j: coeffs'");
        const int j = parse_int(line.substr(0, colon));
        if (j < 0 || static_cast<std::size_t>(j) < rows.size())
            throw Error(Errc::Parse, "row indices must be increasing");
        rows.resize(static_cast<std::size_t>(j) + 1);
        rows[static_cast<std::size_t>(j)] = uni_from_text(f, line.substr(colon + 1));
    }
    return BiPoly(std::move(rows));
}

std::string to_text(const PolyBasis& b) {
    std::string out = "order: " + std::to_string(b.ord.wx) + "," + std::to_string(b.ord.wy) + "\n";
    for (std::size_t i = 0; i < b.polys.size(); ++i) {
        out += "\n";
        out += to_text(b.polys[i]);
    }
    return out;
}

PolyBasis basis_from_text(const Field& f, std::string_view text) {
    const auto nl = text.find('\n');
    const auto header = trim(text.substr(0, nl));
    if (header.substr(0, 6) != "order:")
        throw Error(Errc::Parse, "basis text must start with 'order: wx,wy'");
    const auto weights = split(header.substr(6), ',');
    if (weights.size() != 2)
        throw Error(Errc::Parse, "order line needs two weights");
    PolyBasis b{{}, TermOrder{parse_int(weights[0]), parse_int(weights[1])}};
    if (nl == std::string_view::npos)
        return b;

    std::string block;
    auto flush = [&] {
        if (!block.empty())
            b.polys.push_back(bi_from_text(f, block));
        block.clear();
    };
    for (auto line : split(text.substr(nl + 1), '\n')) {
        if (trim(line).empty()) {
            flush();
            continue;
        }
        block.append(line);
        block += '\n';
    }
    flush();
    return b;
}

} // namespace gsi
