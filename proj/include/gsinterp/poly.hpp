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

#ifndef GSINTERP_POLY_HPP
#define GSINTERP_POLY_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gsinterp/field.hpp"

namespace gsi {

inline constexpr std::size_t kDefaultKaratsubaCutoff = 32;

/// Dense univariate polynomial, coefficient i multiplies x^i.
/// Always normalized: the top stored coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Element> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly constant(Element c) { return UniPoly(std::vector<Element>{c}); }
    static UniPoly monomial(Element c, std::size_t deg);
    /// x - a (equal to x + a in characteristic 2).
    static UniPoly linear_root(Element a) { return UniPoly(std::vector<Element>{a, 1}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }
    Element operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Element{0}; }
    Element lead() const noexcept { return c_.empty() ? Element{0} : c_.back(); }
    /// Index of the lowest nonzero coefficient; -1 for zero.
    int low_degree() const noexcept;

    std::span<const Element> coeffs() const noexcept { return c_; }
    /// Raw storage; callers must call normalize() after editing.
    std::vector<Element>& storage() noexcept { return c_; }
    void normalize() noexcept {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Element> c_;
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly scale(const Field& f, const UniPoly& a, Element c);
/// dst += c * x^shift * src
void add_scaled_inplace(const Field& f, UniPoly& dst, Element c, std::size_t shift, const UniPoly& src);
/// a * x^k
UniPoly shift_up(const UniPoly& a, std::size_t k);

UniPoly mul_schoolbook(const Field& f, const UniPoly& a, const UniPoly& b);
/// Karatsuba above `cutoff` coefficients, schoolbook below.
UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b, std::size_t cutoff = kDefaultKaratsubaCutoff);
UniPoly pow(const Field& f, const UniPoly& a, unsigned e);

/// a = q*b + r with deg r < deg b. Throws DivisionByZero when b == 0.
std::pair<UniPoly, UniPoly> divmod(const Field& f, const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws InexactDivision when the remainder is nonzero.
UniPoly div_exact(const Field& f, const UniPoly& a, const UniPoly& b);

Element eval(const Field& f, const UniPoly& a, Element x);

/// prod (x - x_i)
UniPoly from_roots(const Field& f, std::span<const Element> xs);
/// Unique T with deg T < n and T(x_i) = y_i. Throws DuplicateAbscissa.
UniPoly lagrange(const Field& f, std::span<const Element> xs, std::span<const Element> ys);

// ---------------------------------------------------------------------------

struct Exponent {
    int i = 0; ///< x-degree
    int j = 0; ///< y-degree
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Monomial {
    Element coeff = 0;
    int i = 0;
    int j = 0;
    Exponent exponent() const noexcept { return {i, j}; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// (wx, wy)-weighted degree lexicographic order. Weighted degree decides
/// first; ties go to the larger y-degree, then the larger x-degree.
/// wy may be negative, e.g. (1, -1).
struct TermOrder {
    int wx = 1;
    int wy = 1;

    long long weight(Exponent e) const noexcept {
        return static_cast<long long>(wx) * e.i + static_cast<long long>(wy) * e.j;
    }
    std::strong_ordering compare(Exponent a, Exponent b) const noexcept {
        if (auto c = weight(a) <=> weight(b); c != 0)
            return c;
        if (auto c = a.j <=> b.j; c != 0)
            return c;
        return a.i <=> b.i;
    }
    bool less(Exponent a, Exponent b) const noexcept { return compare(a, b) < 0; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

/// Order used by the list decoder: (1, k-1)-weighted lex.
inline TermOrder decoding_order(int k) { return TermOrder{1, k - 1}; }
/// Order used after the re-encoding change of variables.
inline TermOrder reencoded_order() { return TermOrder{1, -1}; }

/// Bivariate polynomial stored by rows: row j is the F[x] coefficient of y^j.
/// Normalized: the top row is nonzero, or there are no rows.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> rows) : rows_(std::move(rows)) { normalize(); }
    static BiPoly from_uni(UniPoly u);
    static BiPoly y_pow(std::size_t j);
    static BiPoly monomial(Element c, int i, int j);

    /// y-degree, -1 for zero.
    int ydeg() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    /// Largest x-degree over all rows, -1 for zero.
    int xdeg() const noexcept;
    bool is_zero() const noexcept { return rows_.empty(); }
    std::size_t term_capacity() const noexcept;

    const UniPoly& row(std::size_t j) const noexcept;
    std::span<const UniPoly> rows() const noexcept { return rows_; }
    /// Mutable row access, growing as needed; call normalize() afterwards.
    UniPoly& row_mut(std::size_t j);
    void normalize() noexcept {
        while (!rows_.empty() && rows_.back().is_zero())
            rows_.pop_back();
    }
    /// Coefficient of x^i y^j.
    Element coeff(int i, int j) const noexcept;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::vector<UniPoly> rows_;
};

BiPoly add(const BiPoly& p, const BiPoly& s);
/// P += c * x^xshift * y^yshift * S
void add_scaled_inplace(const Field& f, BiPoly& p, Element c, int xshift, int yshift, const BiPoly& s);
/// P + c * x^xshift * y^yshift * S
BiPoly bi_add_scaled(const Field& f, const BiPoly& p, Element c, int xshift, int yshift, const BiPoly& s);
BiPoly scale(const Field& f, const BiPoly& p, Element c);
BiPoly mul(const Field& f, const BiPoly& p, const BiPoly& s, std::size_t cutoff = kDefaultKaratsubaCutoff);
BiPoly mul_uni(const Field& f, const BiPoly& p, const UniPoly& u, std::size_t cutoff = kDefaultKaratsubaCutoff);
BiPoly pow(const Field& f, const BiPoly& p, unsigned e);

Element eval(const Field& f, const BiPoly& q, Element x0, Element y0);
/// Q(x, u(x)) as a univariate polynomial.
UniPoly substitute_y(const Field& f, const BiPoly& q, const UniPoly& u);

/// Hasse derivative Q^[j1,j2](x0, y0). Binomials are taken mod 2.
Element hasse(const Field& f, const BiPoly& q, int j1, int j2, Element x0, Element y0);
/// True iff every Hasse derivative with j1 + j2 < r vanishes at (x0, y0).
bool has_root_mult(const Field& f, const BiPoly& q, Element x0, Element y0, int r);

/// Max over nonzero terms of a*i + b*j. Throws ZeroPolynomial on zero.
long long wdeg(const BiPoly& q, int a, int b);
/// Order-maximal nonzero monomial. Throws ZeroPolynomial on zero.
Monomial leading_term(const BiPoly& q, const TermOrder& ord);
/// Orders nonzero polynomials by their leading monomials.
std::strong_ordering compare_by_leading_term(const BiPoly& a, const BiPoly& b, const TermOrder& ord);

/// C(n, k) mod 2 by Lucas' theorem.
constexpr bool binom_odd(unsigned n, unsigned k) noexcept { return k <= n && (k & ~n) == 0; }

} // namespace gsi

#endif
