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

#include "gsinterp/poly.hpp"

#include <algorithm>
#include <limits>

namespace gsi {

namespace {

// out[0 .. na+nb-1) ^= a * b
void mul_acc_school(const Field& f, const Element* a, std::size_t na, const Element* b, std::size_t nb,
                    Element* out) {
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0)
            continue;
        const std::uint32_t la = f.log_unchecked(a[i]);
        Element* o = out + i;
        for (std::size_t j = 0; j < nb; ++j)
            o[j] ^= f.mul_by_log(b[j], la);
    }
}

void mul_acc_karatsuba(const Field& f, const Element* a, std::size_t na, const Element* b, std::size_t nb,
                       Element* out, std::size_t cutoff) {
    if (na == 0 || nb == 0)
        return;
    if (na < nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (nb < cutoff || nb < 2) {
        mul_acc_school(f, a, na, b, nb, out);
        return;
    }
    const std::size_t h = (na + 1) / 2;
    if (nb <= h) {
        // Unbalanced operands: cut the long one into slices of the short length.
        for (std::size_t off = 0; off < na; off += nb)
            mul_acc_karatsuba(f, a + off, std::min(nb, na - off), b, nb, out + off, cutoff);
        return;
    }

    const std::size_t na1 = na - h;
    const std::size_t nb1 = nb - h;
    std::vector<Element> z0(2 * h - 1, 0);
    std::vector<Element> z2(na1 + nb1 - 1, 0);
    std::vector<Element> z1(2 * h - 1, 0);
    std::vector<Element> sa(a, a + h);
    std::vector<Element> sb(b, b + h);
    for (std::size_t i = 0; i < na1; ++i)
        sa[i] ^= a[h + i];
    for (std::size_t i = 0; i < nb1; ++i)
        sb[i] ^= b[h + i];

    mul_acc_karatsuba(f, a, h, b, h, z0.data(), cutoff);
    mul_acc_karatsuba(f, a + h, na1, b + h, nb1, z2.data(), cutoff);
    mul_acc_karatsuba(f, sa.data(), h, sb.data(), h, z1.data(), cutoff);

    for (std::size_t i = 0; i < z0.size(); ++i) {
        out[i] ^= z0[i];
        z1[i] ^= z0[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        out[2 * h + i] ^= z2[i];
        z1[i] ^= z2[i];
    }
    for (std::size_t i = 0; i < z1.size(); ++i)
        out[h + i] ^= z1[i];
}

// Index of the order-maximal term inside one nonzero row.
int row_leading_x(const UniPoly& row, int wx) noexcept {
    return wx < 0 ? row.low_degree() : row.degree();
}

} // namespace

// --- UniPoly ---------------------------------------------------------------

UniPoly UniPoly::monomial(Element c, std::size_t deg) {
    std::vector<Element> v(deg + 1, 0);
    v[deg] = c;
    return UniPoly(std::move(v));
}

int UniPoly::low_degree() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<Element> v(big.coeffs().begin(), big.coeffs().end());
    for (std::size_t i = 0; i < small.size(); ++i)
        v[i] ^= small[i];
    return UniPoly(std::move(v));
}

UniPoly scale(const Field& f, const UniPoly& a, Element c) {
    if (c == 0 || a.is_zero())
        return {};
    const std::uint32_t lc = f.log_unchecked(c);
    std::vector<Element> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        v[i] = f.mul_by_log(a[i], lc);
    return UniPoly(std::move(v));
}

void add_scaled_inplace(const Field& f, UniPoly& dst, Element c, std::size_t shift, const UniPoly& src) {
    if (c == 0 || src.is_zero())
        return;
    auto& d = dst.storage();
    if (d.size() < src.size() + shift)
        d.resize(src.size() + shift, 0);
    const std::uint32_t lc = f.log_unchecked(c);
    const auto s = src.coeffs();
    Element* o = d.data() + shift;
    for (std::size_t i = 0; i < s.size(); ++i)
        o[i] ^= f.mul_by_log(s[i], lc);
    dst.normalize();
}

UniPoly shift_up(const UniPoly& a, std::size_t k) {
    if (a.is_zero())
        return {};
    std::vector<Element> v(a.size() + k, 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return UniPoly(std::move(v));
}

UniPoly mul_schoolbook(const Field& f, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Element> out(a.size() + b.size() - 1, 0);
    mul_acc_school(f, a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data());
    return UniPoly(std::move(out));
}

UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b, std::size_t cutoff) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Element> out(a.size() + b.size() - 1, 0);
    mul_acc_karatsuba(f, a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data(),
                      std::max<std::size_t>(cutoff, 2));
    return UniPoly(std::move(out));
}

UniPoly pow(const Field& f, const UniPoly& a, unsigned e) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = a;
    while (e != 0) {
        if (e & 1u)
            result = mul(f, result, base);
        e >>= 1;
        if (e != 0)
            base = mul(f, base, base);
    }
    return result;
}

std::pair<UniPoly, UniPoly> divmod(const Field& f, const UniPoly& a, const UniPoly& b) {
    if (b.is_zero())
        throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree())
        return {UniPoly{}, a};
    std::vector<Element> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Element> quo(rem.size() - db, 0);
    const Element inv_lead = f.inv(b.lead());
    const auto bc = b.coeffs();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Element c = f.mul(rem[k + db], inv_lead);
        quo[k] = c;
        if (c == 0)
            continue;
        const std::uint32_t lc = f.log_unchecked(c);
        for (std::size_t i = 0; i <= db; ++i)
            rem[k + i] ^= f.mul_by_log(bc[i], lc);
    }
    rem.resize(db);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly div_exact(const Field& f, const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(f, a, b);
    if (!r.is_zero())
        throw Error(Errc::InexactDivision, "polynomial division leaves a remainder");
    return q;
}

Element eval(const Field& f, const UniPoly& a, Element x) {
    Element acc = 0;
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = f.mul(acc, x) ^ c[i];
    return acc;
}

UniPoly from_roots(const Field& f, std::span<const Element> xs) {
    std::vector<Element> v{1};
    v.reserve(xs.size() + 1);
    for (Element x : xs) {
        // v *= (x + x_i)
        v.push_back(0);
        for (std::size_t i = v.size() - 1; i > 0; --i)
            v[i] = v[i - 1] ^ f.mul(v[i], x);
        v[0] = f.mul(v[0], x);
    }
    return UniPoly(std::move(v));
}

UniPoly lagrange(const Field& f, std::span<const Element> xs, std::span<const Element> ys) {
    if (xs.size() != ys.size())
        throw Error(Errc::InvalidArgument, "lagrange: abscissa and ordinate counts differ");
    const std::size_t n = xs.size();
    {
        std::vector<bool> seen(f.size(), false);
        for (Element x : xs) {
            if (seen[x])
                throw Error(Errc::DuplicateAbscissa, "repeated abscissa " + element_to_hex(x));
            seen[x] = true;
        }
    }
    if (n == 0)
        return {};
    const UniPoly phi = from_roots(f, xs);
    std::vector<Element> out(n, 0);
    std::vector<Element> q(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i] == 0)
            continue;
        // q = phi / (x - x_i) by synthetic division
        Element carry = 0;
        for (std::size_t k = n; k-- > 0;) {
            carry = phi[k + 1] ^ f.mul(carry, xs[i]);
            q[k] = carry;
        }
        Element denom = 0;
        for (std::size_t k = n; k-- > 0;)
            denom = f.mul(denom, xs[i]) ^ q[k];
        const Element c = f.div(ys[i], denom);
        const std::uint32_t lc = f.log_unchecked(c);
        for (std::size_t k = 0; k < n; ++k)
            out[k] ^= f.mul_by_log(q[k], lc);
    }
    return UniPoly(std::move(out));
}

// --- BiPoly ----------------------------------------------------------------

BiPoly BiPoly::from_uni(UniPoly u) {
    std::vector<UniPoly> rows;
    rows.push_back(std::move(u));
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::y_pow(std::size_t j) {
    std::vector<UniPoly> rows(j + 1);
    rows[j] = UniPoly::constant(1);
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::monomial(Element c, int i, int j) {
    std::vector<UniPoly> rows(static_cast<std::size_t>(j) + 1);
    rows[static_cast<std::size_t>(j)] = UniPoly::monomial(c, static_cast<std::size_t>(i));
    return BiPoly(std::move(rows));
}

int BiPoly::xdeg() const noexcept {
    int d = -1;
    for (const auto& r : rows_)
        d = std::max(d, r.degree());
    return d;
}

std::size_t BiPoly::term_capacity() const noexcept {
    std::size_t s = 0;
    for (const auto& r : rows_)
        s += r.size();
    return s;
}

const UniPoly& BiPoly::row(std::size_t j) const noexcept {
    static const UniPoly zero;
    return j < rows_.size() ? rows_[j] : zero;
}

UniPoly& BiPoly::row_mut(std::size_t j) {
    if (j >= rows_.size())
        rows_.resize(j + 1);
    return rows_[j];
}

Element BiPoly::coeff(int i, int j) const noexcept {
    if (i < 0 || j < 0)
        return 0;
    return row(static_cast<std::size_t>(j))[static_cast<std::size_t>(i)];
}

BiPoly add(const BiPoly& p, const BiPoly& s) {
    std::vector<UniPoly> rows(std::max(p.rows().size(), s.rows().size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
        rows[j] = add(p.row(j), s.row(j));
    return BiPoly(std::move(rows));
}

void add_scaled_inplace(const Field& f, BiPoly& p, Element c, int xshift, int yshift, const BiPoly& s) {
    if (c == 0 || s.is_zero())
        return;
    if (xshift < 0 || yshift < 0)
        throw Error(Errc::InvalidArgument, "negative monomial shift");
    const auto rows = s.rows();
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (!rows[j].is_zero())
            add_scaled_inplace(f, p.row_mut(j + static_cast<std::size_t>(yshift)), c,
                               static_cast<std::size_t>(xshift), rows[j]);
    p.normalize();
}

BiPoly bi_add_scaled(const Field& f, const BiPoly& p, Element c, int xshift, int yshift, const BiPoly& s) {
    BiPoly out = p;
    add_scaled_inplace(f, out, c, xshift, yshift, s);
    return out;
}

BiPoly scale(const Field& f, const BiPoly& p, Element c) {
    std::vector<UniPoly> rows;
    rows.reserve(p.rows().size());
    for (const auto& r : p.rows())
        rows.push_back(scale(f, r, c));
    return BiPoly(std::move(rows));
}

BiPoly mul(const Field& f, const BiPoly& p, const BiPoly& s, std::size_t cutoff) {
    if (p.is_zero() || s.is_zero())
        return {};
    std::vector<UniPoly> rows(p.rows().size() + s.rows().size() - 1);
    for (std::size_t a = 0; a < p.rows().size(); ++a) {
        if (p.row(a).is_zero())
            continue;
        for (std::size_t b = 0; b < s.rows().size(); ++b) {
            if (s.row(b).is_zero())
                continue;
            auto prod = mul(f, p.row(a), s.row(b), cutoff);
            auto& dst = rows[a + b];
            if (dst.is_zero())
                dst = std::move(prod);
            else
                add_scaled_inplace(f, dst, 1, 0, prod);
        }
    }
    return BiPoly(std::move(rows));
}

BiPoly mul_uni(const Field& f, const BiPoly& p, const UniPoly& u, std::size_t cutoff) {
    std::vector<UniPoly> rows;
    rows.reserve(p.rows().size());
    for (const auto& r : p.rows())
        rows.push_back(mul(f, r, u, cutoff));
    return BiPoly(std::move(rows));
}

BiPoly pow(const Field& f, const BiPoly& p, unsigned e) {
    BiPoly result = BiPoly::from_uni(UniPoly::constant(1));
    BiPoly base = p;
    while (e != 0) {
        if (e & 1u)
            result = mul(f, result, base);
        e >>= 1;
        if (e != 0)
            base = mul(f, base, base);
    }
    return result;
}

Element eval(const Field& f, const BiPoly& q, Element x0, Element y0) {
    Element acc = 0;
    const auto rows = q.rows();
    for (std::size_t j = rows.size(); j-- > 0;)
        acc = f.mul(acc, y0) ^ eval(f, rows[j], x0);
    return acc;
}

UniPoly substitute_y(const Field& f, const BiPoly& q, const UniPoly& u) {
    UniPoly acc;
    const auto rows = q.rows();
    for (std::size_t j = rows.size(); j-- > 0;)
        acc = add(mul(f, acc, u), rows[j]);
    return acc;
}

Element hasse(const Field& f, const BiPoly& q, int j1, int j2, Element x0, Element y0) {
    if (j1 < 0 || j2 < 0)
        throw Error(Errc::InvalidArgument, "negative Hasse derivative order");
    const auto rows = q.rows();
    const unsigned uj1 = static_cast<unsigned>(j1);
    const unsigned uj2 = static_cast<unsigned>(j2);
    Element outer = 0;
    for (std::size_t jy = rows.size(); jy-- > uj2;) {
        outer = f.mul(outer, y0);
        if (!binom_odd(static_cast<unsigned>(jy), uj2))
            continue;
        const auto c = rows[jy].coeffs();
        Element inner = 0;
        for (std::size_t jx = c.size(); jx-- > uj1;) {
            inner = f.mul(inner, x0);
            if (binom_odd(static_cast<unsigned>(jx), uj1))
                inner ^= c[jx];
        }
        outer ^= inner;
    }
    return outer;
}

bool has_root_mult(const Field& f, const BiPoly& q, Element x0, Element y0, int r) {
    for (int j2 = 0; j2 < r; ++j2)
        for (int j1 = 0; j1 + j2 < r; ++j1)
            if (hasse(f, q, j1, j2, x0, y0) != 0)
                return false;
    return true;
}

long long wdeg(const BiPoly& q, int a, int b) {
    if (q.is_zero())
        throw Error(Errc::ZeroPolynomial, "weighted degree of zero polynomial");
    long long best = std::numeric_limits<long long>::min();
    const auto rows = q.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].is_zero())
            continue;
        const int i = row_leading_x(rows[j], a);
        best = std::max(best, static_cast<long long>(a) * i + static_cast<long long>(b) * static_cast<long long>(j));
    }
    return best;
}

Monomial leading_term(const BiPoly& q, const TermOrder& ord) {
    if (q.is_zero())
        throw Error(Errc::ZeroPolynomial, "leading term of zero polynomial");
    const auto rows = q.rows();
    Exponent best{-1, -1};
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].is_zero())
            continue;
        const Exponent e{row_leading_x(rows[j], ord.wx), static_cast<int>(j)};
        if (best.j < 0 || ord.less(best, e))
            best = e;
    }
    return Monomial{q.coeff(best.i, best.j), best.i, best.j};
}

std::strong_ordering compare_by_leading_term(const BiPoly& a, const BiPoly& b, const TermOrder& ord) {
    return ord.compare(leading_term(a, ord).exponent(), leading_term(b, ord).exponent());
}

} // namespace gsi
