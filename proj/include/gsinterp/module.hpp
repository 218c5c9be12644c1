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

#ifndef GSINTERP_MODULE_HPP
#define GSINTERP_MODULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsinterp/poly.hpp"

namespace gsi {

/// Basis of an F[x]-submodule of F[x,y] together with the order that defines
/// its leading terms. In Groebner form the leading y-degrees are pairwise
/// distinct; every producer in this library returns the elements sorted by
/// leading y-degree.
struct PolyBasis {
    std::vector<BiPoly> polys;
    TermOrder ord;

    std::size_t size() const noexcept { return polys.size(); }
    std::vector<Monomial> leading_terms() const;
    /// Element whose leading term has y-degree j, if any.
    const BiPoly* with_leading_ydeg(int j) const;
    /// Index of the order-minimal element; throws on an empty basis.
    std::size_t smallest_index() const;
    const BiPoly& smallest() const { return polys[smallest_index()]; }

    friend bool operator==(const PolyBasis&, const PolyBasis&) = default;
};

/// Interpolation points (x_i, y_i) with pairwise-distinct x_i.
class InterpPoints {
public:
    InterpPoints() = default;
    /// Throws DuplicateAbscissa when two x_i coincide.
    InterpPoints(std::vector<Element> xs, std::vector<Element> ys);

    std::size_t size() const noexcept { return xs_.size(); }
    const std::vector<Element>& xs() const noexcept { return xs_; }
    const std::vector<Element>& ys() const noexcept { return ys_; }

private:
    std::vector<Element> xs_;
    std::vector<Element> ys_;
};

/// Sum of the leading-term x-degrees. Throws NotGroebnerShape if two
/// elements share a leading y-degree, ZeroPolynomial on a zero element.
long long delta(const PolyBasis& b);

/// Iterative interpolation: a Groebner basis of the module of polynomials
/// with y-degree below rho vanishing to order r at every point.
PolyBasis iia(const Field& f, const InterpPoints& pts, int r, int rho, const TermOrder& ord);

/// Extends a Groebner basis by one generator (multi-dimensional Euclidean
/// algorithm). A generator that reduces to zero is dropped. `steps`, when
/// given, is incremented once per inner reduction step.
PolyBasis reduce_extend(const Field& f, PolyBasis b, BiPoly p, std::size_t* steps = nullptr);

/// Folds (y - T)^j phi^(r-j) and y^j (y - T)^r through reduce_extend.
PolyBasis lee_osullivan(const Field& f, const InterpPoints& pts, int r, int rho, int k,
                        std::size_t* steps = nullptr);

/// The generators (y - T)^j phi^(r-j), j <= r, then y^j (y - T)^r, up to y-degree rho - 1.
std::vector<BiPoly> lee_osullivan_generators(const Field& f, const InterpPoints& pts, int r, int rho);

struct Verdict {
    bool ok = true;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

/// Distinct leading y-degrees, vanishing to order r at every point and
/// delta(B) == n r (r + 1) / 2.
Verdict verify_module_basis(const Field& f, const PolyBasis& b, const InterpPoints& pts, int r);
/// Module conditions with the given n, leading y-degrees 0..m contiguous and
/// a top element whose leading term is y^m.
Verdict verify_ideal_basis(const Field& f, const PolyBasis& b, const InterpPoints& pts, int r, int n);

/// Sorts basis elements by the y-degree of their leading terms.
void sort_by_leading_ydeg(PolyBasis& b);

} // namespace gsi

#endif
