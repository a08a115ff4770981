/*
   Copyright 2026 The coxforge authors

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

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "coxforge/poly.hpp"

namespace coxforge {

/// Binomial coefficient as int64; the desk-scale degrees used here stay far
/// below overflow.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim of the degree-b piece of k[y0..yn]: C(b+n, n), zero for b < 0.
inline std::int64_t dim_r(int n, int b) { return b < 0 ? 0 : binomial(b + n, n); }

/// Monomials of the given bidegree, in a fixed documented order:
/// sorted descending lexicographically on the exponent tuple in generator
/// order x0 > x1 > y0 > ... > yn > aux. Empty for unattainable degrees.
/// Finiteness is guaranteed by the ring invariant that auxiliary generators
/// have positive second degree coordinate.
inline std::vector<Monomial> monomial_basis(const RingSpec& ring, Bidegree deg) {
    std::vector<Monomial> out;
    Monomial work = Monomial::one(ring);
    const int aux0 = ring.aux_index(0);
    const int naux = ring.aux_count();
    const int n = ring.n();

    // enumerate y exponents of total degree yb into work, then emit
    std::function<void(int, int, int)> fill_y = [&](int j, int yb, int xa) {
        if (j == n) {
            work[ring.y_index(n)] = yb;
            for (int a0 = xa; a0 >= 0; --a0) {  // descending => lex descending on x0
                work[0] = a0;
                work[1] = xa - a0;
                out.push_back(work);
            }
            work[ring.y_index(n)] = 0;
            return;
        }
        for (int e = yb; e >= 0; --e) {
            work[ring.y_index(j)] = e;
            fill_y(j + 1, yb - e, xa);
        }
        work[ring.y_index(j)] = 0;
    };

    std::function<void(int, Bidegree)> rec = [&](int k, Bidegree rem) {
        if (rem.b < 0) return;
        if (k == naux) {
            if (rem.a < 0) return;
            fill_y(0, rem.b, rem.a);
            return;
        }
        Bidegree d = ring.degree_of(aux0 + k);
        int emax = rem.b / d.b;
        for (int e = 0; e <= emax; ++e) {
            work[aux0 + k] = e;
            rec(k + 1, rem - e * d);
        }
        work[aux0 + k] = 0;
    };

    rec(0, deg);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// |monomial_basis(ring, deg)| without materializing the monomials.
inline std::int64_t monomial_count(const RingSpec& ring, Bidegree deg) {
    const int aux0 = ring.aux_index(0);
    const int naux = ring.aux_count();
    std::function<std::int64_t(int, Bidegree)> rec = [&](int k, Bidegree rem) -> std::int64_t {
        if (rem.b < 0) return 0;
        if (k == naux) return rem.a < 0 ? 0 : (rem.a + 1) * dim_r(ring.n(), rem.b);
        Bidegree d = ring.degree_of(aux0 + k);
        std::int64_t total = 0;
        for (int e = 0; e * d.b <= rem.b; ++e) total += rec(k + 1, rem - e * d);
        return total;
    };
    return rec(0, deg);
}

/// Hilbert function of a free Z^2-graded polynomial ring on an arbitrary
/// finite list of generator degrees: the number of exponent tuples of the
/// given bidegree. Generators must have b > 0, or b = 0 with a > 0, so each
/// piece is finite.
inline std::int64_t free_algebra_dim(std::vector<Bidegree> gens, Bidegree deg) {
    for (const auto& g : gens)
        if (g.b < 0 || (g.b == 0 && g.a <= 0))
            throw UsageError("free_algebra_dim: generator degree " + g.to_string() +
                             " makes pieces infinite");
    // enumerate b-carrying generators first; the (a>0, 0) ones then face a
    // fixed, necessarily nonnegative remaining first degree
    std::stable_partition(gens.begin(), gens.end(), [](Bidegree d) { return d.b > 0; });
    std::function<std::int64_t(size_t, Bidegree)> rec = [&](size_t k, Bidegree rem) -> std::int64_t {
        if (rem.b < 0) return 0;
        if (k == gens.size()) return (rem.a == 0 && rem.b == 0) ? 1 : 0;
        const Bidegree d = gens[k];
        std::int64_t total = 0;
        if (d.b == 0) {
            if (rem.a < 0) return 0;
            for (int e = 0; e * d.a <= rem.a; ++e) total += rec(k + 1, rem - e * d);
        } else {
            for (int e = 0; e * d.b <= rem.b; ++e) total += rec(k + 1, rem - e * d);
        }
        return total;
    };
    return rec(0, deg);
}

/// Positions (index into basis) of a subsequence selected by a predicate.
template <typename Pred>
std::vector<Monomial> filter_monomials(const std::vector<Monomial>& basis, Pred pred) {
    std::vector<Monomial> out;
    for (const auto& m : basis)
        if (pred(m)) out.push_back(m);
    return out;
}

}  // namespace coxforge
