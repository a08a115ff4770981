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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxforge/ring.hpp"

namespace coxforge {

/// Monomial as a dense exponent vector indexed by the ring's generator list.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int gen_count) : exps_(gen_count, 0) {}

    static Monomial one(const RingSpec& ring) { return Monomial(ring.generator_count()); }
    static Monomial var(const RingSpec& ring, int idx, int e = 1) {
        Monomial m(ring.generator_count());
        m.exps_[idx] = e;
        return m;
    }

    int operator[](int idx) const { return exps_[idx]; }
    int& operator[](int idx) { return exps_[idx]; }
    int size() const { return static_cast<int>(exps_.size()); }

    Bidegree bidegree(const RingSpec& ring) const {
        Bidegree d{0, 0};
        for (int i = 0; i < size(); ++i)
            if (exps_[i]) d = d + exps_[i] * ring.degree_of(i);
        return d;
    }

    int total_exponent() const {
        int t = 0;
        for (int e : exps_) t += e;
        return t;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < size(); ++i) r.exps_[i] -= o.exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    bool is_one() const {
        for (int e : exps_)
            if (e) return false;
        return true;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < size(); ++i)
            if (exps_[i] && o.exps_[i]) return false;
        return true;
    }

    /// True if every generator with nonzero exponent satisfies pred(idx).
    template <typename Pred>
    bool supported_on(Pred pred) const {
        for (int i = 0; i < size(); ++i)
            if (exps_[i] && !pred(i)) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
    // lexicographic on the exponent tuple, generator order x0 > x1 > y0 > ...
    auto operator<=>(const Monomial&) const = default;

    const std::vector<int>& exponents() const { return exps_; }

    std::string to_string(const RingSpec& ring) const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (!exps_[i]) continue;
            if (!s.empty()) s += "*";
            s += ring.name_of(i);
            if (exps_[i] != 1) s += "^" + std::to_string(exps_[i]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    std::vector<int> exps_;
};

/// Sparse polynomial: finite map from monomials to nonzero scalars. A zero
/// coefficient is never stored, so is_zero() is just emptiness.
template <Scalar K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, K c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_[Monomial::one(*ring)] = std::move(c);
        return p;
    }
    static Poly one(RingPtr ring) {
        K c = K::one(ring->field());
        return constant(std::move(ring), std::move(c));
    }
    static Poly term(RingPtr ring, Monomial m, K c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }
    static Poly var(RingPtr ring, int idx) {
        Monomial m = Monomial::var(*ring, idx);
        K c = K::one(ring->field());
        return term(std::move(ring), std::move(m), std::move(c));
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly& operator*=(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const K& c) { return a *= c; }
    friend Poly operator*(const K& c, Poly a) { return a *= c; }

    Poly mul_monomial(const Monomial& m) const {
        Poly r(ring_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// The common bidegree of all terms, or nullopt if inhomogeneous / zero.
    std::optional<Bidegree> bidegree() const {
        if (is_zero()) return std::nullopt;
        auto it = terms_.begin();
        Bidegree d = it->first.bidegree(*ring_);
        for (++it; it != terms_.end(); ++it)
            if (!(it->first.bidegree(*ring_) == d)) return std::nullopt;
        return d;
    }

    bool is_homogeneous(Bidegree d) const {
        auto bd = bidegree();
        return !is_zero() && bd && *bd == d;
    }

    /// True when only y-generators occur.
    bool is_y_only() const {
        for (const auto& [m, c] : terms_)
            if (!m.supported_on([&](int i) { return ring_->is_y(i); })) return false;
        return true;
    }

    /// Re-expresses the polynomial in another ring that contains all the
    /// generators this one uses, matching generators by name.
    Poly embed(const RingPtr& target) const {
        std::vector<int> map(ring_->generator_count(), -1);
        for (int i = 0; i < ring_->generator_count(); ++i)
            map[i] = target->find(ring_->name_of(i));
        Poly r(target);
        for (const auto& [m, c] : terms_) {
            Monomial t = Monomial::one(*target);
            for (int i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (map[i] < 0)
                    throw UsageError("cannot embed: generator " + ring_->name_of(i) +
                                     " missing from target ring");
                t[map[i]] += m[i];
            }
            r.add_term(t, c);
        }
        return r;
    }

    /// Substitutes images[i] for generator i. Images live in `target`.
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const {
        Poly r = Poly::zero(target);
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(target, c);
            for (int i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e) t = t * images[i];
            r += t;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        // print in descending lexicographic monomial order
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = it->second.to_string();
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c = c.substr(1);
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono = it->first.to_string(*ring_);
            if (mono == "1")
                s += c;
            else if (c == "1")
                s += mono;
            else
                s += c + "*" + mono;
        }
        return s;
    }

  private:
    void check(const Poly& o) const {
        if (ring_.get() != o.ring_.get() && !(ring_ && o.ring_ && ring_->same_layout(*o.ring_)))
            throw UsageError("polynomial operands from different rings");
    }

    RingPtr ring_;
    std::map<Monomial, K> terms_;
};

}  // namespace coxforge
