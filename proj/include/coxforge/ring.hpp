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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coxforge/errors.hpp"
#include "coxforge/field.hpp"

namespace coxforge {

/// Z^2-degree (a, b): sections of O(a, b) on P^1 x P^n.
struct Bidegree {
    int a = 0;
    int b = 0;

    friend Bidegree operator+(Bidegree x, Bidegree y) { return {x.a + y.a, x.b + y.b}; }
    friend Bidegree operator-(Bidegree x, Bidegree y) { return {x.a - y.a, x.b - y.b}; }
    friend Bidegree operator*(int c, Bidegree x) { return {c * x.a, c * x.b}; }
    bool operator==(const Bidegree&) const = default;
    auto operator<=>(const Bidegree&) const = default;

    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

/// Bigraded polynomial ring over an exact field, with the fixed generators
/// x0, x1 of degree (1,0) and y0..yn of degree (0,1), plus auxiliary
/// generators of arbitrary bidegree (e.g. w_k of degree (i_{k-1}-i_k, e) or
/// z_k of degree (-1, e)). Auxiliary degrees must have positive second
/// coordinate -- that is what keeps every bidegree piece finite-dimensional.
class RingSpec {
  public:
    struct Generator {
        std::string name;
        Bidegree degree;
    };

    RingSpec(int n, FieldChoice field, std::vector<Generator> aux = {})
        : n_(n), field_(field) {
        if (n < 3) throw UsageError("RingSpec requires n >= 3");
        gens_.push_back({"x0", {1, 0}});
        gens_.push_back({"x1", {1, 0}});
        for (int j = 0; j <= n; ++j) gens_.push_back({"y" + std::to_string(j), {0, 1}});
        for (auto& g : aux) {
            if (g.degree.b <= 0)
                throw UsageError("auxiliary generator " + g.name +
                                 " must have positive second degree coordinate");
            gens_.push_back(g);
        }
        aux_count_ = static_cast<int>(aux.size());
    }

    int n() const { return n_; }
    const FieldChoice& field() const { return field_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    int aux_count() const { return aux_count_; }

    // fixed generator layout: x0, x1, y0..yn, aux...
    int x_index(int i) const { return i; }
    int y_index(int j) const { return 2 + j; }
    int aux_index(int k) const { return 2 + (n_ + 1) + k; }
    bool is_aux(int idx) const { return idx >= aux_index(0); }
    bool is_y(int idx) const { return idx >= 2 && idx < 2 + (n_ + 1); }

    const Generator& generator(int idx) const { return gens_[idx]; }
    Bidegree degree_of(int idx) const { return gens_[idx].degree; }
    const std::string& name_of(int idx) const { return gens_[idx].name; }

    /// Index of a generator by name, or -1.
    int find(const std::string& name) const {
        for (int i = 0; i < generator_count(); ++i)
            if (gens_[i].name == name) return i;
        return -1;
    }

    /// Same base ring with additional auxiliary generators.
    std::shared_ptr<const RingSpec> extend(std::vector<Generator> extra_aux) const {
        std::vector<Generator> aux(gens_.begin() + aux_index(0), gens_.end());
        for (auto& g : extra_aux) aux.push_back(std::move(g));
        return std::make_shared<const RingSpec>(n_, field_, std::move(aux));
    }

    bool same_layout(const RingSpec& o) const {
        if (n_ != o.n_ || !(field_ == o.field_) || gens_.size() != o.gens_.size()) return false;
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name != o.gens_[i].name || !(gens_[i].degree == o.gens_[i].degree))
                return false;
        return true;
    }

  private:
    int n_;
    FieldChoice field_;
    std::vector<Generator> gens_;
    int aux_count_ = 0;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// S = k[x0, x1, y0..yn], the Cox ring of the ambient P^1 x P^n.
inline RingPtr make_base_ring(int n, FieldChoice field) {
    return std::make_shared<const RingSpec>(n, field);
}

}  // namespace coxforge
