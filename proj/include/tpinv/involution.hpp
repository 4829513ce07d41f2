/*
   Copyright 2026 The tpinv Authors

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

#ifndef TPINV_INVOLUTION_HPP
#define TPINV_INVOLUTION_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "json.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "toeplitz.hpp"

namespace tpinv {

/// The substitution x_k -> table[k] for k = 1..n.
inline Homomorphism phi_from_table(const MinorTable& table) {
    std::vector<Polynomial> images(table.minors().begin() + 1, table.minors().end());
    return {table.ring(), table.nvars(), std::move(images)};
}

/// phi: x_k -> m_k on R[x_1..x_n].
inline Homomorphism phi_homomorphism(const RingSpec& ring, std::size_t n) { return phi_from_table(minor_table(ring, n)); }

inline Polynomial apply_phi(const Polynomial& p, const RingSpec& ring, std::size_t n) {
    if (!(p.ring() == ring) || p.nvars() != n) throw SpecMismatch("polynomial is not over " + ring.to_string() + " in " + std::to_string(n) + " variables");
    return substitute(p, phi_homomorphism(ring, n));
}

inline Polynomial apply_phi_twice(const Polynomial& p, const RingSpec& ring, std::size_t n) {
    if (!(p.ring() == ring) || p.nvars() != n) throw SpecMismatch("polynomial is not over " + ring.to_string() + " in " + std::to_string(n) + " variables");
    const auto phi = phi_homomorphism(ring, n);
    return substitute(substitute(p, phi), phi);
}

struct GeneratorCheck {
    std::size_t k;
    bool passed;
    Polynomial image;
    Polynomial double_image;
};

struct InvolutionReport {
    RingSpec ring;
    std::size_t n = 0;
    std::vector<GeneratorCheck> per_generator;
    bool overall = true;

    /// k of the first failing generator, 0 if none fails.
    std::size_t first_failure() const {
        auto it = std::find_if(per_generator.begin(), per_generator.end(), [](const GeneratorCheck& g) { return !g.passed; });
        return it == per_generator.end() ? 0 : it->k;
    }
};

/// Checks phi(phi(x_k)) == x_k for every generator, with phi built from
/// `table`. A mismatch is recorded in the report, never thrown.
inline InvolutionReport verify_involution(const MinorTable& table) {
    const auto phi = phi_from_table(table);
    InvolutionReport report{table.ring(), table.nvars(), {}, true};
    report.per_generator.reserve(table.nvars());
    for (std::size_t k = 1; k <= table.nvars(); ++k) {
        const auto x = Polynomial::variable(table.ring(), table.nvars(), k);
        auto image = substitute(x, phi);
        auto twice = substitute(image, phi);
        const bool ok = twice == x;
        report.overall = report.overall && ok;
        report.per_generator.push_back({k, ok, std::move(image), std::move(twice)});
    }
    return report;
}

inline InvolutionReport verify_involution(const RingSpec& ring, std::size_t n) { return verify_involution(minor_table(ring, n)); }

inline nlohmann::json to_json(const InvolutionReport& report) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : report.per_generator)
        gens.push_back({{"k", g.k}, {"pass", g.passed}, {"image", to_json(g.image)}, {"double_image", to_json(g.double_image)}});
    return {{"ring", report.ring.to_string()}, {"n", report.n}, {"overall", report.overall}, {"generators", std::move(gens)}};
}

}  // namespace tpinv

#endif
