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

// Acceptance suite: one line per criterion, exact equality throughout.
// Exits nonzero if any criterion fails or overruns its time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/random.hpp"
#include "tpinv/cli.hpp"
#include "tpinv/tpinv.hpp"

using namespace tpinv;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Z2 = RingSpec::integers_mod(2);
const RingSpec Z6 = RingSpec::integers_mod(6);
const RingSpec Z8 = RingSpec::integers_mod(8);

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<std::string()> check;  // empty string on success
};

int cli_exit(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(std::move(args), out, err);
}

std::string base_values() {
    if (minor_recursive(Z, 2, 1) != parse_polynomial(Z, 2, "x1")) return "m1 != x1";
    if (minor_recursive(Z, 2, 2) != parse_polynomial(Z, 2, "x1^2 - x2")) return "m2 != x1^2 - x2";
    return {};
}

std::string oracle_agreement() {
    for (const auto& ring : {Z, Z6}) {
        const auto table = minor_table(ring, 12);
        for (std::size_t k = 1; k <= 12; ++k) {
            const auto t = build_toeplitz(ring, 12, k);
            if (k <= 7 && table[k] != det_leibniz(t)) return ring.to_string() + ": Leibniz disagrees at k=" + std::to_string(k);
            if (table[k] != det_berkowitz(t)) return ring.to_string() + ": Berkowitz disagrees at k=" + std::to_string(k);
        }
    }
    return {};
}

std::string generator_involution() {
    for (const auto& ring : {Z, Z2, Z6})
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto report = verify_involution(ring, n);
            if (!report.overall) return ring.to_string() + " n=" + std::to_string(n) + " fails at x" + std::to_string(report.first_failure());
            const int code = cli_exit({"verify", "--n", std::to_string(n), "--ring", ring.to_string()});
            if (code != 0) return "verify exit code " + std::to_string(code) + " for " + ring.to_string() + " n=" + std::to_string(n);
        }
    return {};
}

std::string random_involution() {
    std::mt19937_64 rng(20261014);
    for (const auto& ring : {Z, Z8})
        for (int i = 0; i < 100; ++i) {
            const auto p = gen::random_polynomial(rng, ring, 5, 3);
            if (apply_phi_twice(p, ring, 5) != p) return ring.to_string() + ": phi(phi(p)) != p for p = " + p.to_string();
        }
    return {};
}

std::string inverse_recursion() {
    const auto table = minor_table(Z, 12);
    for (std::size_t k = 1; k <= 12; ++k)
        if (recover_generator(Z, 12, k, table) != Polynomial::variable(Z, 12, k)) return "k=" + std::to_string(k);
    return {};
}

std::string first_column_lemma() {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    const auto table = minor_table(Z6, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Polynomial> a(size(rng), Polynomial(Z6, 5));
        for (auto& entry : a) entry = gen::random_polynomial(rng, Z6, 5, 2, 3);
        if (first_column_det(table, a) != det_leibniz(toeplitz_with_first_column(Z6, 5, a)))
            return "trial " + std::to_string(trial) + " with k=" + std::to_string(a.size());
    }
    return {};
}

std::string leading_sign() {
    const auto table = minor_table(Z, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
        const Integer expected = k % 2 == 1 ? 1 : -1;
        if (table[k].coefficient(Monomial::variable(12, k)).value() != expected) return "k=" + std::to_string(k);
    }
    return {};
}

std::string weighted_homogeneity() {
    std::vector<unsigned> weights;
    for (unsigned i = 1; i <= 12; ++i) weights.push_back(i);
    for (std::size_t k = 1; k <= 12; ++k) {
        const auto det = det_berkowitz(build_toeplitz(Z, 12, k));
        for (const auto& [m, c] : det.terms())
            if (weighted_degree(m, weights) != k) return "m" + std::to_string(k) + " contains " + m.to_string();
    }
    return {};
}

std::string negative_control() {
    const auto report = verify_involution(minor_table(Z, 3).with_minor(2, Polynomial::variable(Z, 3, 2)));
    if (report.overall) return "corrupted table reported as involution";
    if (report.first_failure() != 3) return "expected failure at x3, got x" + std::to_string(report.first_failure());
    const int code = cli_exit({"verify", "--n", "3", "--ring", "z", "--minor-override", "2:x2"});
    if (code != 1) return "verify exited " + std::to_string(code) + ", expected 1";
    return {};
}

std::string axioms_and_round_trip() {
    std::mt19937_64 rng(10);
    for (const auto& ring : gen::standard_rings()) {
        const auto zero = RingElement::zero(ring), one = RingElement::one(ring);
        for (int i = 0; i < 1000; ++i) {
            const auto a = gen::random_element(rng, ring), b = gen::random_element(rng, ring), c = gen::random_element(rng, ring);
            const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                            a * (b + c) == a * b + a * c && a + zero == a && a * one == a && (a + -a).is_zero();
            if (!ok) return ring.to_string() + ": ring axiom fails for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
        }
        for (int i = 0; i < 1000; ++i) {
            const auto p = gen::random_polynomial(rng, ring, 4, 5, 8);
            if (parse_polynomial(ring, 4, p.to_string()) != p) return ring.to_string() + ": text round trip fails for " + p.to_string();
            if (polynomial_from_json(to_json(p)) != p) return ring.to_string() + ": JSON round trip fails for " + p.to_string();
        }
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1 base values m1 = x1, m2 = x1^2 - x2", 1, base_values},
        {"AC2 recursion = Leibniz (k<=7) = Berkowitz (k<=12) over Z, Z/6", 30, oracle_agreement},
        {"AC3 phi(phi(x_k)) = x_k for n<=10 over Z, Z/2, Z/6; verify exits 0", 60, generator_involution},
        {"AC4 phi(phi(p)) = p for 100 random p (n=5, deg<=3) over Z, Z/8", 30, random_involution},
        {"AC5 inverse recursion recovers x_k for k<=12 over Z", 10, inverse_recursion},
        {"AC6 first-column lemma on 200 random columns over Z/6", 30, first_column_lemma},
        {"AC7 coefficient of x_k in m_k is (-1)^(k-1), k<=12", 1, leading_sign},
        {"AC8 m_k is weighted homogeneous of degree k, k<=12", 30, weighted_homogeneity},
        {"AC9 corrupted table (m2 := x2) fails; verify exits 1", 1, negative_control},
        {"AC10 ring axioms and polynomial round trips, 1000 cases per ring", 20, axioms_and_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.check();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && seconds > c.budget_seconds) problem = "exceeded time budget of " + std::to_string(c.budget_seconds) + " s";
        std::ostringstream timing;
        timing.precision(3);
        timing << std::fixed << seconds;
        std::cout << (problem.empty() ? "[PASS] " : "[FAIL] ") << c.name << " (" << timing.str() << " s)";
        if (!problem.empty()) std::cout << ": " << problem;
        std::cout << '\n';
        if (!problem.empty()) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
