// Seeded random generators and the property suites behind `logfan verify all`
// and the acceptance checks.
#pragma once

#include "logfan/fan.hpp"
#include "logfan/monoid.hpp"
#include "logfan/topo.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logfan::verify {

using monoid::FsMonoid;
using monoid::MonoidHom;
using zlin::BigInt;
using zlin::IntMatrix;
using zlin::VecZ;

using Rng = std::mt19937_64;

// Engine-only bounded sampling, stable across platforms.
long rand_int(Rng& rng, long lo, long hi);

// Random saturated monoid with torsion-free ambient, rank <= max_rank,
// at most max_gens generators; may have units.
FsMonoid random_saturated_monoid(Rng& rng, std::size_t max_rank, std::size_t max_gens);

// Random sharp saturated monoid with torsion-free groupification.
FsMonoid random_sharp_monoid(Rng& rng, std::size_t max_rank, std::size_t max_gens,
                             bool nonzero = true);

// Random saturated monoid with a nontrivial torsion unit.
FsMonoid random_torsion_monoid(Rng& rng, std::size_t max_rank);

// Random hom between given saturated monoids; nullopt when no candidate is
// found within the attempt budget.
std::optional<MonoidHom> random_hom(Rng& rng, const FsMonoid& source, const FsMonoid& target,
                                    int attempts = 40);

monoid::Element random_element(Rng& rng, const FsMonoid& p, long max_coeff = 2);

fan::Fan random_complete_fan_2d(Rng& rng);
fan::Fan random_fan(Rng& rng, std::size_t rank);  // rank 2 or 3
VecZ random_support_point(Rng& rng, const fan::Fan& f);

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;
};

// The per-module invariant suites; `quick` trims case counts.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, bool quick);

}  // namespace logfan::verify
