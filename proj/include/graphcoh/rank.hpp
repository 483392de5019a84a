#pragma once

#include <cstdint>
#include <optional>

#include "graphcoh/complex.hpp"

namespace graphcoh {

enum class RankMethod { ExactFractionFree, ModularProbabilistic };

struct RankResult {
    int rank = 0;
    RankMethod method = RankMethod::ExactFractionFree;
    std::optional<std::uint64_t> modulus;
};

/// Rank over the rationals, exact arithmetic. Structural preprocessing
/// (zero/singleton peeling) then sparse fraction-free elimination with
/// fill-reducing pivoting on arbitrary-precision integers.
RankResult rank_exact(const SparseIntMatrix& m);

/// Rank over GF(p) for a prime p > 2^30; always <= the rational rank.
/// Screening heuristic only. Throws std::invalid_argument if p is not prime.
RankResult rank_modular(const SparseIntMatrix& m, std::uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace graphcoh
