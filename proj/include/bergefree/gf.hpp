#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bergefree::gf {

class FieldCtx;

/// Element of GF(p^k), represented by its canonical rank: the position of its
/// coefficient list (low-degree coefficient first) in lexicographic order.
/// Rank 0 is the zero element. Elements are only valid while their context
/// is alive.
class Fe {
public:
    Fe() = default;
    Fe(const FieldCtx* ctx, std::int64_t rank) : ctx_(ctx), rank_(rank) {}

    std::int64_t rank() const { return rank_; }
    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return rank_ == 0; }

    std::vector<int> coeffs() const;
    std::string str() const;

    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }
    bool operator<(const Fe& o) const;

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator-() const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::int64_t rank_ = 0;
};

/// Arithmetic context for GF(p^k) with p an odd prime. The modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p), coefficients ordered low-to-high, so two contexts with equal (p, k)
/// are always interchangeable. Immutable after construction; all operations
/// are pure and safe for unrestricted concurrent use.
class FieldCtx {
public:
    FieldCtx(std::int64_t p, int k);
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::int64_t p() const { return p_; }
    int degree() const { return k_; }
    std::int64_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fe zero() const { return Fe(this, 0); }
    Fe one() const;
    Fe element(std::int64_t rank) const;
    Fe from_coeffs(const std::vector<int>& coeffs) const;

    std::vector<Fe> elements() const;
    std::vector<Fe> nonzero_elements() const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe mul(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe inv(Fe a) const;
    Fe pow(Fe a, std::int64_t e) const;

    std::vector<int> coeffs_of(Fe a) const;
    std::string to_string(Fe a) const;
    Fe parse(std::string_view text) const;

    /// Field descriptor in the "p^k" text form, e.g. "3^2".
    std::string descriptor() const;

    /// True when elements from the other context can be mixed with this one.
    bool compatible(const FieldCtx& other) const;

private:
    void require_mine(Fe a) const;

    std::int64_t p_ = 0;
    std::int64_t q_ = 0;
    int k_ = 0;
    std::vector<int> modulus_;            // k+1 coefficients, low-to-high, monic
    std::vector<std::uint16_t> mul_table_; // q*q entries when tables fit
    std::vector<std::uint16_t> inv_table_; // q entries when tables fit

    std::int64_t mul_ranks(std::int64_t a, std::int64_t b) const;
};

/// Builds GF(p^k) for an odd prime p and k >= 1. Rejects p = 2, composite p
/// and k < 1.
std::shared_ptr<const FieldCtx> make_field(std::int64_t p, int k);

/// Parses a "p^k" descriptor ("5^1", "3^2"); a bare prime is read as p^1.
std::shared_ptr<const FieldCtx> make_field(std::string_view descriptor);

/// Deterministic generator used by the sampled identity oracles. mt19937_64
/// output is standardized; values are reduced by rejection rather than
/// through a distribution, so sequences are identical across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Identity oracles.
//
// Each oracle searches for a counterexample to one of the field identities
// the construction relies on, and returns the offending tuple if one exists.
// Fields with q <= 7 are searched exhaustively over all admissible tuples;
// larger fields are sampled (sample_budget tuples, seeded, default seed 0).
// ---------------------------------------------------------------------------

/// Tuple (alpha, beta, gamma, delta, a1, a2, a3, a4), all nonzero with
/// alpha + beta = gamma + delta, satisfying
///   alpha*a1 + beta*a2 = gamma*a3 + delta*a4 and the same with squares,
/// but violating alpha*beta*(a1-a2)^2 = gamma*delta*(a3-a4)^2.
std::optional<std::vector<Fe>> oracle_ruzsa(const FieldCtx& ctx,
                                            std::int64_t sample_budget,
                                            std::uint64_t seed = 0);

/// Tuple (a1, a2, a3, a4) of nonzero elements with equal sums and equal sums
/// of squares but {a1, a2} != {a3, a4}; none exists because {(a, a^2)} is a
/// Sidon set in F_q x F_q.
std::optional<std::vector<Fe>> oracle_sidon(const FieldCtx& ctx,
                                            std::int64_t sample_budget,
                                            std::uint64_t seed = 0);

/// Tuple (alpha, beta, gamma, a1, a2, a3) with distinct alpha, beta, gamma,
/// nonzero a_i, satisfying
///   alpha*(a2-a1) + beta*(a3-a2) + gamma*(a1-a3) = 0
/// and the squared variant, but with the a_i not all equal.
std::optional<std::vector<Fe>> oracle_triangle(const FieldCtx& ctx,
                                               std::int64_t sample_budget,
                                               std::uint64_t seed = 0);

/// Tuple (alpha, beta, a1, a2, a3, b1, b2, b3), alpha, beta and all a_i, b_i
/// nonzero, alpha + beta != 0, with alpha*a_i + beta*b_i constant in i and
/// likewise for squares, but no two indices i < j with (a_i, b_i) = (a_j, b_j).
std::optional<std::vector<Fe>> oracle_threepairs(const FieldCtx& ctx,
                                                 std::int64_t sample_budget,
                                                 std::uint64_t seed = 0);

} // namespace bergefree::gf
