#pragma once

/**
 * Max-plus arithmetic.
 *
 * Scalars live in R u {-inf} with a (+) b = max(a, b) and a (x) b = a + b.
 * Adjacency matrices are restricted to the two-element sub-semiring
 * {0, -inf}; they are stored one bit per entry (bit set <=> entry is 0), so
 * the matrix product is an OR-of-ANDs over bit rows.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace maxcon {

class ExtendedReal {
public:
    using value_type = std::int64_t;

    constexpr ExtendedReal() noexcept = default;  // -inf
    constexpr ExtendedReal(value_type v) noexcept : finite_(true), value_(v) {}  // NOLINT

    static constexpr ExtendedReal neg_inf() noexcept { return ExtendedReal{}; }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_neg_inf() const noexcept { return !finite_; }

    // Precondition: is_finite().
    constexpr value_type value() const noexcept { return value_; }

    constexpr bool operator==(const ExtendedReal& o) const noexcept {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr std::strong_ordering operator<=>(const ExtendedReal& o) const noexcept {
        if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
        return value_ <=> o.value_;
    }

private:
    bool finite_ = false;
    value_type value_ = 0;
};

inline constexpr ExtendedReal kNegInf = ExtendedReal::neg_inf();

// a (+) b
constexpr ExtendedReal t_add(ExtendedReal a, ExtendedReal b) noexcept { return a < b ? b : a; }

// a (x) b; throws OverflowError when the finite sum is not representable.
ExtendedReal t_mul(ExtendedReal a, ExtendedReal b);

std::string to_string(ExtendedReal x);
ExtendedReal parse_extended_real(const std::string& token);  // "-inf" or a decimal integer
std::ostream& operator<<(std::ostream& os, ExtendedReal x);

using StateVector = std::vector<ExtendedReal>;

bool all_finite(std::span<const ExtendedReal> x) noexcept;
bool is_consensus(std::span<const ExtendedReal> x) noexcept;  // all components equal
ExtendedReal max_component(std::span<const ExtendedReal> x) noexcept;

// Square boolean matrix, the image of an adjacency matrix under 0 -> 1, -inf -> 0.
class BoolMatrix {
public:
    explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j) != 0; }
    void set(std::size_t i, std::size_t j, bool v) { cells_.at(i * n_ + j) = v ? 1 : 0; }

    bool operator==(const BoolMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

// Tropical adjacency matrix: n x n over {0, -inf} with a zero diagonal.
// Entry (i, j) is 0 iff node i hears node j, i.e. i == j or edge j -> i.
class AdjMatrix {
public:
    // Diagonal-only matrix I (no edges besides self-loops).
    explicit AdjMatrix(std::size_t n);

    static AdjMatrix identity(std::size_t n) { return AdjMatrix(n); }
    // The all-zero matrix, i.e. the completely connected graph.
    static AdjMatrix all_zero(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    bool is_zero_at(std::size_t i, std::size_t j) const;
    ExtendedReal at(std::size_t i, std::size_t j) const {
        return is_zero_at(i, j) ? ExtendedReal{0} : kNegInf;
    }

    // Make entry (i, j) zero.
    void set_zero(std::size_t i, std::size_t j);
    // Make entry (i, j) -inf; throws std::invalid_argument on the diagonal.
    void set_neg_inf(std::size_t i, std::size_t j);

    std::size_t zero_count() const noexcept;

    bool operator==(const AdjMatrix&) const = default;
    // Arbitrary total order, for use as an ordered-container key.
    std::strong_ordering operator<=>(const AdjMatrix&) const = default;

    // Raw bit row access for the multiplication kernels.
    std::span<const std::uint64_t> row_bits(std::size_t i) const;

private:
    friend AdjMatrix mat_add(const AdjMatrix&, const AdjMatrix&);
    friend AdjMatrix mat_mul(const AdjMatrix&, const AdjMatrix&);

    std::uint64_t* row_ptr(std::size_t i) { return bits_.data() + i * words_; }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

AdjMatrix mat_add(const AdjMatrix& a, const AdjMatrix& b);
AdjMatrix mat_mul(const AdjMatrix& a, const AdjMatrix& b);
StateVector mat_vec(const AdjMatrix& a, std::span<const ExtendedReal> x);

// A^k by iterated left multiplication; A^0 = I.
AdjMatrix mat_pow(const AdjMatrix& a, std::size_t k);
// Same value via repeated squaring, for pure power queries.
AdjMatrix mat_pow_squaring(const AdjMatrix& a, std::size_t k);

bool is_all_zero(const AdjMatrix& a) noexcept;

BoolMatrix to_boolean(const AdjMatrix& a);
// Throws std::invalid_argument if any diagonal entry is 0.
AdjMatrix from_boolean(const BoolMatrix& m);

// Text format: "n" then n rows of n tokens, each "0" or "-inf".
AdjMatrix read_matrix(std::istream& in);
AdjMatrix parse_matrix(const std::string& text);
std::string format_matrix(const AdjMatrix& a);
// Same layout with "1"/"0".
std::string format_boolean(const BoolMatrix& m);

}  // namespace maxcon
