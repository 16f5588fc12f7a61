#include "maxcon/tropical.hpp"

#include "maxcon/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace maxcon {

ExtendedReal t_mul(ExtendedReal a, ExtendedReal b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
    ExtendedReal::value_type sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
        throw OverflowError("tropical product " + std::to_string(a.value()) + " + " +
                            std::to_string(b.value()) + " overflows int64");
    }
    return ExtendedReal{sum};
}

std::string to_string(ExtendedReal x) {
    return x.is_finite() ? std::to_string(x.value()) : std::string("-inf");
}

ExtendedReal parse_extended_real(const std::string& token) {
    if (token == "-inf") return kNegInf;
    ExtendedReal::value_type v = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(0, "expected an integer or -inf, got '" + token + "'");
    }
    return ExtendedReal{v};
}

std::ostream& operator<<(std::ostream& os, ExtendedReal x) { return os << to_string(x); }

bool all_finite(std::span<const ExtendedReal> x) noexcept {
    return std::all_of(x.begin(), x.end(), [](ExtendedReal v) { return v.is_finite(); });
}

bool is_consensus(std::span<const ExtendedReal> x) noexcept {
    return std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>{}) == x.end();
}

ExtendedReal max_component(std::span<const ExtendedReal> x) noexcept {
    ExtendedReal m = kNegInf;
    for (auto v : x) m = t_add(m, v);
    return m;
}

// ---------------------------------------------------------------------------

AdjMatrix::AdjMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (n == 0) throw std::invalid_argument("adjacency matrix needs at least one node");
    for (std::size_t i = 0; i < n; ++i) set_zero(i, i);
}

AdjMatrix AdjMatrix::all_zero(std::size_t n) {
    AdjMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set_zero(i, j);
    return a;
}

bool AdjMatrix::is_zero_at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw NodeError("matrix index out of range");
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

void AdjMatrix::set_zero(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw NodeError("matrix index out of range");
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

void AdjMatrix::set_neg_inf(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw NodeError("matrix index out of range");
    if (i == j) throw std::invalid_argument("diagonal entries of an adjacency matrix are always 0");
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
}

std::size_t AdjMatrix::zero_count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::span<const std::uint64_t> AdjMatrix::row_bits(std::size_t i) const {
    if (i >= n_) throw NodeError("matrix row out of range");
    return {bits_.data() + i * words_, words_};
}

AdjMatrix mat_add(const AdjMatrix& a, const AdjMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("mat_add: dimension mismatch");
    AdjMatrix c = a;
    for (std::size_t k = 0; k < c.bits_.size(); ++k) c.bits_[k] |= b.bits_[k];
    return c;
}

AdjMatrix mat_mul(const AdjMatrix& a, const AdjMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("mat_mul: dimension mismatch");
    const std::size_t n = a.size();
    const std::size_t words = a.words_;
    AdjMatrix c(n);
    // c_ij = max_l (a_il + b_lj): row i of C is the OR of rows l of B over all l with a_il = 0.
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* out = c.row_ptr(i);
        const std::uint64_t* arow = a.bits_.data() + i * words;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t mask = arow[w];
            while (mask != 0) {
                const std::size_t l = w * 64 + static_cast<std::size_t>(std::countr_zero(mask));
                mask &= mask - 1;
                const std::uint64_t* brow = b.bits_.data() + l * words;
                for (std::size_t v = 0; v < words; ++v) out[v] |= brow[v];
            }
        }
    }
    return c;
}

StateVector mat_vec(const AdjMatrix& a, std::span<const ExtendedReal> x) {
    if (a.size() != x.size()) throw DimensionError("mat_vec: dimension mismatch");
    const std::size_t n = a.size();
    StateVector y(n, kNegInf);
    for (std::size_t i = 0; i < n; ++i) {
        ExtendedReal acc = kNegInf;
        for (std::size_t j = 0; j < n; ++j) acc = t_add(acc, t_mul(a.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

AdjMatrix mat_pow(const AdjMatrix& a, std::size_t k) {
    AdjMatrix p = AdjMatrix::identity(a.size());
    for (std::size_t step = 0; step < k; ++step) p = mat_mul(a, p);
    return p;
}

AdjMatrix mat_pow_squaring(const AdjMatrix& a, std::size_t k) {
    AdjMatrix result = AdjMatrix::identity(a.size());
    AdjMatrix base = a;
    while (k > 0) {
        if (k & 1u) result = mat_mul(result, base);
        k >>= 1;
        if (k > 0) base = mat_mul(base, base);
    }
    return result;
}

bool is_all_zero(const AdjMatrix& a) noexcept { return a.zero_count() == a.size() * a.size(); }

BoolMatrix to_boolean(const AdjMatrix& a) {
    BoolMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m.set(i, j, a.is_zero_at(i, j));
    return m;
}

AdjMatrix from_boolean(const BoolMatrix& m) {
    if (m.size() == 0) throw std::invalid_argument("from_boolean: empty matrix");
    AdjMatrix a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m.at(i, i)) {
            throw std::invalid_argument("from_boolean: diagonal entry " + std::to_string(i + 1) +
                                        " is 0; adjacency matrices need self-loops");
        }
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m.at(i, j)) a.set_zero(i, j);
    }
    return a;
}

// ---------------------------------------------------------------------------

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

}  // namespace

AdjMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing dimension line");
    auto head = split_tokens(line);
    std::size_t n = 0;
    if (head.size() != 1 || std::from_chars(head[0].data(), head[0].data() + head[0].size(), n).ptr !=
                                head[0].data() + head[0].size() ||
        n == 0) {
        throw ParseError(lineno, "expected a positive dimension, got '" + line + "'");
    }
    AdjMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_content_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(n) + " matrix rows");
        auto toks = split_tokens(line);
        if (toks.size() != n) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " entries, got " +
                                         std::to_string(toks.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (toks[j] == "0") {
                a.set_zero(i, j);
            } else if (toks[j] == "-inf") {
                if (i == j) throw ParseError(lineno, "diagonal entry must be 0");
            } else {
                throw ParseError(lineno, "entry must be 0 or -inf, got '" + toks[j] + "'");
            }
        }
    }
    if (next_content_line(in, line, lineno)) throw ParseError(lineno, "trailing content after matrix");
    return a;
}

AdjMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

std::string format_matrix(const AdjMatrix& a) {
    std::string out = std::to_string(a.size()) + "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j > 0) out += ' ';
            out += a.is_zero_at(i, j) ? "0" : "-inf";
        }
        out += '\n';
    }
    return out;
}

std::string format_boolean(const BoolMatrix& m) {
    std::string out = std::to_string(m.size()) + "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) out += ' ';
            out += m.at(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

}  // namespace maxcon
