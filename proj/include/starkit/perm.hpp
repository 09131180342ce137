#pragma once

// k-permutations of [n]: the vertex language of the (n,k)-star graph.
//
// Symbols are 1-based (1..n). A KPerm of length k over ground set [n] is a
// sequence of k distinct symbols; ranks are 0-based lexicographic positions
// among all n!/(n-k)! such sequences.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starkit {

using Symbol = std::uint8_t;
using Rank = std::uint64_t;

constexpr int kMaxLength = 16;
constexpr int kMaxGround = 255;

/// Invalid input to a pure operation (bad position, duplicate symbol, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a configured size limit.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_(required) {}
    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

/// Falling factorial a·(a-1)·…·(a-count+1). Throws ResourceError on uint64 overflow.
std::uint64_t falling_factorial(int a, int count);

class KPerm {
public:
    KPerm() = default;
    /// Validates distinctness, range, and 1 <= k <= n-1.
    KPerm(int n, std::span<const int> symbols);
    KPerm(int n, std::initializer_list<int> symbols);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int operator[](int pos) const noexcept { return symbols_[pos]; }  // 0-based
    int first() const noexcept { return symbols_[0]; }
    int last() const noexcept { return symbols_[k_ - 1]; }

    bool contains(int symbol) const noexcept;
    /// 0-based position of `symbol`, or -1.
    int find(int symbol) const noexcept;

    std::span<const Symbol> symbols() const noexcept { return {symbols_.data(), static_cast<std::size_t>(k_)}; }

    /// Same symbols viewed over a larger ground set [new_n].
    KPerm widen(int new_n) const;

    /// Comma-separated canonical form, or digit-compact form ("124") when n <= 9.
    std::string to_string(bool compact = false) const;

    /// Lexicographic on symbol sequences; n must match for equality to be meaningful.
    friend bool operator==(const KPerm& a, const KPerm& b) noexcept;
    friend std::strong_ordering operator<=>(const KPerm& a, const KPerm& b) noexcept;

private:
    friend KPerm swap_first(const KPerm&, int);
    friend KPerm replace_first(const KPerm&, int);
    friend KPerm substitute(const KPerm&, int, int);
    friend KPerm swap_first_two(const KPerm&);
    friend KPerm append(const KPerm&, int);
    friend class PermSpace;

    std::array<Symbol, kMaxLength> symbols_{};
    std::uint8_t n_ = 0;
    std::uint8_t k_ = 0;
};

/// Exchange positions 1 and i (1-based, 2 <= i <= k).
KPerm swap_first(const KPerm& p, int i);
/// Replace the first symbol by an unused symbol x.
KPerm replace_first(const KPerm& p, int x);
/// Put symbol m where x occurs; identity when x is absent. m must be absent.
KPerm substitute(const KPerm& p, int x, int m);
/// Exchange the first two symbols.
KPerm swap_first_two(const KPerm& p);
/// Append an unused symbol x (length grows by one; requires k+1 <= n-1).
KPerm append(const KPerm& p, int x);

/// Parses "1,2,4" (any n) or "124" (n <= 9). Rejects duplicates and out-of-range symbols.
KPerm parse_kperm(std::string_view text, int n);

/// Γ_{n,k} with precomputed falling-factorial weights for ranking.
class PermSpace {
public:
    PermSpace(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    Rank size() const noexcept { return size_; }

    Rank rank(const KPerm& p) const;
    KPerm unrank(Rank r) const;

private:
    int n_;
    int k_;
    Rank size_;
    std::array<Rank, kMaxLength> weights_{};
};

Rank rank(const KPerm& p);
KPerm unrank(Rank r, int n, int k);

}  // namespace starkit
