#include "starkit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace starkit {

namespace {

void check_ground(int n, int k) {
    if (n < 2 || n > kMaxGround)
        throw ArgumentError("ground set size n=" + std::to_string(n) + " outside 2.." + std::to_string(kMaxGround));
    if (k < 1 || k > n - 1 || k > kMaxLength)
        throw ArgumentError("length k=" + std::to_string(k) + " outside 1..min(n-1," + std::to_string(kMaxLength) +
                            ") for n=" + std::to_string(n));
}

}  // namespace

std::uint64_t falling_factorial(int a, int count) {
    std::uint64_t out = 1;
    for (int t = 0; t < count; ++t) {
        auto factor = static_cast<std::uint64_t>(a - t);
        if (factor != 0 && out > std::numeric_limits<std::uint64_t>::max() / factor)
            throw ResourceError("falling factorial " + std::to_string(a) + "^(" + std::to_string(count) +
                                    ") overflows 64 bits",
                                std::numeric_limits<std::uint64_t>::max());
        out *= factor;
    }
    return out;
}

KPerm::KPerm(int n, std::span<const int> symbols) {
    const int k = static_cast<int>(symbols.size());
    check_ground(n, k);
    std::array<bool, kMaxGround + 1> seen{};
    for (int t = 0; t < k; ++t) {
        const int s = symbols[t];
        if (s < 1 || s > n)
            throw ArgumentError("symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
        if (seen[s]) throw ArgumentError("duplicate symbol " + std::to_string(s));
        seen[s] = true;
        symbols_[t] = static_cast<Symbol>(s);
    }
    n_ = static_cast<std::uint8_t>(n);
    k_ = static_cast<std::uint8_t>(k);
}

KPerm::KPerm(int n, std::initializer_list<int> symbols)
    : KPerm(n, std::span<const int>(symbols.begin(), symbols.size())) {}

bool KPerm::contains(int symbol) const noexcept { return find(symbol) >= 0; }

int KPerm::find(int symbol) const noexcept {
    for (int t = 0; t < k_; ++t)
        if (symbols_[t] == symbol) return t;
    return -1;
}

KPerm KPerm::widen(int new_n) const {
    if (new_n < n_) throw ArgumentError("widen cannot shrink the ground set");
    check_ground(new_n, k_);
    KPerm out = *this;
    out.n_ = static_cast<std::uint8_t>(new_n);
    return out;
}

std::string KPerm::to_string(bool compact) const {
    std::string out;
    const bool digits = compact && n_ <= 9;
    for (int t = 0; t < k_; ++t) {
        if (t > 0 && !digits) out += ',';
        out += std::to_string(symbols_[t]);
    }
    return out;
}

bool operator==(const KPerm& a, const KPerm& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && std::equal(a.symbols_.begin(), a.symbols_.begin() + a.k_, b.symbols_.begin());
}

std::strong_ordering operator<=>(const KPerm& a, const KPerm& b) noexcept {
    const auto sa = a.symbols();
    const auto sb = b.symbols();
    if (auto c = std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end()); c != 0) return c;
    return a.n_ <=> b.n_;
}

KPerm swap_first(const KPerm& p, int i) {
    if (i < 2 || i > p.k())
        throw ArgumentError("swap position " + std::to_string(i) + " outside 2.." + std::to_string(p.k()));
    KPerm out = p;
    std::swap(out.symbols_[0], out.symbols_[i - 1]);
    return out;
}

KPerm replace_first(const KPerm& p, int x) {
    if (x < 1 || x > p.n()) throw ArgumentError("symbol " + std::to_string(x) + " outside 1.." + std::to_string(p.n()));
    if (p.contains(x)) throw ArgumentError("symbol " + std::to_string(x) + " already occurs in " + p.to_string());
    KPerm out = p;
    out.symbols_[0] = static_cast<Symbol>(x);
    return out;
}

KPerm substitute(const KPerm& p, int x, int m) {
    if (m < 1 || m > p.n()) throw ArgumentError("symbol " + std::to_string(m) + " outside 1.." + std::to_string(p.n()));
    if (p.contains(m)) throw ArgumentError("symbol " + std::to_string(m) + " already occurs in " + p.to_string());
    const int at = p.find(x);
    if (at < 0) return p;
    KPerm out = p;
    out.symbols_[at] = static_cast<Symbol>(m);
    return out;
}

KPerm swap_first_two(const KPerm& p) {
    if (p.k() < 2) throw ArgumentError("swap_first_two needs length >= 2");
    return swap_first(p, 2);
}

KPerm append(const KPerm& p, int x) {
    if (x < 1 || x > p.n()) throw ArgumentError("symbol " + std::to_string(x) + " outside 1.." + std::to_string(p.n()));
    if (p.contains(x)) throw ArgumentError("symbol " + std::to_string(x) + " already occurs in " + p.to_string());
    check_ground(p.n(), p.k() + 1);
    KPerm out = p;
    out.symbols_[out.k_] = static_cast<Symbol>(x);
    ++out.k_;
    return out;
}

KPerm parse_kperm(std::string_view text, int n) {
    std::vector<int> symbols;
    const bool has_comma = text.find(',') != std::string_view::npos;
    if (!has_comma && n <= 9 && text.size() > 1) {
        for (char c : text) {
            if (c < '0' || c > '9') throw ArgumentError("malformed vertex '" + std::string(text) + "'");
            symbols.push_back(c - '0');
        }
        return KPerm(n, symbols);
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ArgumentError("malformed vertex '" + std::string(text) + "'");
        symbols.push_back(value);
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (static_cast<int>(symbols.size()) > kMaxLength) throw ArgumentError("vertex '" + std::string(text) + "' too long");
    return KPerm(n, symbols);
}

PermSpace::PermSpace(int n, int k) : n_(n), k_(k) {
    check_ground(n, k);
    size_ = falling_factorial(n, k);
    // completions after fixing position t: (n-1-t)!/(n-k)!
    for (int t = 0; t < k; ++t) weights_[t] = falling_factorial(n - 1 - t, k - 1 - t);
}

Rank PermSpace::rank(const KPerm& p) const {
    if (p.n() != n_ || p.k() != k_)
        throw ArgumentError("vertex " + p.to_string() + " is not in Γ(" + std::to_string(n_) + "," + std::to_string(k_) + ")");
    Rank r = 0;
    for (int t = 0; t < k_; ++t) {
        int smaller_unused = p[t] - 1;
        for (int u = 0; u < t; ++u)
            if (p[u] < p[t]) --smaller_unused;
        r += static_cast<Rank>(smaller_unused) * weights_[t];
    }
    return r;
}

KPerm PermSpace::unrank(Rank r) const {
    if (r >= size_)
        throw ArgumentError("rank " + std::to_string(r) + " outside 0.." + std::to_string(size_ - 1));
    std::array<bool, kMaxGround + 1> used{};
    KPerm out;
    out.n_ = static_cast<std::uint8_t>(n_);
    out.k_ = static_cast<std::uint8_t>(k_);
    for (int t = 0; t < k_; ++t) {
        auto digit = static_cast<int>(r / weights_[t]);
        r %= weights_[t];
        int s = 1;
        for (;; ++s) {
            if (used[s]) continue;
            if (digit == 0) break;
            --digit;
        }
        used[s] = true;
        out.symbols_[t] = static_cast<Symbol>(s);
    }
    return out;
}

Rank rank(const KPerm& p) { return PermSpace(p.n(), p.k()).rank(p); }

KPerm unrank(Rank r, int n, int k) { return PermSpace(n, k).unrank(r); }

}  // namespace starkit
