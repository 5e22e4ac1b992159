#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tspread {

/// A monomial in variables x1, x2, ... stored as a sparse exponent map.
/// The ambient variable count is implicit: trailing unused variables never
/// affect any computation here.
class Monomial {
public:
    /// The monomial 1 (degree zero).
    Monomial() = default;

    static Monomial variable(int index) {
        check_index(index);
        Monomial m;
        m.factors_.emplace_back(index, 1);
        m.degree_ = 1;
        return m;
    }

    /// Build from an index sequence with multiplicity, e.g. (1,1,3) -> x1^2*x3.
    /// The input need not be sorted.
    static Monomial from_indices(std::span<const int> indices) {
        std::vector<int> sorted(indices.begin(), indices.end());
        std::sort(sorted.begin(), sorted.end());
        Monomial m;
        for (int i : sorted) {
            check_index(i);
            if (!m.factors_.empty() && m.factors_.back().first == i)
                ++m.factors_.back().second;
            else
                m.factors_.emplace_back(i, 1);
        }
        m.degree_ = static_cast<int>(sorted.size());
        return m;
    }

    /// Parse the canonical textual form: "*"-separated "x<k>[^e]" factors,
    /// e.g. "x1*x3^2". "1" denotes the identity. Non-positive indices or
    /// exponents are rejected.
    static Monomial parse(std::string_view text);

    int degree() const { return degree_; }

    int exponent(int index) const {
        for (const auto& [i, e] : factors_)
            if (i == index) return e;
        return 0;
    }

    /// Largest variable index with a nonzero exponent; 0 for the identity.
    int max_index() const { return factors_.empty() ? 0 : factors_.back().first; }

    /// (index, exponent) pairs in ascending index order; exponents > 0.
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    /// Ascending index sequence with multiplicity: x1^2*x3 -> (1,1,3).
    std::vector<int> index_sequence() const {
        std::vector<int> out;
        out.reserve(degree_);
        for (const auto& [i, e] : factors_)
            for (int k = 0; k < e; ++k) out.push_back(i);
        return out;
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [i, e] : factors_) {
            if (!out.empty()) out += '*';
            out += 'x';
            out += std::to_string(i);
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Container order only (lexicographic on the factor vector). This is NOT
    /// the monomial lex order; use lex_compare for that.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
        return os << m.str();
    }

private:
    static void check_index(int index) {
        if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    }

    std::vector<std::pair<int, int>> factors_;
    int degree_ = 0;
};

/// Pointwise exponent addition.
inline Monomial product(const Monomial& u, const Monomial& v) {
    std::vector<int> seq = u.index_sequence();
    auto sv = v.index_sequence();
    seq.insert(seq.end(), sv.begin(), sv.end());
    return Monomial::from_indices(seq);
}

/// Lexicographic order with x1 > x2 > ... : exponent vectors are compared
/// from index 1 upward, larger exponent first. Defined for equal degrees.
inline std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("lex_compare requires equal degrees");
    auto a = u.factors().begin(), ae = u.factors().end();
    auto b = v.factors().begin(), be = v.factors().end();
    while (a != ae && b != be) {
        if (a->first < b->first) return std::strong_ordering::greater;
        if (b->first < a->first) return std::strong_ordering::less;
        if (a->second != b->second)
            return a->second > b->second ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        ++a, ++b;
    }
    // Equal degrees: both runs are exhausted together.
    return std::strong_ordering::equal;
}

inline bool lex_greater(const Monomial& u, const Monomial& v) {
    return lex_compare(u, v) == std::strong_ordering::greater;
}

/// True iff every consecutive gap of the (weakly ascending) index sequence
/// is at least t. A length-1 sequence is t-spread for every t.
inline bool is_t_spread(std::span<const int> indices, int t) {
    if (indices.empty()) throw std::invalid_argument("is_t_spread: empty sequence");
    if (t < 0) throw std::invalid_argument("is_t_spread: t must be >= 0");
    for (int i : indices)
        if (i < 1) throw std::invalid_argument("is_t_spread: index must be >= 1");
    for (size_t k = 1; k < indices.size(); ++k)
        if (indices[k] - indices[k - 1] < t) return false;
    return true;
}

inline bool is_t_spread(const Monomial& m, int t) {
    auto seq = m.index_sequence();
    return is_t_spread(std::span<const int>(seq), t);
}

/// The sorting operator: write uv = x_{i_1}...x_{i_2d} with ascending indices
/// and distribute odd positions to the first component, even to the second.
inline std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree() || u.degree() < 1)
        throw std::invalid_argument("sort_pair requires equal degrees >= 1");
    auto su = u.index_sequence();
    auto sv = v.index_sequence();
    std::vector<int> merged(su.size() + sv.size());
    std::merge(su.begin(), su.end(), sv.begin(), sv.end(), merged.begin());
    std::vector<int> odd, even;
    odd.reserve(su.size());
    even.reserve(sv.size());
    for (size_t k = 0; k < merged.size(); ++k)
        (k % 2 == 0 ? odd : even).push_back(merged[k]);
    return {Monomial::from_indices(odd), Monomial::from_indices(even)};
}

/// A pair is sorted when the sorting operator fixes it up to swapping.
inline bool is_sorted_pair(const Monomial& u, const Monomial& v) {
    auto [a, b] = sort_pair(u, v);
    return (a == u && b == v) || (a == v && b == u);
}

inline Monomial Monomial::parse(std::string_view text) {
    auto fail = [&](const char* why) -> Monomial {
        throw std::invalid_argument(std::string("bad monomial '") + std::string(text) +
                                    "': " + why);
    };
    // Strip surrounding whitespace.
    size_t lo = text.find_first_not_of(" \t");
    size_t hi = text.find_last_not_of(" \t");
    if (lo == std::string_view::npos) return fail("empty");
    std::string_view s = text.substr(lo, hi - lo + 1);
    if (s == "1") return Monomial();

    std::vector<int> seq;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t star = s.find('*', pos);
        std::string_view factor = s.substr(pos, (star == std::string_view::npos ? s.size() : star) - pos);
        size_t flo = factor.find_first_not_of(" \t");
        size_t fhi = factor.find_last_not_of(" \t");
        if (flo == std::string_view::npos) return fail("empty factor");
        factor = factor.substr(flo, fhi - flo + 1);
        if (factor[0] != 'x') return fail("factor must start with 'x'");
        size_t caret = factor.find('^');
        std::string_view idx_part = factor.substr(1, (caret == std::string_view::npos ? factor.size() : caret) - 1);
        int index = 0;
        auto [p, ec] = std::from_chars(idx_part.data(), idx_part.data() + idx_part.size(), index);
        if (ec != std::errc() || p != idx_part.data() + idx_part.size())
            return fail("bad variable index");
        if (index < 1) return fail("variable index must be positive");
        int exp = 1;
        if (caret != std::string_view::npos) {
            std::string_view exp_part = factor.substr(caret + 1);
            auto [q, ec2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exp);
            if (ec2 != std::errc() || q != exp_part.data() + exp_part.size())
                return fail("bad exponent");
            if (exp < 1) return fail("exponent must be positive");
        }
        if (exp > 1'000'000 || seq.size() + exp > 1'000'000) return fail("degree too large");
        for (int k = 0; k < exp; ++k) seq.push_back(index);
        if (star == std::string_view::npos) break;
        pos = star + 1;
        if (pos >= s.size()) return fail("trailing '*'");
    }
    return Monomial::from_indices(seq);
}

} // namespace tspread
