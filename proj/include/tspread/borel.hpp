#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tspread/monomial.hpp"
#include "tspread/spread_word.hpp"

namespace tspread {

/// A finite set of monomials of one common degree. Since all members share
/// one degree, no member can divide another, so the set is the minimal
/// generating set of the ideal it spans. Members are kept in descending lex
/// order, which is the reporting order everywhere.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Monomial> members, std::optional<int> t = std::nullopt)
        : members_(std::move(members)), t_(t) {
        if (members_.empty())
            throw std::invalid_argument("GeneratorSet: empty set");
        degree_ = members_.front().degree();
        if (degree_ < 1)
            throw std::invalid_argument("GeneratorSet: degree must be positive");
        for (const auto& m : members_)
            if (m.degree() != degree_)
                throw std::invalid_argument("GeneratorSet: members must share one degree");
        std::sort(members_.begin(), members_.end(),
                  [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(members_.size()); }
    std::optional<int> t() const { return t_; }

    /// Descending lex order.
    const std::vector<Monomial>& members() const { return members_; }

    bool contains(const Monomial& m) const {
        if (m.degree() != degree_) return false;
        auto it = std::lower_bound(members_.begin(), members_.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                       return lex_greater(a, b);
                                   });
        return it != members_.end() && *it == m;
    }

    int max_index() const {
        int n = 0;
        for (const auto& m : members_) n = std::max(n, m.max_index());
        return n;
    }

    /// Set equality; the provenance tag t is not part of the value.
    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Monomial> members_;
    int degree_ = 0;
    std::optional<int> t_;
};

/// Minimal generating set of B_t(u), the smallest t-spread strongly stable
/// ideal containing u. Computed as the closure of {u} under the exchange
/// moves v -> x_i * (v / x_j) with i < j and a t-spread result. Termination
/// holds because every move lowers an index.
inline GeneratorSet borel_gens(const SpreadWord& u) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{u.indices()};
    seen.insert(u.indices());
    const int t = u.t();
    while (!queue.empty()) {
        std::vector<int> w = std::move(queue.back());
        queue.pop_back();
        for (size_t pos = 0; pos < w.size(); ++pos) {
            if (pos > 0 && w[pos] == w[pos - 1]) continue; // same j as previous position
            const int j = w[pos];
            for (int i = 1; i < j; ++i) {
                std::vector<int> next = w;
                next[pos] = i;
                std::sort(next.begin(), next.end());
                bool spread = true;
                for (size_t k = 1; k < next.size(); ++k)
                    if (next[k] - next[k - 1] < t) { spread = false; break; }
                if (!spread) continue;
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    std::vector<Monomial> members;
    members.reserve(seen.size());
    for (const auto& seq : seen) members.push_back(Monomial::from_indices(seq));
    return GeneratorSet(std::move(members), u.t());
}

/// Independent oracle for borel_gens: enumerate every t-spread word
/// (j_1,...,j_d) with j_k <= i_k componentwise. Equality with borel_gens is
/// a tested property, not an assumption.
inline GeneratorSet borel_gens_direct(const SpreadWord& u) {
    const auto& bound = u.indices();
    const int t = u.t();
    const int d = u.degree();
    std::vector<Monomial> members;
    std::vector<int> word(d);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == d) {
            members.push_back(Monomial::from_indices(word));
            return;
        }
        int lo = k == 0 ? 1 : word[k - 1] + t;
        for (int j = lo; j <= bound[k]; ++j) {
            word[k] = j;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return GeneratorSet(std::move(members), u.t());
}

/// True iff the set is closed under the sorting operator.
inline bool is_sortable(const GeneratorSet& G) {
    const auto& ms = G.members();
    for (size_t a = 0; a < ms.size(); ++a)
        for (size_t b = a; b < ms.size(); ++b) {
            auto [x, y] = sort_pair(ms[a], ms[b]);
            if (!G.contains(x) || !G.contains(y)) return false;
        }
    return true;
}

/// Degree reduction (i_1,...,i_d) -> (i_2 - t, ..., i_d - t), defined when
/// i_1 = 1 and d >= 2. A uniform shift preserves all gaps, so the result is
/// again t-spread.
inline SpreadWord phi_shift(const SpreadWord& u) {
    if (u.degree() < 2)
        throw std::invalid_argument("phi_shift: degree must be >= 2");
    if (u.indices().front() != 1)
        throw std::invalid_argument("phi_shift: requires i_1 = 1");
    std::vector<int> shifted(u.indices().begin() + 1, u.indices().end());
    for (int& i : shifted) i -= u.t();
    return SpreadWord(std::move(shifted), u.t());
}

} // namespace tspread
