#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A t-spread word: an ascending index sequence (i_1,...,i_d) whose
/// consecutive gaps are all >= t. For t >= 1 the word is squarefree.
class SpreadWord {
public:
    SpreadWord(std::vector<int> indices, int t) : indices_(std::move(indices)), t_(t) {
        if (t_ < 0) throw std::invalid_argument("SpreadWord: t must be >= 0");
        if (!is_t_spread(std::span<const int>(indices_), t_))
            throw std::invalid_argument("SpreadWord: index sequence is not " +
                                        std::to_string(t_) + "-spread");
    }

    static SpreadWord from_monomial(const Monomial& m, int t) {
        return SpreadWord(m.index_sequence(), t);
    }

    int t() const { return t_; }
    int degree() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }

    Monomial to_monomial() const { return Monomial::from_indices(indices_); }
    std::string str() const { return to_monomial().str(); }

    friend bool operator==(const SpreadWord&, const SpreadWord&) = default;
    friend auto operator<=>(const SpreadWord&, const SpreadWord&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SpreadWord& w) {
        return os << w.str() << " (t=" << w.t_ << ")";
    }

private:
    std::vector<int> indices_;
    int t_ = 0;
};

} // namespace tspread
