#pragma once

#include <string>
#include <vector>

#include "weakeq/errors.hpp"

namespace weakeq {

/// Freely reduced word over k generators. Letters are signed 1-based
/// generator indices: +i is generator i, -i its inverse. The empty word is
/// the identity. Construction reduces adjacent (i, -i) pairs.
///
/// Text form uses lowercase letters for generators and uppercase for
/// inverses: "abA" is g1 g2 g1^-1. At most 26 generators are serializable.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    static Word identity() { return Word(); }
    static Word generator(int index, bool inverse = false);
    static Word parse(const std::string& text);

    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    int max_generator() const;

    Word concat(const Word& other) const;
    Word inverse() const;
    Word pow(int exponent) const;

    std::string str() const;

    /// Rank of a letter in the fixed alphabet order g1 < g1^-1 < g2 < g2^-1 < ...
    static int letter_rank(int letter);

    bool operator==(const Word& other) const { return letters_ == other.letters_; }
    bool operator!=(const Word& other) const { return letters_ != other.letters_; }

    /// Length-then-lexicographic order (the window enumeration order).
    bool operator<(const Word& other) const;

private:
    std::vector<int> letters_;
};

} // namespace weakeq
