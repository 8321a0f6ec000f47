#include "weakeq/word.hpp"

#include <algorithm>

namespace weakeq {

namespace {
std::vector<int> reduce(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw input_error("word letter 0 is not a generator index");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}
} // namespace

Word::Word(std::vector<int> letters) : letters_(reduce(std::move(letters))) {}

Word Word::generator(int index, bool inverse) {
    if (index < 1) throw input_error("generator index must be positive");
    return Word(std::vector<int>{inverse ? -index : index});
}

Word Word::parse(const std::string& text) {
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c >= 'a' && c <= 'z')
            letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            letters.push_back(-(c - 'A' + 1));
        else
            throw input_error(std::string("bad word character '") + c + "'");
    }
    return Word(std::move(letters));
}

int Word::max_generator() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, l < 0 ? -l : l);
    return m;
}

Word Word::concat(const Word& other) const {
    std::vector<int> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(joined));
}

Word Word::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    return Word(std::move(inv));
}

Word Word::pow(int exponent) const {
    Word base = exponent < 0 ? inverse() : *this;
    int reps = exponent < 0 ? -exponent : exponent;
    Word acc;
    for (int i = 0; i < reps; ++i) acc = acc.concat(base);
    return acc;
}

std::string Word::str() const {
    std::string s;
    for (int l : letters_) {
        if (l > 26 || l < -26) throw input_error("word has generator index beyond 26, not serializable");
        s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
    }
    return s;
}

int Word::letter_rank(int letter) {
    const int gen = letter < 0 ? -letter : letter;
    return (gen - 1) * 2 + (letter < 0 ? 1 : 0);
}

bool Word::operator<(const Word& other) const {
    if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const int ra = letter_rank(letters_[i]);
        const int rb = letter_rank(other.letters_[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

} // namespace weakeq
