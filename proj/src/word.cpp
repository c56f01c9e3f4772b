#include "quasicover/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace quasicover {

Word Word::from_ascii(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        if (ch < 'a' || ch > 'z')
            throw std::invalid_argument("Word::from_ascii: expected lowercase ASCII letters");
        letters.push_back(static_cast<Letter>(ch - 'a'));
    }
    return Word(std::move(letters));
}

Word Word::factor(std::size_t first, std::size_t last) const {
    if (first > last) return Word{};
    if (first < 1 || last > size())
        throw std::invalid_argument("Word::factor: positions out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Word Word::prefix(std::size_t len) const {
    if (len == 0) return Word{};
    return factor(1, len);
}

Word Word::suffix(std::size_t len) const {
    if (len == 0) return Word{};
    if (len > size()) throw std::invalid_argument("Word::suffix: length out of range");
    return factor(size() - len + 1, size());
}

Word Word::reversed() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    return Word(std::move(out));
}

std::string Word::ascii() const {
    std::string out;
    out.reserve(size());
    for (Letter a : letters_) {
        if (a >= 26) throw std::invalid_argument("Word::ascii: letter value above 25");
        out.push_back(static_cast<char>('a' + a));
    }
    return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
    std::vector<Letter> out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end());
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    for (Letter a : w.letters()) {
        if (a < 26)
            os << static_cast<char>('a' + a);
        else
            os << '<' << static_cast<int>(a) << '>';
    }
    return os;
}

MismatchPair MismatchPair::make(Word w, Word w_prime) {
    const std::vector<int> diffs = mismatch_positions(w, w_prime);
    if (diffs.size() != 1)
        throw std::invalid_argument("MismatchPair: words must differ at exactly one position");
    return MismatchPair{std::move(w), std::move(w_prime), diffs.front()};
}

BorderArray border_array(const Word& w) {
    BorderArray ba;
    const std::size_t n = w.size();
    ba.values.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        int t = ba.values[i - 1];
        while (t > 0 && w[i] != w[static_cast<std::size_t>(t)]) t = ba.values[static_cast<std::size_t>(t) - 1];
        ba.values[i] = (w[i] == w[static_cast<std::size_t>(t)]) ? t + 1 : 0;
    }
    return ba;
}

std::vector<int> periods(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periods: empty word");
    const BorderArray ba = border_array(w);
    const int n = static_cast<int>(w.size());
    std::vector<int> result;
    // iterated borders, longest first, so periods come out ascending
    int b = ba.whole();
    while (true) {
        result.push_back(n - b);
        if (b == 0) break;
        b = ba.of_prefix(static_cast<std::size_t>(b));
    }
    return result;
}

bool is_periodic(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_periodic: empty word");
    const int n = static_cast<int>(w.size());
    const int shortest = n - border_array(w).whole();
    return 2 * shortest <= n;
}

std::vector<int> mismatch_positions(const Word& w, const Word& v) {
    if (w.size() != v.size())
        throw std::invalid_argument("mismatch_positions: words of different length are incomparable");
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != v[i]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

Word cyclic_shift(const Word& w, std::size_t offset) {
    if (offset > w.size()) throw std::invalid_argument("cyclic_shift: offset out of range");
    std::vector<Letter> out;
    out.reserve(w.size());
    out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(offset), w.letters().end());
    out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(offset));
    return Word(std::move(out));
}

bool is_cyclic_shift(const Word& w, const Word& v) {
    if (w.size() != v.size()) return false;
    if (w.empty()) return true;
    return !occurrences(v, w + w).empty();
}

std::vector<int> occurrences(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw std::invalid_argument("occurrences: empty pattern");
    std::vector<int> result;
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    if (m > n) return result;
    const BorderArray fail = border_array(pattern);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (j > 0 && pattern[j] != text[i]) j = static_cast<std::size_t>(fail.values[j - 1]);
        if (pattern[j] == text[i]) ++j;
        if (j == m) {
            result.push_back(static_cast<int>(i + 2 - m));  // 1-based start
            j = static_cast<std::size_t>(fail.values[m - 1]);
        }
    }
    return result;
}

OverlapPair overlaps(const Word& w_prime, const Word& w) {
    if (w_prime.size() != w.size())
        throw std::invalid_argument("overlaps: words of different length are incomparable");
    if (w.empty()) throw std::invalid_argument("overlaps: empty words");
    const std::size_t n = w.size();
    OverlapPair out;
    for (std::size_t t = n; t > 0; --t) {
        if (std::equal(w_prime.letters().end() - static_cast<std::ptrdiff_t>(t), w_prime.letters().end(),
                       w.letters().begin())) {
            out.alpha = static_cast<int>(t);
            break;
        }
    }
    for (std::size_t t = n; t > 0; --t) {
        if (std::equal(w_prime.letters().begin(), w_prime.letters().begin() + static_cast<std::ptrdiff_t>(t),
                       w.letters().end() - static_cast<std::ptrdiff_t>(t))) {
            out.beta = static_cast<int>(t);
            break;
        }
    }
    return out;
}

}  // namespace quasicover
