/*
 *   Copyright 2026 The hyperlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Fixed-capacity bit set over the carrier of a finite hyperring. Every
 * hyperproduct, hyperideal and radical in the library is one of these.
 */

#ifndef HYPERLAB_ELEMENT_SET_HPP
#define HYPERLAB_ELEMENT_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyperlab {

using Element = std::uint32_t;

/// Largest carrier the library handles (four 64-bit words).
inline constexpr std::size_t kMaxCarrier = 256;

class ElementSet {
public:
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords = kMaxCarrier / kWordBits;
    using Word = std::uint64_t;

    class const_iterator {
    public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        const_iterator() = default;
        const_iterator(const ElementSet* set, std::size_t word, Word rest)
            : set_(set), word_(word), rest_(rest) {
            settle();
        }

        Element operator*() const {
            return static_cast<Element>(word_ * kWordBits + std::countr_zero(rest_));
        }
        const_iterator& operator++() {
            rest_ &= rest_ - 1;
            settle();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& o) const {
            return word_ == o.word_ && rest_ == o.rest_;
        }

    private:
        void settle() {
            while (rest_ == 0 && word_ + 1 < kWords) {
                ++word_;
                rest_ = set_->words_[word_];
            }
            if (rest_ == 0) word_ = kWords;
        }

        const ElementSet* set_ = nullptr;
        std::size_t word_ = kWords;
        Word rest_ = 0;
    };

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<Element> xs) {
        for (Element x : xs) insert(x);
    }
    explicit ElementSet(std::span<const Element> xs) {
        for (Element x : xs) insert(x);
    }

    static ElementSet singleton(Element x) {
        ElementSet s;
        s.insert(x);
        return s;
    }

    /// The full carrier {0, ..., n-1}.
    static ElementSet range(std::size_t n) {
        ElementSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            if (n >= kWordBits) {
                s.words_[w] = ~Word{0};
                n -= kWordBits;
            } else {
                s.words_[w] = (Word{1} << n) - 1;
                n = 0;
            }
        }
        return s;
    }

    void insert(Element x) { words_[x / kWordBits] |= Word{1} << (x % kWordBits); }
    void erase(Element x) { words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits)); }
    [[nodiscard]] bool contains(Element x) const {
        return x < kMaxCarrier && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
    }

    [[nodiscard]] bool empty() const {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }

    [[nodiscard]] std::size_t size() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool subset_of(const ElementSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    [[nodiscard]] bool intersects(const ElementSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    /// Smallest member; only meaningful on a nonempty set.
    [[nodiscard]] Element first() const { return *begin(); }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

    [[nodiscard]] const_iterator begin() const { return {this, 0, words_[0]}; }
    [[nodiscard]] const_iterator end() const { return {}; }

    [[nodiscard]] std::vector<Element> to_vector() const { return {begin(), end()}; }

    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Word w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    [[nodiscard]] const std::array<Word, kWords>& words() const { return words_; }

private:
    std::array<Word, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// "0,2,4" (empty string for the empty set).
std::string to_list(const ElementSet& s);
/// "{0,2,4}".
std::string to_string(const ElementSet& s);
/// Inverse of to_list; accepts surrounding braces and whitespace.
ElementSet parse_element_set(const std::string& text);

}  // namespace hyperlab

#endif  // HYPERLAB_ELEMENT_SET_HPP
