#pragma once

#include "rauzy/algebra.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rauzy {

enum class System { R, G };

std::string to_string(System s);
System system_from_string(const std::string& s);

// Linear-recurrence bases, X_{n+3} = a*X_{n+2} - X_{n+1} + X_n.
//   R: 1, a, a^2, ...        G: 1, a, a^2 - 1, ...
// Primed variants are the index shifts used by the exponent identities:
//   G'_0 = G'_1 = 0, G'_2 = 1, same recurrence (G_n = G'_{n+2});
//   R'_0 = R'_1 = 0, R'_2 = 1, R'_3 = a, R'_4 = a^2, recurrence from index 5.
// All four are overflow-checked and throw std::overflow_error.
std::int64_t seq_R(int a, int n);
std::int64_t seq_G(int a, int n);
std::int64_t seq_Rp(int a, int n);
std::int64_t seq_Gp(int a, int n);

// Finite digit word.  digits are stored most-significant first, i.e.
// digits.front() sits at index offset + size - 1 and digits.back() at
// `offset`.  Serialized as "<digits>@<offset>" in the same order, e.g.
// "1011@0"; the empty word serializes as "".
struct DigitWord {
    std::vector<std::uint8_t> digits;
    int offset = 0;

    bool empty() const { return digits.empty(); }
    int size() const { return static_cast<int>(digits.size()); }
    int top_index() const { return offset + size() - 1; }
    // digit at an absolute index; zero outside the stored range
    int digit_at(int index) const;

    // strip high-order zeros; the empty word resets its offset to 0
    void normalize();

    std::string to_string() const;
    static DigitWord parse(const std::string& text);

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

// Infinite word: `head` digits at offset, offset+1, ..., then `cycle`
// repeating forever toward higher powers of alpha.  Serialized in expansion
// order as "head(cycle)*@offset", e.g. "(1000)*@2".
struct EventuallyPeriodicWord {
    int offset = 2;
    std::vector<std::uint8_t> head;
    std::vector<std::uint8_t> cycle;

    int digit_at(int index) const;
    // primitive cycle, and no head tail that merely repeats the cycle
    void canonicalize();
    // finite truncation with digits at offset..max_index
    DigitWord truncate(int max_index) const;

    std::string to_string() const;
    static EventuallyPeriodicWord parse(const std::string& text);

    friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;
};

// Greedy expansion of n >= 0 in the chosen basis; the result has offset 0 and
// satisfies is_admissible.  n = 0 yields the empty word.
DigitWord greedy_expand(int a, std::int64_t n, System system);

// The lexicographic admissibility predicate: every window
// (d_i, d_{i-1}, d_{i-2}, d_{i-3}) with zero padding below the offset must be
// <lex (a-1)(a-1)01.  For system G, additionally the low-end conditions
// anchored at the offset l: d_l < a, (d_{l+1}, d_l) <lex (a-1)(a-1) and
// (d_{l+2}, d_{l+1}, d_l) <lex (a-1)(a-1)0.
bool is_admissible(const DigitWord& w, int a, System system);
bool is_admissible(const EventuallyPeriodicWord& w, int a, System system);

// sum of digit * basis[index]; requires offset >= 0
std::int64_t eval_basis(const DigitWord& w, int a, System system);

// sum of digit * root^index; for an eventually periodic word the cycle is
// summed in closed form (geometric series), which requires root = alpha.
std::complex<double> eval_word(const DigitWord& w, const RingParams& ring, Root root);
std::complex<double> eval_word(const EventuallyPeriodicWord& w, const RingParams& ring, Root root);

// Exact check of the exponent identities
//   x^n = G'_n x^2 + (G'_{n-2} - G'_{n-1}) x + G'_{n-1}   and
//   x^n = R'_n x^2 - G'_{n-2} (x^2 - x) - G'_{n-1} (x - 1)
// in Z[alpha], for n >= 2.  Internally uses 256-bit checked integers so the
// sequences cannot overflow for the tested ranges.
bool power_identity_check(int a, int n);

}  // namespace rauzy
