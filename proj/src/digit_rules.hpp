#pragma once

#include "rauzy/numeration.hpp"

#include <cstdint>

// Path-local admissibility rules shared by the automaton closure, witness
// enumeration and cloud generation.  Only three digit classes matter for the
// lexicographic window condition (zero, a-1, anything else), so each tape
// remembers the classes of its last three digits instead of the digits
// themselves.  Memory starts as all-zero, which matches the zero padding
// below the start of a word.

namespace rauzy::detail {

enum DigitClass : std::uint8_t { kZero = 0, kMid = 1, kTop = 2 };

inline std::uint8_t digit_class(int d, int a) {
    if (d == 0) return kZero;
    return d == a - 1 ? kTop : kMid;
}

struct TapeMem {
    std::uint8_t p1 = kZero;  // most recent digit class
    std::uint8_t p2 = kZero;
    std::uint8_t p3 = kZero;

    std::uint8_t pack() const { return static_cast<std::uint8_t>(p1 * 9 + p2 * 3 + p3); }
    friend bool operator==(const TapeMem&, const TapeMem&) = default;
};

inline TapeMem push(TapeMem m, std::uint8_t cls) { return {cls, m.p1, m.p2}; }

// window (c, p1, p2, p3) <lex (a-1)(a-1)01: two consecutive top digits are
// only allowed right after two zeros
inline bool window_ok(std::uint8_t c_cls, const TapeMem& m) {
    if (c_cls != kTop || m.p1 != kTop) return true;
    return m.p2 == kZero && m.p3 == kZero;
}

// extra low-end conditions of the G system at path positions 1 and 2:
// (d1,d0) <lex (a-1)(a-1) and (d2,d1,d0) <lex (a-1)(a-1)0, both of which
// reduce to "no two consecutive top digits"
inline bool g_init_ok(std::uint8_t c_cls, const TapeMem& m, int pos) {
    if (pos != 1 && pos != 2) return true;
    return !(c_cls == kTop && m.p1 == kTop);
}

inline bool tape_ok(System system, std::uint8_t c_cls, const TapeMem& m, int pos) {
    if (!window_ok(c_cls, m)) return false;
    return system == System::R || g_init_ok(c_cls, m, pos);
}

}  // namespace rauzy::detail
