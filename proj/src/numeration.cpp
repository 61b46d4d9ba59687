#include "rauzy/numeration.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <stdexcept>

namespace rauzy {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("sequence overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("sequence overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("sequence overflow");
    return r;
}

void require_params(int a, int n) {
    if (a < 2) throw std::invalid_argument("sequence: a must be >= 2");
    if (n < 0) throw std::invalid_argument("sequence: n must be >= 0");
}

std::int64_t run_recurrence(int a, int n, std::int64_t x0, std::int64_t x1, std::int64_t x2) {
    std::array<std::int64_t, 3> x{x0, x1, x2};
    if (n < 3) return x[n];
    for (int i = 3; i <= n; ++i) {
        std::int64_t next = checked_add(checked_sub(checked_mul(a, x[2]), x[1]), x[0]);
        x = {x[1], x[2], next};
    }
    return x[2];
}

}  // namespace

std::string to_string(System s) { return s == System::R ? "R" : "G"; }

System system_from_string(const std::string& s) {
    if (s == "R" || s == "r") return System::R;
    if (s == "G" || s == "g") return System::G;
    throw std::invalid_argument("unknown numeration system: " + s);
}

std::int64_t seq_R(int a, int n) {
    require_params(a, n);
    return run_recurrence(a, n, 1, a, checked_mul(a, a));
}

std::int64_t seq_G(int a, int n) {
    require_params(a, n);
    return run_recurrence(a, n, 1, a, checked_sub(checked_mul(a, a), 1));
}

std::int64_t seq_Gp(int a, int n) {
    require_params(a, n);
    return run_recurrence(a, n, 0, 0, 1);
}

std::int64_t seq_Rp(int a, int n) {
    require_params(a, n);
    // R'_4 = a^2 is pinned separately; the recurrence only holds from index 5
    switch (n) {
        case 0:
        case 1: return 0;
        case 2: return 1;
        case 3: return a;
        case 4: return checked_mul(a, a);
        default: break;
    }
    std::array<std::int64_t, 3> x{1, a, checked_mul(a, a)};
    for (int i = 5; i <= n; ++i) {
        std::int64_t next = checked_add(checked_sub(checked_mul(a, x[2]), x[1]), x[0]);
        x = {x[1], x[2], next};
    }
    return x[2];
}

int DigitWord::digit_at(int index) const {
    if (index < offset || index > top_index()) return 0;
    return digits[static_cast<std::size_t>(top_index() - index)];
}

void DigitWord::normalize() {
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
    if (digits.empty()) offset = 0;
}

std::string DigitWord::to_string() const {
    if (digits.empty()) return "";
    std::string out;
    for (auto d : digits) {
        if (d > 9) throw std::invalid_argument("DigitWord: serialization supports digits 0..9");
        out.push_back(static_cast<char>('0' + d));
    }
    out += "@" + std::to_string(offset);
    return out;
}

DigitWord DigitWord::parse(const std::string& text) {
    DigitWord w;
    if (text.empty()) return w;
    auto at = text.find('@');
    if (at == std::string::npos || at == 0)
        throw std::invalid_argument("DigitWord: expected \"digits@offset\"");
    for (std::size_t i = 0; i < at; ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("DigitWord: bad digit");
        w.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    w.offset = std::stoi(text.substr(at + 1));
    w.normalize();
    return w;
}

int EventuallyPeriodicWord::digit_at(int index) const {
    if (index < offset) return 0;
    std::size_t pos = static_cast<std::size_t>(index - offset);
    if (pos < head.size()) return head[pos];
    if (cycle.empty()) return 0;
    return cycle[(pos - head.size()) % cycle.size()];
}

void EventuallyPeriodicWord::canonicalize() {
    if (cycle.empty()) return;
    // primitive period
    for (std::size_t p = 1; p < cycle.size(); ++p) {
        if (cycle.size() % p != 0) continue;
        bool periodic = true;
        for (std::size_t j = p; j < cycle.size() && periodic; ++j)
            periodic = cycle[j] == cycle[j % p];
        if (periodic) {
            cycle.resize(p);
            break;
        }
    }
    // absorb a head tail that already follows the cycle
    while (!head.empty() && head.back() == cycle.back()) {
        cycle.insert(cycle.begin(), cycle.back());
        cycle.pop_back();
        head.pop_back();
    }
}

DigitWord EventuallyPeriodicWord::truncate(int max_index) const {
    DigitWord w;
    w.offset = offset;
    for (int i = max_index; i >= offset; --i)
        w.digits.push_back(static_cast<std::uint8_t>(digit_at(i)));
    w.normalize();
    return w;
}

std::string EventuallyPeriodicWord::to_string() const {
    std::string out;
    auto put = [&out](std::uint8_t d) {
        if (d > 9) throw std::invalid_argument("word serialization supports digits 0..9");
        out.push_back(static_cast<char>('0' + d));
    };
    for (auto d : head) put(d);
    out.push_back('(');
    for (auto d : cycle) put(d);
    out += ")*@" + std::to_string(offset);
    return out;
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(const std::string& text) {
    auto open = text.find('(');
    auto close = text.find(")*@");
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("expected \"head(cycle)*@offset\"");
    EventuallyPeriodicWord w;
    auto digits_into = [&](std::size_t from, std::size_t to, std::vector<std::uint8_t>& out) {
        for (std::size_t i = from; i < to; ++i) {
            char c = text[i];
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in word");
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    };
    digits_into(0, open, w.head);
    digits_into(open + 1, close, w.cycle);
    if (w.cycle.empty()) throw std::invalid_argument("cycle must be nonempty");
    w.offset = std::stoi(text.substr(close + 3));
    return w;
}

namespace {

std::int64_t basis_value(int a, int n, System system) {
    return system == System::R ? seq_R(a, n) : seq_G(a, n);
}

}  // namespace

DigitWord greedy_expand(int a, std::int64_t n, System system) {
    if (a < 2) throw std::invalid_argument("greedy_expand: a must be >= 2");
    if (n < 0) throw std::invalid_argument("greedy_expand: n must be >= 0");
    DigitWord w;
    if (n == 0) return w;
    std::vector<std::int64_t> basis{basis_value(a, 0, system)};
    while (basis.back() <= n) {
        std::int64_t next = basis_value(a, static_cast<int>(basis.size()), system);
        if (next <= basis.back()) throw std::logic_error("greedy_expand: basis not increasing");
        basis.push_back(next);
    }
    std::int64_t rest = n;
    for (int i = static_cast<int>(basis.size()) - 2; i >= 0; --i) {
        std::int64_t d = rest / basis[i];
        rest -= d * basis[i];
        if (d > a - 1) throw std::logic_error("greedy_expand: digit out of range");
        w.digits.push_back(static_cast<std::uint8_t>(d));
    }
    w.offset = 0;
    w.normalize();
    return w;
}

bool is_admissible(const DigitWord& w, int a, System system) {
    for (auto d : w.digits)
        if (d >= a) return false;
    const int target[4] = {a - 1, a - 1, 0, 1};
    for (int i = w.offset; i <= w.top_index(); ++i) {
        int win[4] = {w.digit_at(i), w.digit_at(i - 1), w.digit_at(i - 2), w.digit_at(i - 3)};
        bool less = false, decided = false;
        for (int j = 0; j < 4 && !decided; ++j) {
            if (win[j] != target[j]) {
                less = win[j] < target[j];
                decided = true;
            }
        }
        if (!decided || !less) return false;
    }
    if (system == System::G && !w.empty()) {
        int l = w.offset;
        if (w.digit_at(l + 1) == a - 1 && w.digit_at(l) == a - 1) return false;
        if (w.digit_at(l + 2) == a - 1 && w.digit_at(l + 1) == a - 1) return false;
    }
    return true;
}

bool is_admissible(const EventuallyPeriodicWord& w, int a, System system) {
    if (w.cycle.empty()) return false;
    // a finite check is enough: unroll until the trailing four digits are
    // fully periodic, then every later window repeats an earlier one
    int copies = 2;
    while (copies * static_cast<int>(w.cycle.size()) < static_cast<int>(w.cycle.size()) + 3)
        ++copies;
    int top = w.offset + static_cast<int>(w.head.size()) +
              copies * static_cast<int>(w.cycle.size()) - 1;
    DigitWord unrolled;
    unrolled.offset = w.offset;
    for (int i = top; i >= w.offset; --i)
        unrolled.digits.push_back(static_cast<std::uint8_t>(w.digit_at(i)));
    unrolled.offset = w.offset;  // keep the anchor even if high digits are zero
    return is_admissible(unrolled, a, system);
}

std::int64_t eval_basis(const DigitWord& w, int a, System system) {
    if (w.offset < 0) throw std::invalid_argument("eval_basis: negative offset");
    std::int64_t total = 0;
    for (int i = w.offset; i <= w.top_index(); ++i) {
        int d = w.digit_at(i);
        if (d != 0)
            total = checked_add(total, checked_mul(d, basis_value(a, i, system)));
    }
    return total;
}

std::complex<double> eval_word(const DigitWord& w, const RingParams& ring, Root root) {
    std::complex<double> z = root == Root::alpha ? ring.alpha
                                                 : std::complex<double>(ring.beta, 0.0);
    // Horner from the most significant digit down, then scale by z^offset
    std::complex<double> acc = 0.0;
    for (auto d : w.digits) acc = acc * z + static_cast<double>(d);
    return acc * std::pow(z, w.offset);
}

std::complex<double> eval_word(const EventuallyPeriodicWord& w, const RingParams& ring, Root root) {
    if (root == Root::beta)
        throw std::invalid_argument("eval_word: infinite word diverges at beta");
    const std::complex<double> z = ring.alpha;
    std::complex<double> total = 0.0;
    std::complex<double> zpow = std::pow(z, w.offset);
    for (auto d : w.head) {
        total += static_cast<double>(d) * zpow;
        zpow *= z;
    }
    // zpow is now alpha^(first cycle index); geometric tail in closed form
    std::complex<double> cycle_sum = 0.0;
    std::complex<double> zp = zpow;
    for (auto d : w.cycle) {
        cycle_sum += static_cast<double>(d) * zp;
        zp *= z;
    }
    std::complex<double> ratio = std::pow(z, static_cast<int>(w.cycle.size()));
    total += cycle_sum / (1.0 - ratio);
    return total;
}

namespace {

using Wide = boost::multiprecision::checked_int256_t;

struct WideTriple {
    Wide c0, c1, c2;
    bool operator==(const WideTriple&) const = default;
};

// multiply by alpha in Z[alpha]: (c0,c1,c2) -> (c2, c0-c2, c1+a*c2)
WideTriple wide_alpha_mul(const WideTriple& x, int a) {
    return {x.c2, x.c0 - x.c2, x.c1 + a * x.c2};
}

Wide wide_seq(int a, int n, Wide x0, Wide x1, Wide x2) {
    std::array<Wide, 3> x{x0, x1, x2};
    if (n < 3) return x[static_cast<std::size_t>(n)];
    for (int i = 3; i <= n; ++i) {
        Wide next = a * x[2] - x[1] + x[0];
        x = {x[1], x[2], next};
    }
    return x[2];
}

Wide wide_Gp(int a, int n) { return wide_seq(a, n, 0, 0, 1); }

Wide wide_Rp(int a, int n) {
    switch (n) {
        case 0:
        case 1: return 0;
        case 2: return 1;
        case 3: return a;
        case 4: return Wide(a) * a;
        default: break;
    }
    std::array<Wide, 3> x{1, a, Wide(a) * a};
    for (int i = 5; i <= n; ++i) {
        Wide next = a * x[2] - x[1] + x[0];
        x = {x[1], x[2], next};
    }
    return x[2];
}

}  // namespace

bool power_identity_check(int a, int n) {
    if (a < 2) throw std::invalid_argument("power_identity_check: a must be >= 2");
    if (n < 2) throw std::invalid_argument("power_identity_check: n must be >= 2");
    WideTriple pow{1, 0, 0};
    for (int i = 0; i < n; ++i) pow = wide_alpha_mul(pow, a);
    Wide gp_n = wide_Gp(a, n);
    Wide gp_n1 = wide_Gp(a, n - 1);
    Wide gp_n2 = wide_Gp(a, n - 2);
    WideTriple g_form{gp_n1, gp_n2 - gp_n1, gp_n};
    // R'_n alpha^2 - G'_{n-2} (alpha^2 - alpha) - G'_{n-1} (alpha - 1)
    Wide rp_n = wide_Rp(a, n);
    WideTriple r_form{gp_n1, gp_n2 - gp_n1, rp_n - gp_n2};
    return pow == g_form && pow == r_form;
}

}  // namespace rauzy
