#include "posit/bits.hpp"

#include <algorithm>
#include <cctype>

namespace posit {

std::string to_hex_string(const PositBits& p) {
    static const char* digits = "0123456789ABCDEF";
    const int ndigits = (p.config.n + 3) / 4;
    std::string out(static_cast<size_t>(ndigits) + 2, '0');
    out[0] = '0';
    out[1] = 'x';
    for (int i = 0; i < ndigits; ++i) {
        out[2 + ndigits - 1 - i] = digits[(p.bits >> (4 * i)) & 0xF];
    }
    return out;
}

std::string to_bin_string(const PositBits& p) {
    std::string out(static_cast<size_t>(p.config.n) + 2, '0');
    out[1] = 'b';
    for (int i = 0; i < p.config.n; ++i) {
        out[2 + p.config.n - 1 - i] = ((p.bits >> i) & 1) ? '1' : '0';
    }
    return out;
}

PositBits parse_pattern(std::string_view text, const PositConfig& cfg) {
    const auto fail = [&] {
        throw std::invalid_argument("bad pattern literal '" + std::string(text) +
                                    "' for config " + to_string(cfg));
    };
    if (text.size() < 3 || text[0] != '0') fail();
    const char kind = static_cast<char>(std::tolower(text[1]));
    std::uint64_t value = 0;
    if (kind == 'x') {
        if (text.size() > 18) fail();
        for (char ch : text.substr(2)) {
            int d;
            if (ch >= '0' && ch <= '9') d = ch - '0';
            else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
            else { fail(); return {}; }
            value = (value << 4) | static_cast<std::uint64_t>(d);
        }
    } else if (kind == 'b') {
        if (text.size() > 66) fail();
        for (char ch : text.substr(2)) {
            if (ch != '0' && ch != '1') fail();
            value = (value << 1) | static_cast<std::uint64_t>(ch - '0');
        }
    } else {
        fail();
    }
    if (value > cfg.pattern_mask()) fail();
    return PositBits{value, cfg};
}

}  // namespace posit
