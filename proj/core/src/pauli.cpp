#include "holowedge/pauli.hpp"

#include <stdexcept>

namespace holowedge {

Pauli Pauli::single(size_t n, size_t site, char letter) {
    Pauli p(n);
    switch (letter) {
        case 'I': break;
        case 'X': p.x.set(site, true); break;
        case 'Z': p.z.set(site, true); break;
        case 'Y':
            p.x.set(site, true);
            p.z.set(site, true);
            p.phase = 1;
            break;
        default: throw std::invalid_argument("unknown Pauli letter");
    }
    return p;
}

Pauli Pauli::from_string(const std::string& text) {
    size_t pos = 0;
    int sign_exp = 0;  // exponent of i carried by the prefix
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool neg = text[pos] == '-';
        ++pos;
        if (pos < text.size() && text[pos] == 'i') {
            sign_exp = neg ? 3 : 1;
            ++pos;
        } else {
            sign_exp = neg ? 2 : 0;
        }
    }
    size_t n = text.size() - pos;
    Pauli p(n);
    int y = 0;
    for (size_t i = 0; i < n; ++i) {
        switch (text[pos + i]) {
            case 'I': break;
            case 'X': p.x.set(i, true); break;
            case 'Z': p.z.set(i, true); break;
            case 'Y':
                p.x.set(i, true);
                p.z.set(i, true);
                ++y;
                break;
            default:
                throw std::invalid_argument("invalid Pauli character '" +
                                            std::string(1, text[pos + i]) + "'");
        }
    }
    p.phase = uint8_t((sign_exp + y) & 3);
    return p;
}

std::string Pauli::to_string() const {
    size_t n = num_sites();
    std::string body(n, 'I');
    int y = 0;
    for (size_t i = 0; i < n; ++i) {
        bool xb = x.get(i), zb = z.get(i);
        if (xb && zb) {
            body[i] = 'Y';
            ++y;
        } else if (xb) {
            body[i] = 'X';
        } else if (zb) {
            body[i] = 'Z';
        }
    }
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    return prefix[(phase - y) & 3] + body;
}

}  // namespace holowedge
