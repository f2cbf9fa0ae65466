#include "argon2/encoding.hpp"

#include <array>
#include <cstdint>

#include "argon2/errors.hpp"

namespace argon2 {

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_nopad(std::span<const std::uint8_t> data) {
    std::string out;
    out.reserve((data.size() * 4 + 2) / 3);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8) |
                          data[i + 2];
        out.push_back(kAlphabet[(v >> 18) & 63]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
        out.push_back(kAlphabet[(v >> 6) & 63]);
        out.push_back(kAlphabet[v & 63]);
    }
    const std::size_t rest = data.size() - i;
    if (rest == 1) {
        std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16;
        out.push_back(kAlphabet[(v >> 18) & 63]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
    } else if (rest == 2) {
        std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8);
        out.push_back(kAlphabet[(v >> 18) & 63]);
        out.push_back(kAlphabet[(v >> 12) & 63]);
        out.push_back(kAlphabet[(v >> 6) & 63]);
    }
    return out;
}

int sextet(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}

std::vector<std::uint8_t> base64_decode(const std::string& field,
                                        const std::string& text) {
    if (text.empty()) {
        throw ParseError(field, "empty");
    }
    if (text.find('=') != std::string::npos) {
        throw ParseError(field, "padded base64 is not accepted");
    }
    if (text.size() % 4 == 1) {
        throw ParseError(field, "impossible base64 length");
    }
    std::vector<std::uint8_t> out;
    out.reserve(text.size() * 3 / 4);
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        int v = sextet(c);
        if (v < 0) {
            throw ParseError(field, "invalid base64 character");
        }
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>(acc >> bits));
        }
    }
    // Leftover bits must be zero or the encoding was not canonical.
    if (bits > 0 && (acc & ((1u << bits) - 1)) != 0) {
        throw ParseError(field, "non-canonical base64 tail");
    }
    return out;
}

std::uint32_t parse_u32(const std::string& field, const std::string& text) {
    if (text.empty()) {
        throw ParseError(field, "missing number");
    }
    if (text.size() > 1 && text[0] == '0') {
        throw ParseError(field, "leading zero");
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw ParseError(field, "not a decimal number");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xffffffffULL) {
            throw ParseError(field, "out of range");
        }
    }
    return static_cast<std::uint32_t>(value);
}

// "key=<digits>" with the exact expected key.
std::uint32_t parse_keyed(const std::string& field, const std::string& key,
                          const std::string& part) {
    const std::string prefix = key + "=";
    if (part.size() < prefix.size() || part.compare(0, prefix.size(), prefix) != 0) {
        throw ParseError(field, "expected " + prefix + "<number>");
    }
    return parse_u32(field, part.substr(prefix.size()));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string encode_hash(const Params& params, std::span<const std::uint8_t> salt,
                        std::span<const std::uint8_t> tag) {
    std::string out = "$argon2";
    out += params.variant == Variant::data_dependent ? 'd' : 'i';
    out += "$v=16$m=" + std::to_string(params.memory_kib) +
           ",t=" + std::to_string(params.passes) +
           ",p=" + std::to_string(params.lanes);
    out += '$';
    out += base64_nopad(salt);
    out += '$';
    out += base64_nopad(tag);
    return out;
}

EncodedHash decode_hash(const std::string& line) {
    const auto parts = split(line, '$');
    if (parts.size() != 6 || !parts[0].empty()) {
        throw ParseError("format", "expected $variant$v=16$m=..,t=..,p=..$salt$tag");
    }

    EncodedHash decoded;
    if (parts[1] == "argon2d") {
        decoded.variant = Variant::data_dependent;
    } else if (parts[1] == "argon2i") {
        decoded.variant = Variant::data_independent;
    } else {
        throw ParseError("variant", "unknown variant '" + parts[1] + "'");
    }

    decoded.version = parse_keyed("version", "v", parts[2]);
    if (decoded.version != 16) {
        throw ParseError("version", "only version 16 is supported");
    }

    const auto cost = split(parts[3], ',');
    if (cost.size() != 3) {
        throw ParseError("m", "expected m=..,t=..,p=..");
    }
    decoded.memory_kib = parse_keyed("m", "m", cost[0]);
    decoded.passes = parse_keyed("t", "t", cost[1]);
    decoded.lanes = parse_keyed("p", "p", cost[2]);

    decoded.salt = base64_decode("salt", parts[4]);
    decoded.tag = base64_decode("tag", parts[5]);
    return decoded;
}

}  // namespace argon2
