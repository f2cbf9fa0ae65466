#ifndef ARGON2_ENCODING_HPP
#define ARGON2_ENCODING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argon2/params.hpp"

namespace argon2 {

/// Decoded form of the hash string
///   $argon2{d|i}$v=16$m=<m>,t=<t>,p=<p>$<b64(salt)>$<b64(tag)>
/// Base64 is the standard alphabet without padding.
struct EncodedHash {
    Variant variant = Variant::data_dependent;
    std::uint32_t version = Params::kVersion;
    std::uint32_t memory_kib = 0;
    std::uint32_t passes = 0;
    std::uint32_t lanes = 0;
    std::vector<std::uint8_t> salt;
    std::vector<std::uint8_t> tag;
};

std::string encode_hash(const Params& params, std::span<const std::uint8_t> salt,
                        std::span<const std::uint8_t> tag);

/// Strict parse; throws ParseError naming the offending field. Only version
/// 16 is accepted.
EncodedHash decode_hash(const std::string& line);

}  // namespace argon2

#endif
