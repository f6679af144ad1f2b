// Copyright 2026 The specred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECRED_RANDOM_HPP
#define SPECRED_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace specred {

/// The random stream type used throughout. Streams are owned by callers.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over the bytes of `s`.
constexpr std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Order-sensitive seed combiner: derive_seed(base, a, b, ...).
class SeedBuilder {
public:
    explicit constexpr SeedBuilder(std::uint64_t base) : state_(mix64(base)) {}

    constexpr SeedBuilder& add(std::uint64_t v) {
        state_ = mix64(state_ ^ mix64(v + 0x632be59bd9b4e019ULL));
        return *this;
    }
    constexpr SeedBuilder& add(std::string_view s) { return add(hash_string(s)); }

    constexpr std::uint64_t seed() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace specred

#endif  // SPECRED_RANDOM_HPP
