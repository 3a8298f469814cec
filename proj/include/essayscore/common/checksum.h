/* Copyright 2026 The essayscore Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ESSAYSCORE_COMMON_CHECKSUM_H_
#define ESSAYSCORE_COMMON_CHECKSUM_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace essayscore {

// 64-bit FNV-1a. Used for data-file integrity and registry fingerprints,
// not for anything adversarial.
class Fnv1a64 {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  Fnv1a64 h;
  h.update(bytes);
  return h.digest();
}

std::string to_hex(std::uint64_t value);

}  // namespace essayscore

#endif  // ESSAYSCORE_COMMON_CHECKSUM_H_
