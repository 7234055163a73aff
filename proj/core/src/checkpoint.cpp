// Copyright 2026 The tvfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvfx/nn/checkpoint.hpp"

#include <cstring>
#include <fstream>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {

constexpr char kMagic[4] = {'T', 'V', 'F', 'X'};

template <typename T>
void write_le(std::ostream& out, T value) {
  std::uint64_t v = 0;
  std::memcpy(&v, &value, sizeof(T));
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  }
  T out;
  std::memcpy(&out, &v, sizeof(T));
  return out;
}

}  // namespace

void save_arrays(const std::string& path, const NamedTensors& arrays) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot write checkpoint: " + path);
  out.write(kMagic, 4);
  write_le<std::uint32_t>(out, kCheckpointVersion);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(arrays.size()));
  for (const auto& [name, tensor] : arrays) {
    write_le<std::uint16_t>(out, static_cast<std::uint16_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_le<std::uint8_t>(out, static_cast<std::uint8_t>(tensor.rank()));
    for (std::size_t d = 0; d < tensor.rank(); ++d) {
      write_le<std::uint64_t>(out, tensor.dim(d));
    }
    for (std::size_t i = 0; i < tensor.size(); ++i) {
      write_le<double>(out, tensor[i]);
    }
  }
  if (!out) fail(ErrorKind::kIo, "checkpoint write failed: " + path);
}

NamedTensors load_arrays(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot read checkpoint: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    fail(ErrorKind::kFormat, "not a checkpoint file: " + path);
  }
  std::uint32_t version = read_le<std::uint32_t>(in);
  if (version != kCheckpointVersion) {
    fail(ErrorKind::kFormat, "checkpoint version " + std::to_string(version) +
                                 " not supported (expected " +
                                 std::to_string(kCheckpointVersion) + "): " + path);
  }
  std::uint32_t count = read_le<std::uint32_t>(in);
  NamedTensors arrays;
  arrays.reserve(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    std::uint16_t name_len = read_le<std::uint16_t>(in);
    std::string name(name_len, '\0');
    in.read(name.data(), name_len);
    std::uint8_t rank = read_le<std::uint8_t>(in);
    std::vector<std::size_t> shape(rank);
    for (auto& d : shape) d = static_cast<std::size_t>(read_le<std::uint64_t>(in));
    Tensor t(shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = read_le<double>(in);
    if (!in) fail(ErrorKind::kFormat, "truncated checkpoint: " + path);
    arrays.emplace_back(std::move(name), std::move(t));
  }
  return arrays;
}

}  // namespace tvfx::nn
