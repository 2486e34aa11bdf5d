// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_CRC32C_HPP
#define OMRX_CRC32C_HPP

#include <cstddef>
#include <cstdint>

namespace omrx {

/// CRC-32C (Castagnoli). crc32c("123456789") == 0xE3069283.
std::uint32_t crc32c(const void* data, std::size_t len,
                     std::uint32_t seed = 0);

}  // namespace omrx

#endif  // OMRX_CRC32C_HPP
