#pragma once

#include <cstdint>

namespace padic_solve {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

} // namespace padic_solve
